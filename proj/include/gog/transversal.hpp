#pragma once

#include <vector>

#include "gog/group.hpp"

namespace gog {

// Right coset decomposition of a group along a subgroup: every g factors
// uniquely as g = s * r with s in the subgroup and r the coset representative.
// reps[0] is the identity, and the reps are chosen by an ascending sweep so
// the decomposition is deterministic.
struct CosetTransversal {
  GroupPtr group;
  std::vector<Elt> subgroup;     // sorted ascending, subgroup[0] == identity
  std::vector<Elt> reps;         // reps[0] == identity
  std::vector<int> rep_index_of; // g -> index into reps of its coset rep
  std::vector<int> sub_index_of; // g -> index into subgroup of its subgroup part

  Elt rep_of(Elt g) const { return reps[rep_index_of[g]]; }
  Elt sub_part_of(Elt g) const { return subgroup[sub_index_of[g]]; }
  bool in_subgroup(Elt g) const { return rep_index_of[g] == 0; }
  int index() const { return static_cast<int>(reps.size()); }
};

// Throws not_a_subgroup when the element list is not a subgroup.
CosetTransversal right_transversal(const GroupPtr& group, std::vector<Elt> subgroup);

}  // namespace gog
