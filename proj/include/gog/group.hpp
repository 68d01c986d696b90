#pragma once

#include <memory>
#include <vector>

#include "gog/errors.hpp"

namespace gog {

using Elt = int;

// Finite group given by its full multiplication table. Element 0 is always
// the identity; validate_group enforces that before anything else relies on it.
struct FiniteGroup {
  int order = 0;
  std::vector<std::vector<Elt>> mul;
  std::vector<Elt> inv;

  static constexpr Elt identity = 0;

  Elt times(Elt a, Elt b) const { return mul[a][b]; }
  Elt inverse(Elt a) const { return inv[a]; }
  bool contains(Elt a) const { return 0 <= a && a < order; }
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

// Checks shape, identity at index 0, inverses, then associativity.
// Throws error with the matching errc on the first violation found.
GroupPtr validate_group(const std::vector<std::vector<Elt>>& table);

GroupPtr trivial_group();
GroupPtr cyclic_group(int n);
GroupPtr direct_product(const GroupPtr& a, const GroupPtr& b);

int element_order(const FiniteGroup& g, Elt a);

// Closure of the given elements under multiplication, returned sorted.
std::vector<Elt> generated_subgroup(const FiniteGroup& g, const std::vector<Elt>& gens);

}  // namespace gog
