#include "gog/transversal.hpp"

#include <algorithm>
#include <string>

namespace gog {

CosetTransversal right_transversal(const GroupPtr& group, std::vector<Elt> subgroup) {
  std::sort(subgroup.begin(), subgroup.end());
  subgroup.erase(std::unique(subgroup.begin(), subgroup.end()), subgroup.end());
  if (subgroup.empty() || subgroup[0] != FiniteGroup::identity)
    fail(errc::not_a_subgroup, "missing identity");
  for (Elt s : subgroup)
    if (s < 0 || s >= group->order) fail(errc::not_a_subgroup, "element out of range");
  std::vector<char> member(group->order, 0);
  for (Elt s : subgroup) member[s] = 1;
  for (Elt s : subgroup) {
    if (!member[group->inverse(s)])
      fail(errc::not_a_subgroup, "not closed under inverse at " + std::to_string(s));
    for (Elt t : subgroup)
      if (!member[group->times(s, t)])
        fail(errc::not_a_subgroup,
             "not closed under product at (" + std::to_string(s) + ", " + std::to_string(t) + ")");
  }

  CosetTransversal tr;
  tr.group = group;
  tr.subgroup = std::move(subgroup);
  tr.rep_index_of.assign(group->order, -1);
  tr.sub_index_of.assign(group->order, -1);
  // Ascending sweep: the first unassigned element is the minimal member of a
  // fresh right coset and becomes its representative.
  for (Elt g = 0; g < group->order; ++g) {
    if (tr.rep_index_of[g] >= 0) continue;
    const int rep_index = static_cast<int>(tr.reps.size());
    tr.reps.push_back(g);
    for (int si = 0; si < static_cast<int>(tr.subgroup.size()); ++si) {
      Elt x = group->times(tr.subgroup[si], g);
      if (tr.rep_index_of[x] >= 0)
        fail(errc::consistency, "coset overlap at " + std::to_string(x));
      tr.rep_index_of[x] = rep_index;
      tr.sub_index_of[x] = si;
    }
  }
  return tr;
}

}  // namespace gog
