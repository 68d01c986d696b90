#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gog/census.hpp"

namespace gog {

// Element of a free product of finite groups: nonempty letters from factor
// `index`, adjacent letters from distinct factors.
struct FpLetter {
  int index = 0;
  Elt elt = 0;

  bool operator==(const FpLetter& o) const { return index == o.index && elt == o.elt; }
};

// Merges adjacent letters from the same factor and drops identities.
// Throws bad_letter on out-of-range input.
std::vector<FpLetter> free_product_normal_form(const WedgeSpec& wedge,
                                               const std::vector<FpLetter>& letters);

// Number of index lists of length n with no two adjacent entries equal:
// 1 for n == 0, otherwise I * (I - 1)^(n-1).
long long un_count(int factor_count, int n);

// Number of free product elements of each syllable length 0..max_length,
// computed by explicit enumeration of the admissible index lists weighted by
// the nonidentity element counts. Throws budget_exceeded past the budget.
std::vector<long long> splitting_census(const WedgeSpec& wedge, int max_length,
                                        long long budget = 1'000'000);

struct PathStep {
  EdgeId edge = 0;
  int sign = 0;

  bool operator==(const PathStep& o) const { return edge == o.edge && sign == o.sign; }
};

struct ReducedPath {
  int start = 0;
  std::vector<PathStep> steps;
};

// Free reduction of an edge path in a multigraph: cancels immediate
// backtracks. Throws broken_chain when consecutive steps do not share a vertex.
ReducedPath reduce_path(const Multigraph& mg, int start, const std::vector<PathStep>& steps);

int path_end(const Multigraph& mg, const ReducedPath& p);

// Rank of the fundamental group at a vertex: edges - vertices + 1 for the
// component containing v.
int pi1_rank(const Multigraph& mg, int vertex);
// nullopt when the graph is disconnected.
std::optional<int> pi1_rank_global(const Multigraph& mg);

bool is_connected(const Multigraph& mg);
bool is_tree(const Multigraph& mg);

}  // namespace gog
