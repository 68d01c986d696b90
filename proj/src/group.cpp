#include "gog/group.hpp"

#include <algorithm>
#include <string>

namespace gog {

namespace {

std::string tag(int a, int b) { return "(" + std::to_string(a) + ", " + std::to_string(b) + ")"; }

std::string tag(int a, int b, int c) {
  return "(" + std::to_string(a) + ", " + std::to_string(b) + ", " + std::to_string(c) + ")";
}

}  // namespace

GroupPtr validate_group(const std::vector<std::vector<Elt>>& table) {
  const int n = static_cast<int>(table.size());
  if (n == 0) fail(errc::bad_shape, "empty multiplication table");
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(table[i].size()) != n)
      fail(errc::bad_shape, "row " + std::to_string(i) + " has " +
                                std::to_string(table[i].size()) + " entries, expected " +
                                std::to_string(n));
    for (int j = 0; j < n; ++j)
      if (table[i][j] < 0 || table[i][j] >= n)
        fail(errc::bad_shape, "entry out of range at " + tag(i, j));
  }

  for (int i = 0; i < n; ++i) {
    if (table[0][i] != i) fail(errc::no_identity, "0 is not a left identity at element " + std::to_string(i));
    if (table[i][0] != i) fail(errc::no_identity, "0 is not a right identity at element " + std::to_string(i));
  }

  // Inverses before associativity: a table failing both reports the
  // cheaper-to-state violation.
  std::vector<Elt> inv(n, -1);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (table[a][b] == 0 && table[b][a] == 0) {
        inv[a] = b;
        break;
      }
    }
    if (inv[a] < 0) fail(errc::no_inverse, "element " + std::to_string(a) + " has no two-sided inverse");
  }

  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (table[table[a][b]][c] != table[a][table[b][c]])
          fail(errc::not_associative, "triple " + tag(a, b, c));

  auto g = std::make_shared<FiniteGroup>();
  g->order = n;
  g->mul = table;
  g->inv = std::move(inv);
  return g;
}

GroupPtr trivial_group() {
  static const GroupPtr g = validate_group({{0}});
  return g;
}

GroupPtr cyclic_group(int n) {
  if (n <= 0) fail(errc::bad_shape, "cyclic group order must be positive");
  std::vector<std::vector<Elt>> table(n, std::vector<Elt>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) table[i][j] = (i + j) % n;
  return validate_group(table);
}

GroupPtr direct_product(const GroupPtr& a, const GroupPtr& b) {
  const int n = a->order * b->order;
  auto code = [&](Elt x, Elt y) { return x * b->order + y; };
  std::vector<std::vector<Elt>> table(n, std::vector<Elt>(n));
  for (Elt x1 = 0; x1 < a->order; ++x1)
    for (Elt y1 = 0; y1 < b->order; ++y1)
      for (Elt x2 = 0; x2 < a->order; ++x2)
        for (Elt y2 = 0; y2 < b->order; ++y2)
          table[code(x1, y1)][code(x2, y2)] = code(a->times(x1, x2), b->times(y1, y2));
  return validate_group(table);
}

int element_order(const FiniteGroup& g, Elt a) {
  int k = 1;
  Elt x = a;
  while (x != FiniteGroup::identity) {
    x = g.times(x, a);
    ++k;
  }
  return k;
}

std::vector<Elt> generated_subgroup(const FiniteGroup& g, const std::vector<Elt>& gens) {
  std::vector<char> seen(g.order, 0);
  seen[FiniteGroup::identity] = 1;
  std::vector<Elt> frontier = {FiniteGroup::identity};
  while (!frontier.empty()) {
    Elt x = frontier.back();
    frontier.pop_back();
    for (Elt s : gens) {
      Elt y = g.times(x, s);
      if (!seen[y]) {
        seen[y] = 1;
        frontier.push_back(y);
      }
    }
  }
  std::vector<Elt> out;
  for (Elt x = 0; x < g.order; ++x)
    if (seen[x]) out.push_back(x);
  return out;
}

}  // namespace gog
