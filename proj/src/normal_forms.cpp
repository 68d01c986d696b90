#include "gog/normal_forms.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <string>

namespace gog {

std::vector<FpLetter> free_product_normal_form(const WedgeSpec& wedge,
                                               const std::vector<FpLetter>& letters) {
  const int factors = static_cast<int>(wedge.groups.size());
  std::vector<FpLetter> stack;
  for (const FpLetter& raw : letters) {
    if (raw.index < 0 || raw.index >= factors)
      fail(errc::bad_letter, "factor index " + std::to_string(raw.index) + " out of range");
    const FiniteGroup& g = *wedge.groups[raw.index];
    if (raw.elt < 0 || raw.elt >= g.order)
      fail(errc::bad_letter, "element " + std::to_string(raw.elt) + " out of range for factor " +
                                 std::to_string(raw.index));
    FpLetter cur = raw;
    // Merge into the top of the stack while factors collide; identities vanish
    // and may expose a new collision underneath.
    for (;;) {
      if (cur.elt == FiniteGroup::identity) break;
      if (stack.empty() || stack.back().index != cur.index) {
        stack.push_back(cur);
        break;
      }
      cur.elt = wedge.groups[cur.index]->times(stack.back().elt, cur.elt);
      stack.pop_back();
    }
  }
  return stack;
}

long long un_count(int factor_count, int n) {
  if (n < 0) fail(errc::bad_shape, "length must be nonnegative");
  if (factor_count <= 0) fail(errc::bad_shape, "factor count must be positive");
  if (n == 0) return 1;
  long long out = factor_count;
  const long long step = factor_count - 1;
  for (int i = 1; i < n; ++i) {
    if (step != 0 && out > std::numeric_limits<long long>::max() / step)
      fail(errc::overflow, "count does not fit in 64 bits");
    out *= step;
  }
  return out;
}

std::vector<long long> splitting_census(const WedgeSpec& wedge, int max_length,
                                        long long budget) {
  if (max_length < 0) fail(errc::bad_shape, "length must be nonnegative");
  std::vector<long long> counts(max_length + 1, 0);
  counts[0] = 1;
  long long total = 1;
  // Layered walk over admissible index lists; weight multiplies the number of
  // nonidentity choices at each position.
  struct Node {
    int last;
    long long weight;
  };
  std::vector<Node> layer = {{-1, 1}};
  for (int len = 1; len <= max_length; ++len) {
    std::vector<Node> next;
    for (const Node& node : layer) {
      for (int i = 0; i < static_cast<int>(wedge.groups.size()); ++i) {
        if (i == node.last) continue;
        long long options = wedge.groups[i]->order - 1;
        if (options == 0) continue;
        long long weight = node.weight * options;
        counts[len] += weight;
        total += weight;
        if (total > budget)
          fail(errc::budget_exceeded, "splitting census passed the budget of " +
                                          std::to_string(budget) + " elements");
        next.push_back({i, weight});
      }
    }
    layer = std::move(next);
  }
  return counts;
}

namespace {

void check_step(const Multigraph& mg, const PathStep& s) {
  if (s.edge < 0 || s.edge >= static_cast<int>(mg.edges.size()))
    fail(errc::broken_chain, "edge " + std::to_string(s.edge) + " out of range");
  if (s.sign != 1 && s.sign != -1) fail(errc::broken_chain, "sign must be +1 or -1");
}

int step_from(const Multigraph& mg, const PathStep& s) {
  return s.sign > 0 ? mg.edges[s.edge].second : mg.edges[s.edge].first;
}

int step_to(const Multigraph& mg, const PathStep& s) {
  return s.sign > 0 ? mg.edges[s.edge].first : mg.edges[s.edge].second;
}

std::vector<std::vector<int>> components(const Multigraph& mg) {
  std::vector<std::vector<int>> adj(mg.vertex_count);
  for (const auto& [s, t] : mg.edges) {
    if (s < 0 || s >= mg.vertex_count || t < 0 || t >= mg.vertex_count)
      fail(errc::dangling_edge, "edge endpoint out of range");
    adj[s].push_back(t);
    adj[t].push_back(s);
  }
  return adj;
}

std::vector<char> component_of(const Multigraph& mg, int vertex) {
  auto adj = components(mg);
  if (vertex < 0 || vertex >= mg.vertex_count) fail(errc::bad_shape, "vertex out of range");
  std::vector<char> in(mg.vertex_count, 0);
  std::queue<int> queue;
  in[vertex] = 1;
  queue.push(vertex);
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop();
    for (int u : adj[v])
      if (!in[u]) {
        in[u] = 1;
        queue.push(u);
      }
  }
  return in;
}

}  // namespace

ReducedPath reduce_path(const Multigraph& mg, int start, const std::vector<PathStep>& steps) {
  if (start < 0 || start >= mg.vertex_count) fail(errc::broken_chain, "start vertex out of range");
  int at = start;
  std::vector<PathStep> stack;
  for (const PathStep& s : steps) {
    check_step(mg, s);
    if (step_from(mg, s) != at)
      fail(errc::broken_chain, "step through edge " + std::to_string(s.edge) +
                                   " does not continue from vertex " + std::to_string(at));
    at = step_to(mg, s);
    if (!stack.empty() && stack.back().edge == s.edge && stack.back().sign == -s.sign)
      stack.pop_back();
    else
      stack.push_back(s);
  }
  return {start, std::move(stack)};
}

int path_end(const Multigraph& mg, const ReducedPath& p) {
  int at = p.start;
  for (const PathStep& s : p.steps) at = step_to(mg, s);
  return at;
}

int pi1_rank(const Multigraph& mg, int vertex) {
  std::vector<char> in = component_of(mg, vertex);
  int vcount = 0;
  for (char c : in) vcount += c;
  int ecount = 0;
  for (const auto& [s, t] : mg.edges) {
    (void)t;
    if (in[s]) ++ecount;
  }
  return ecount - vcount + 1;
}

std::optional<int> pi1_rank_global(const Multigraph& mg) {
  if (!is_connected(mg)) return std::nullopt;
  return static_cast<int>(mg.edges.size()) - mg.vertex_count + 1;
}

bool is_connected(const Multigraph& mg) {
  if (mg.vertex_count <= 0) fail(errc::bad_shape, "multigraph needs at least one vertex");
  std::vector<char> in = component_of(mg, 0);
  return std::all_of(in.begin(), in.end(), [](char c) { return c != 0; });
}

bool is_tree(const Multigraph& mg) {
  return is_connected(mg) && static_cast<int>(mg.edges.size()) == mg.vertex_count - 1;
}

}  // namespace gog
