#include "gog/oracle.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <queue>
#include <set>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "gog/reduce.hpp"

namespace gog {

namespace {

std::string i128_str(__int128 v) {
  if (v == 0) return "0";
  const bool neg = v < 0;
  unsigned __int128 u = neg ? static_cast<unsigned __int128>(-(v + 1)) + 1
                            : static_cast<unsigned __int128>(v);
  std::string out;
  while (u != 0) {
    out.push_back(static_cast<char>('0' + static_cast<int>(u % 10)));
    u /= 10;
  }
  if (neg) out.push_back('-');
  std::reverse(out.begin(), out.end());
  return out;
}

// Entries stay far below this for any radius the tools accept; beyond it the
// exact arithmetic can no longer be trusted.
void guard_entries(const Mat2& m) {
  const __int128 bound = static_cast<__int128>(1) << 100;
  const auto bad = [&](__int128 x) { return x > bound || x < -bound; };
  if (bad(m.a) || bad(m.b) || bad(m.c) || bad(m.d))
    fail(errc::overflow, "matrix entries passed the exact range");
}

Mat2 canonical_sign(const Mat2& m) {
  __int128 lead = m.a;
  if (lead == 0) lead = m.b;
  if (lead == 0) lead = m.c;
  if (lead == 0) lead = m.d;
  if (lead < 0) return Mat2{-m.a, -m.b, -m.c, -m.d};
  return m;
}

template <class T>
const T& as(const ModelValue& v) {
  const T* p = std::get_if<T>(&v);
  if (p == nullptr) fail(errc::bad_shape, "model value has the wrong kind");
  return *p;
}

bool kind_matches(ModelKind k, const ModelValue& v) {
  switch (k) {
    case ModelKind::integer_affine:
      return std::holds_alternative<AffineMap>(v);
    case ModelKind::integer_matrix_2x2:
      return std::holds_alternative<Mat2>(v);
    case ModelKind::semidirect_finite_by_z:
      return std::holds_alternative<SemiPair>(v);
  }
  return false;
}

int twist_order(const std::vector<Elt>& tw) {
  const int n = static_cast<int>(tw.size());
  std::vector<Elt> id(n);
  std::iota(id.begin(), id.end(), 0);
  std::vector<Elt> p = tw;
  int ord = 1;
  while (p != id) {
    std::vector<Elt> q(n);
    for (int i = 0; i < n; ++i) {
      if (p[i] < 0 || p[i] >= n) fail(errc::bad_shape, "twist is not a permutation");
      q[i] = tw[p[i]];
    }
    p = std::move(q);
    if (++ord > 1'000'000) fail(errc::consistency, "twist has no finite order");
  }
  return ord;
}

Elt twist_pow(const ConcreteModel& model, long long k, Elt a) {
  const std::vector<Elt>& tw = model.twist;
  if (tw.empty()) fail(errc::bad_shape, "semidirect model needs a twist");
  if (a < 0 || a >= static_cast<Elt>(tw.size()))
    fail(errc::bad_shape, "semidirect value out of range");
  const int ord = twist_order(tw);
  long long r = k % ord;
  if (r < 0) r += ord;
  Elt out = a;
  for (long long i = 0; i < r; ++i) out = tw[out];
  return out;
}

}  // namespace

ModelValue ConcreteModel::identity() const {
  switch (kind) {
    case ModelKind::integer_affine:
      return AffineMap{1, 0};
    case ModelKind::integer_matrix_2x2:
      return Mat2{};
    case ModelKind::semidirect_finite_by_z:
      return SemiPair{0, 0};
  }
  fail(errc::bad_shape, "unknown model kind");
}

ModelValue ConcreteModel::mul(const ModelValue& x, const ModelValue& y) const {
  switch (kind) {
    case ModelKind::integer_affine: {
      const AffineMap& p = as<AffineMap>(x);
      const AffineMap& q = as<AffineMap>(y);
      return AffineMap{p.sign * q.sign, p.sign * q.shift + p.shift};
    }
    case ModelKind::integer_matrix_2x2: {
      const Mat2& p = as<Mat2>(x);
      const Mat2& q = as<Mat2>(y);
      Mat2 m;
      m.a = p.a * q.a + p.b * q.c;
      m.b = p.a * q.b + p.b * q.d;
      m.c = p.c * q.a + p.d * q.c;
      m.d = p.c * q.b + p.d * q.d;
      guard_entries(m);
      return m;
    }
    case ModelKind::semidirect_finite_by_z: {
      const SemiPair& p = as<SemiPair>(x);
      const SemiPair& q = as<SemiPair>(y);
      if (!base) fail(errc::bad_shape, "semidirect model needs a base group");
      return SemiPair{base->times(p.a, twist_pow(*this, p.k, q.a)), p.k + q.k};
    }
  }
  fail(errc::bad_shape, "unknown model kind");
}

ModelValue ConcreteModel::inv(const ModelValue& x) const {
  switch (kind) {
    case ModelKind::integer_affine: {
      const AffineMap& p = as<AffineMap>(x);
      return AffineMap{p.sign, -p.sign * p.shift};
    }
    case ModelKind::integer_matrix_2x2: {
      const Mat2& p = as<Mat2>(x);
      const __int128 det = p.a * p.d - p.b * p.c;
      if (det == 1) return Mat2{p.d, -p.b, -p.c, p.a};
      if (det == -1) return Mat2{-p.d, p.b, p.c, -p.a};
      fail(errc::consistency, "matrix is not invertible over the integers");
    }
    case ModelKind::semidirect_finite_by_z: {
      const SemiPair& p = as<SemiPair>(x);
      if (!base) fail(errc::bad_shape, "semidirect model needs a base group");
      return SemiPair{twist_pow(*this, -p.k, base->inverse(p.a)), -p.k};
    }
  }
  fail(errc::bad_shape, "unknown model kind");
}

std::string ConcreteModel::value_key(const ModelValue& v) const {
  switch (kind) {
    case ModelKind::integer_affine: {
      const AffineMap& p = as<AffineMap>(v);
      return "[" + std::to_string(p.sign) + "," + std::to_string(p.shift) + "]";
    }
    case ModelKind::integer_matrix_2x2: {
      Mat2 m = as<Mat2>(v);
      if (projective) m = canonical_sign(m);
      return "[" + i128_str(m.a) + "," + i128_str(m.b) + "," + i128_str(m.c) + "," +
             i128_str(m.d) + "]";
    }
    case ModelKind::semidirect_finite_by_z: {
      const SemiPair& p = as<SemiPair>(v);
      return "[" + std::to_string(p.a) + "," + std::to_string(p.k) + "]";
    }
  }
  fail(errc::bad_shape, "unknown model kind");
}

void verify_model(const ConcreteModel& model) {
  if (!model.spec) fail(errc::bad_shape, "model has no spec");
  const GraphOfGroups& g = *model.spec;
  if (static_cast<int>(model.vertex_images.size()) != g.vertex_count())
    fail(errc::bad_shape, "model needs one image table per vertex");
  if (static_cast<int>(model.edge_images.size()) != g.edge_count())
    fail(errc::bad_shape, "model needs one stable letter per edge");

  if (model.kind == ModelKind::semidirect_finite_by_z) {
    if (!model.base) fail(errc::bad_shape, "semidirect model needs a base group");
    const FiniteGroup& base = *model.base;
    if (static_cast<int>(model.twist.size()) != base.order)
      fail(errc::bad_shape, "twist must cover the base group");
    std::vector<Elt> sorted = model.twist;
    std::sort(sorted.begin(), sorted.end());
    for (int i = 0; i < base.order; ++i)
      if (sorted[i] != i) fail(errc::bad_shape, "twist is not a permutation");
    if (model.twist[base.identity] != base.identity)
      fail(errc::oracle_mismatch, "twist moves the identity");
    for (Elt a = 0; a < base.order; ++a)
      for (Elt b = 0; b < base.order; ++b)
        if (model.twist[base.times(a, b)] != base.times(model.twist[a], model.twist[b]))
          fail(errc::oracle_mismatch, "twist is not an automorphism");
  }

  const auto check_value = [&](const ModelValue& v, const std::string& where) {
    if (!kind_matches(model.kind, v))
      fail(errc::bad_shape, where + " has the wrong value kind");
    if (model.kind == ModelKind::integer_affine) {
      const AffineMap& p = as<AffineMap>(v);
      if (p.sign != 1 && p.sign != -1) fail(errc::bad_shape, where + " has a bad sign");
    } else if (model.kind == ModelKind::integer_matrix_2x2) {
      const Mat2& m = as<Mat2>(v);
      guard_entries(m);
      const __int128 det = m.a * m.d - m.b * m.c;
      if (det != 1 && det != -1)
        fail(errc::oracle_mismatch, where + " is not invertible over the integers");
    } else {
      const SemiPair& p = as<SemiPair>(v);
      if (!model.base || p.a < 0 || p.a >= model.base->order)
        fail(errc::bad_shape, where + " is out of range for the base group");
    }
  };

  for (int v = 0; v < g.vertex_count(); ++v) {
    const FiniteGroup& gv = *g.vertex_groups[v];
    const std::vector<ModelValue>& imgs = model.vertex_images[v];
    if (static_cast<int>(imgs.size()) != gv.order)
      fail(errc::bad_shape, "vertex " + std::to_string(v) + " image table has the wrong size");
    for (Elt a = 0; a < gv.order; ++a)
      check_value(imgs[a], "vertex " + std::to_string(v) + " image of " + std::to_string(a));
    if (model.value_key(imgs[gv.identity]) != model.value_key(model.identity()))
      fail(errc::oracle_mismatch,
           "vertex " + std::to_string(v) + " image does not fix the identity");
    for (Elt a = 0; a < gv.order; ++a)
      for (Elt b = 0; b < gv.order; ++b)
        if (model.value_key(model.mul(imgs[a], imgs[b])) !=
            model.value_key(imgs[gv.times(a, b)]))
          fail(errc::oracle_mismatch, "vertex " + std::to_string(v) +
                                          " images break the product of " + std::to_string(a) +
                                          " and " + std::to_string(b));
  }

  for (int e = 0; e < g.edge_count(); ++e) {
    const Edge& edge = g.edges[e];
    check_value(model.edge_images[e], "stable letter of edge " + std::to_string(e));
    const ModelValue& t = model.edge_images[e];
    const ModelValue t_inv = model.inv(t);
    for (Elt h = 0; h < edge.group->order; ++h) {
      const ModelValue lhs =
          model.mul(model.mul(t, model.vertex_images[edge.src][edge.alpha.apply(h)]), t_inv);
      const ModelValue rhs = model.vertex_images[edge.tgt][edge.beta.apply(h)];
      if (model.value_key(lhs) != model.value_key(rhs))
        fail(errc::oracle_mismatch, "stable letter of edge " + std::to_string(e) +
                                        " does not carry the source image of " +
                                        std::to_string(h) + " to the target image");
    }
  }
}

ModelValue eval_word(const ConcreteModel& model, const Word& w) {
  if (!model.spec || w.spec != model.spec)
    fail(errc::spec_mismatch, "word and model use different specs");
  validate_word(w);
  const GraphOfGroups& g = *model.spec;
  ModelValue acc = model.vertex_images[w.start][w.head];
  for (const Syllable& s : w.syllables) {
    const ModelValue& t = model.edge_images[s.edge];
    acc = model.mul(acc, s.sign > 0 ? t : model.inv(t));
    const VertexId at = g.arrive_vertex(s.edge, s.sign);
    acc = model.mul(acc, model.vertex_images[at][s.elt]);
  }
  return acc;
}

void verify_faithful(const ConcreteModel& model, int radius, long long budget) {
  verify_model(model);
  if (radius < 0) fail(errc::bad_stage, "radius must be nonnegative");
  const GraphOfGroups& g = *model.spec;
  CensusOptions options;
  options.budget = budget;
  options.store_reps = true;
  long long processed = 0;
  for (int u = 0; u < g.vertex_count(); ++u) {
    for (int v = 0; v < g.vertex_count(); ++v) {
      const Basepoint from = Basepoint::vertex(u);
      const Basepoint to = Basepoint::vertex(v);
      const StagePattern pat = stage_pattern(model.spec, from, to);
      if (pat.first_stage < 0 || pat.first_stage > radius) continue;
      const int stage_count = (radius - pat.first_stage) / pat.step + 1;
      const Filtration f = filtration(model.spec, from, to, stage_count, options);
      // value key -> printable word, per basepoint pair
      std::unordered_map<std::string, std::string> seen;
      for (const std::vector<FibreWord>& reps : f.representatives) {
        for (const FibreWord& rep : reps) {
          if (++processed > budget)
            fail(errc::budget_exceeded, "faithfulness sweep passed the budget");
          const std::string vk = model.value_key(eval_word(model, rep.core));
          const std::string shown = format_word(rep.core);
          const auto [it, fresh] = seen.emplace(vk, shown);
          if (!fresh)
            fail(errc::oracle_mismatch, "distinct classes share the value " + vk + ": '" +
                                            it->second + "' and '" + shown + "'");
        }
      }
    }
  }
}

BallCensus ball_enumerate(const ConcreteModel& model, VertexId basepoint, int radius,
                          long long budget) {
  if (!model.spec) fail(errc::bad_shape, "model has no spec");
  const GraphOfGroups& g = *model.spec;
  if (basepoint < 0 || basepoint >= g.vertex_count())
    fail(errc::bad_shape, "basepoint out of range");
  if (radius < 0) fail(errc::bad_stage, "radius must be nonnegative");

  BallCensus out;
  out.radius = radius;
  out.new_at_base.assign(static_cast<size_t>(radius) + 1, 0);

  struct State {
    VertexId at;
    ModelValue val;
  };
  std::unordered_set<std::string> visited;
  std::vector<State> frontier;
  long long states = 0;

  const auto admit = [&](VertexId at, ModelValue val, int depth, std::vector<State>& sink) {
    const std::string vk = model.value_key(val);
    if (!visited.insert(std::to_string(at) + "|" + vk).second) return;
    if (++states > budget) fail(errc::budget_exceeded, "ball enumeration passed the budget");
    if (at == basepoint && out.first_length.emplace(vk, depth).second)
      ++out.new_at_base[depth];
    sink.push_back(State{at, std::move(val)});
  };

  for (Elt a = 0; a < g.vertex_groups[basepoint]->order; ++a)
    admit(basepoint, model.vertex_images[basepoint][a], 0, frontier);

  for (int depth = 1; depth <= radius; ++depth) {
    std::vector<State> next;
    for (const State& s : frontier) {
      for (const Departure& d : g.departures[s.at]) {
        const ModelValue& t = model.edge_images[d.edge];
        const ModelValue crossed = model.mul(s.val, d.sign > 0 ? t : model.inv(t));
        const VertexId to = g.arrive_vertex(d.edge, d.sign);
        for (const ModelValue& gi : model.vertex_images[to])
          admit(to, model.mul(crossed, gi), depth, next);
      }
    }
    frontier = std::move(next);
  }
  return out;
}

bool reduction_order_oracle(const Word& w, long long budget) {
  validate_word(w);
  std::unordered_map<std::string, std::set<std::string>> memo;
  long long nodes = 0;
  const std::function<const std::set<std::string>&(const Word&)> explore =
      [&](const Word& cur) -> const std::set<std::string>& {
    std::string key = word_key(cur);
    const auto hit = memo.find(key);
    if (hit != memo.end()) return hit->second;
    if (++nodes > budget) fail(errc::budget_exceeded, "reduction exploration passed the budget");
    std::set<std::string> terminals;
    const std::vector<Pinch> pinches = find_pinches(cur);
    if (pinches.empty()) {
      terminals.insert(word_key(slide_canonicalize(cur)));
    } else {
      for (const Pinch& p : pinches) {
        const std::set<std::string>& sub = explore(reduce_once(cur, p));
        terminals.insert(sub.begin(), sub.end());
      }
    }
    return memo.emplace(std::move(key), std::move(terminals)).first->second;
  };
  return explore(w).size() == 1;
}

int spanning_tree_pi1(const Multigraph& mg, int vertex) {
  if (vertex < 0 || vertex >= mg.vertex_count) fail(errc::bad_shape, "basepoint out of range");
  const int n = mg.vertex_count;
  for (const auto& [a, b] : mg.edges)
    if (a < 0 || a >= n || b < 0 || b >= n)
      fail(errc::dangling_edge, "edge endpoint out of range");

  std::vector<std::vector<std::pair<int, int>>> adj(n);
  for (int i = 0; i < static_cast<int>(mg.edges.size()); ++i) {
    const auto& [a, b] = mg.edges[i];
    adj[a].push_back({b, i});
    if (b != a) adj[b].push_back({a, i});
  }

  std::vector<char> seen(n, 0);
  std::vector<char> tree(mg.edges.size(), 0);
  std::queue<int> q;
  seen[vertex] = 1;
  q.push(vertex);
  while (!q.empty()) {
    const int v = q.front();
    q.pop();
    for (const auto& [u, ei] : adj[v]) {
      if (seen[u]) continue;
      seen[u] = 1;
      tree[ei] = 1;
      q.push(u);
    }
  }

  int extra = 0;
  for (int i = 0; i < static_cast<int>(mg.edges.size()); ++i)
    if (seen[mg.edges[i].first] && !tree[i]) ++extra;
  return extra;
}

}  // namespace gog
