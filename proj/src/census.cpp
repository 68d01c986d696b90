#include "gog/census.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <limits>
#include <queue>
#include <set>
#include <sstream>
#include <string>

namespace gog {

namespace {

constexpr int kInf = std::numeric_limits<int>::max() / 2;

// Halves of an edge: 0 is the source end, 1 the target end. A +1 crossing
// departs the target half and exits through the source half.
int exit_half(int sign) { return sign > 0 ? 0 : 1; }
int entry_half(int sign) { return sign > 0 ? 1 : 0; }

VertexId half_vertex(const GraphOfGroups& g, EdgeId e, int half) {
  return half == 0 ? g.edges[e].src : g.edges[e].tgt;
}

// Witness h with phi_half(h) == x, or -1 when x is outside the image.
Elt half_pre(const GraphOfGroups& g, EdgeId e, int half, Elt x) {
  return half == 0 ? g.edges[e].alpha_pre[x] : g.edges[e].beta_pre[x];
}

Elt half_img(const GraphOfGroups& g, EdgeId e, int half, Elt h) {
  return half == 0 ? g.edges[e].alpha.apply(h) : g.edges[e].beta.apply(h);
}

std::vector<VertexId> basepoint_vertices(const GraphOfGroups& g, const Basepoint& b) {
  if (b.side == Basepoint::Side::vertex) return {b.id};
  VertexId s = half_vertex(g, b.id, 0);
  VertexId t = half_vertex(g, b.id, 1);
  if (s == t) return {s};
  return {s, t};
}

void check_basepoint(const GraphOfGroups& g, const Basepoint& b) {
  int limit = b.side == Basepoint::Side::vertex ? g.vertex_count() : g.edge_count();
  if (b.id < 0 || b.id >= limit)
    fail(errc::bad_shape, "basepoint " + basepoint_name(b) + " out of range");
}

// Shortest walk length of each parity from every vertex to the accept set.
// Walks may cross any edge in either direction.
std::vector<std::array<int, 2>> parity_distances(const GraphOfGroups& g,
                                                 const std::vector<VertexId>& accept) {
  std::vector<std::array<int, 2>> dist(g.vertex_count(), {kInf, kInf});
  std::queue<std::pair<VertexId, int>> queue;
  for (VertexId v : accept)
    if (dist[v][0] == kInf) {
      dist[v][0] = 0;
      queue.push({v, 0});
    }
  while (!queue.empty()) {
    auto [v, p] = queue.front();
    queue.pop();
    for (const Departure& d : g.departures[v]) {
      VertexId u = g.arrive_vertex(d.edge, d.sign);
      int q = 1 - p;
      if (dist[u][q] == kInf) {
        dist[u][q] = dist[v][p] + 1;
        queue.push({u, q});
      }
    }
  }
  return dist;
}

bool reachable_in(const std::vector<std::array<int, 2>>& dist, VertexId v, int remaining) {
  return remaining >= 0 && dist[v][remaining & 1] <= remaining;
}

struct HalfOption {
  EdgeId edge = -1;
  int half = -1;
};

struct EnumPlan {
  SpecPtr spec;
  Basepoint from;
  Basepoint to;
  int stage = 0;
  std::vector<std::array<int, 2>> dist;
  std::vector<HalfOption> starts;
};

EnumPlan make_plan(const SpecPtr& spec, const Basepoint& from, const Basepoint& to, int stage) {
  const GraphOfGroups& g = *spec;
  check_basepoint(g, from);
  check_basepoint(g, to);
  if (stage < 0) fail(errc::bad_stage, "stage must be nonnegative");
  EnumPlan plan;
  plan.spec = spec;
  plan.from = from;
  plan.to = to;
  plan.stage = stage;
  plan.dist = parity_distances(g, basepoint_vertices(g, to));
  if (from.side == Basepoint::Side::vertex) {
    plan.starts.push_back({-1, -1});
  } else {
    plan.starts.push_back({from.id, 0});
    plan.starts.push_back({from.id, 1});
  }
  return plan;
}

VertexId start_vertex_of(const GraphOfGroups& g, const Basepoint& from, const HalfOption& h) {
  return h.half < 0 ? from.id : half_vertex(g, h.edge, h.half);
}

// Emits every way to finish the walk at vertex v; end halves iterate in order
// so the overall output order never depends on scheduling.
template <typename Sink>
void emit_ends(const EnumPlan& plan, FibreWord& w, VertexId v, Sink&& sink) {
  const GraphOfGroups& g = *plan.spec;
  if (plan.to.side == Basepoint::Side::vertex) {
    if (v == plan.to.id) {
      w.end_edge = -1;
      w.end_half = -1;
      sink(w);
    }
    return;
  }
  for (int half = 0; half < 2; ++half) {
    if (half_vertex(g, plan.to.id, half) != v) continue;
    w.end_edge = plan.to.id;
    w.end_half = half;
    sink(w);
  }
}

// Depth-first expansion over canonical tuples: each crossing ranges over the
// departures of the current vertex, each absorbed element over the coset
// representatives of the crossing's exit subgroup. Distance pruning keeps
// only prefixes that can still reach the target, so every visited node leads
// to at least one emitted class.
template <typename Sink>
void dfs_expand(const EnumPlan& plan, FibreWord& w, VertexId v, int depth,
                const std::atomic<bool>* abort, Sink&& sink) {
  if (abort && abort->load(std::memory_order_relaxed)) return;
  const GraphOfGroups& g = *plan.spec;
  if (depth == plan.stage) {
    emit_ends(plan, w, v, sink);
    return;
  }
  int remaining = plan.stage - depth;
  for (const Departure& d : g.departures[v]) {
    VertexId u = g.arrive_vertex(d.edge, d.sign);
    if (!reachable_in(plan.dist, u, remaining - 1)) continue;
    const Edge& e = g.edges[d.edge];
    const CosetTransversal& tr = d.sign > 0 ? e.alpha_cosets : e.beta_cosets;
    w.core.syllables.push_back({d.edge, d.sign, 0});
    for (Elt rep : tr.reps) {
      w.core.syllables.back().elt = rep;
      dfs_expand(plan, w, u, depth + 1, abort, sink);
    }
    w.core.syllables.pop_back();
  }
}

template <typename Sink>
void run_from_starts(const EnumPlan& plan, const std::atomic<bool>* abort, Sink&& sink) {
  const GraphOfGroups& g = *plan.spec;
  for (const HalfOption& start : plan.starts) {
    VertexId v0 = start_vertex_of(g, plan.from, start);
    if (!reachable_in(plan.dist, v0, plan.stage)) continue;
    FibreWord w;
    w.core.spec = plan.spec;
    w.core.start = v0;
    w.start_edge = start.edge;
    w.start_half = start.half;
    const int order = g.vertex_groups[v0]->order;
    for (Elt head = 0; head < order; ++head) {
      w.core.head = head;
      dfs_expand(plan, w, v0, 0, abort, sink);
    }
  }
}

// Prefixes with exactly `seed` crossings, pruned by true remaining distance.
template <typename Sink>
void collect_prefixes(const EnumPlan& plan, FibreWord& w, VertexId v, int depth, int seed,
                      Sink&& sink) {
  const GraphOfGroups& g = *plan.spec;
  if (depth == seed) {
    sink(w, v);
    return;
  }
  int remaining = plan.stage - depth;
  for (const Departure& d : g.departures[v]) {
    VertexId u = g.arrive_vertex(d.edge, d.sign);
    if (!reachable_in(plan.dist, u, remaining - 1)) continue;
    const Edge& e = g.edges[d.edge];
    const CosetTransversal& tr = d.sign > 0 ? e.alpha_cosets : e.beta_cosets;
    w.core.syllables.push_back({d.edge, d.sign, 0});
    for (Elt rep : tr.reps) {
      w.core.syllables.back().elt = rep;
      collect_prefixes(plan, w, u, depth + 1, seed, sink);
    }
    w.core.syllables.pop_back();
  }
}

}  // namespace

bool has_any_pinch(const FibreWord& w) {
  const GraphOfGroups& g = *w.core.spec;
  if (!is_reduced(w.core)) return true;
  if (w.start_half >= 0 && !w.core.syllables.empty()) {
    const Syllable& s0 = w.core.syllables.front();
    if (s0.edge == w.start_edge && entry_half(s0.sign) == w.start_half &&
        half_pre(g, w.start_edge, w.start_half, w.core.head) >= 0)
      return true;
  }
  if (w.end_half >= 0 && !w.core.syllables.empty()) {
    const Syllable& sl = w.core.syllables.back();
    if (sl.edge == w.end_edge && exit_half(sl.sign) == w.end_half &&
        half_pre(g, w.end_edge, w.end_half, sl.elt) >= 0)
      return true;
  }
  if (w.start_half >= 0 && w.end_half >= 0 && w.core.syllables.empty() &&
      w.start_edge == w.end_edge && w.start_half == w.end_half &&
      half_pre(g, w.start_edge, w.start_half, w.core.head) >= 0)
    return true;
  return false;
}

EnumerateResult enumerate_stage_serial(const SpecPtr& spec, const Basepoint& from,
                                       const Basepoint& to, int stage,
                                       const CensusOptions& options) {
  EnumPlan plan = make_plan(spec, from, to, stage);
  EnumerateResult out;
  run_from_starts(plan, nullptr, [&](const FibreWord& w) {
    ++out.z_count;
    if (out.z_count > options.budget)
      fail(errc::budget_exceeded, "stage " + std::to_string(stage) + " passed the budget of " +
                                      std::to_string(options.budget) + " classes");
    bool j = has_any_pinch(w);
    if (j) ++out.j_count;
    if (options.store_reps) {
      out.z_classes.push_back(w);
      out.in_j.push_back(j ? 1 : 0);
    }
  });
  return out;
}

EnumerateResult enumerate_stage(const SpecPtr& spec, const Basepoint& from, const Basepoint& to,
                                int stage, const CensusOptions& options) {
  constexpr int seed_depth = 2;
  if (!options.parallel || stage <= seed_depth)
    return enumerate_stage_serial(spec, from, to, stage, options);

  EnumPlan plan = make_plan(spec, from, to, stage);
  const GraphOfGroups& g = *spec;

  struct Task {
    FibreWord prefix;
    VertexId at = 0;
  };
  std::vector<Task> tasks;
  for (const HalfOption& start : plan.starts) {
    VertexId v0 = start_vertex_of(g, plan.from, start);
    if (!reachable_in(plan.dist, v0, plan.stage)) continue;
    FibreWord w;
    w.core.spec = plan.spec;
    w.core.start = v0;
    w.start_edge = start.edge;
    w.start_half = start.half;
    const int order = g.vertex_groups[v0]->order;
    for (Elt head = 0; head < order; ++head) {
      w.core.head = head;
      collect_prefixes(plan, w, v0, 0, seed_depth,
                       [&](const FibreWord& p, VertexId at) { tasks.push_back({p, at}); });
    }
  }

  const int task_count = static_cast<int>(tasks.size());
  std::vector<EnumerateResult> partial(task_count);
  std::atomic<long long> emitted{0};
  std::atomic<bool> abort{false};

#pragma omp parallel for schedule(dynamic)
  for (int t = 0; t < task_count; ++t) {
    if (abort.load(std::memory_order_relaxed)) continue;
    EnumerateResult& local = partial[t];
    FibreWord w = tasks[t].prefix;
    dfs_expand(plan, w, tasks[t].at, seed_depth, &abort, [&](const FibreWord& done) {
      long long total = emitted.fetch_add(1, std::memory_order_relaxed) + 1;
      if (total > options.budget) {
        abort.store(true, std::memory_order_relaxed);
        return;
      }
      ++local.z_count;
      bool j = has_any_pinch(done);
      if (j) ++local.j_count;
      if (options.store_reps) {
        local.z_classes.push_back(done);
        local.in_j.push_back(j ? 1 : 0);
      }
    });
  }

  if (abort.load() || emitted.load() > options.budget)
    fail(errc::budget_exceeded, "stage " + std::to_string(stage) + " passed the budget of " +
                                    std::to_string(options.budget) + " classes");

  EnumerateResult out;
  for (const EnumerateResult& p : partial) {
    out.z_count += p.z_count;
    out.j_count += p.j_count;
    if (options.store_reps) {
      out.z_classes.insert(out.z_classes.end(), p.z_classes.begin(), p.z_classes.end());
      out.in_j.insert(out.in_j.end(), p.in_j.begin(), p.in_j.end());
    }
  }
  return out;
}

namespace {

FibreWord reduce_start(const FibreWord& w) {
  const GraphOfGroups& g = *w.core.spec;
  const Syllable s0 = w.core.syllables.front();
  Elt h = half_pre(g, w.start_edge, w.start_half, w.core.head);
  int new_half = exit_half(s0.sign);
  FibreWord out;
  out.start_edge = w.start_edge;
  out.start_half = new_half;
  out.end_edge = w.end_edge;
  out.end_half = w.end_half;
  out.core.spec = w.core.spec;
  out.core.start = half_vertex(g, w.start_edge, new_half);
  const FiniteGroup& vg = *g.vertex_groups[out.core.start];
  out.core.head = vg.times(half_img(g, w.start_edge, new_half, h), s0.elt);
  out.core.syllables.assign(w.core.syllables.begin() + 1, w.core.syllables.end());
  return out;
}

FibreWord reduce_end(const FibreWord& w) {
  const GraphOfGroups& g = *w.core.spec;
  const Syllable sl = w.core.syllables.back();
  Elt h = half_pre(g, w.end_edge, w.end_half, sl.elt);
  int new_half = entry_half(sl.sign);
  FibreWord out = w;
  out.core.syllables.pop_back();
  out.end_half = new_half;
  VertexId v = half_vertex(g, w.end_edge, new_half);
  const FiniteGroup& vg = *g.vertex_groups[v];
  Elt carry = half_img(g, w.end_edge, new_half, h);
  if (out.core.syllables.empty())
    out.core.head = vg.times(out.core.head, carry);
  else
    out.core.syllables.back().elt = vg.times(out.core.syllables.back().elt, carry);
  return out;
}

}  // namespace

FibreClass normalize_fibre(const FibreWord& w) {
  const GraphOfGroups& g = *w.core.spec;
  FibreWord cur = w;
  cur.core = slide_canonicalize(cur.core);
  for (;;) {
    auto pinches = find_pinches(cur.core);
    if (!pinches.empty()) {
      cur.core = slide_canonicalize(reduce_once(cur.core, pinches.front()));
      continue;
    }
    if (cur.start_half >= 0 && !cur.core.syllables.empty()) {
      const Syllable& s0 = cur.core.syllables.front();
      if (s0.edge == cur.start_edge && entry_half(s0.sign) == cur.start_half &&
          half_pre(g, cur.start_edge, cur.start_half, cur.core.head) >= 0) {
        cur = reduce_start(cur);
        cur.core = slide_canonicalize(cur.core);
        continue;
      }
    }
    if (cur.end_half >= 0 && !cur.core.syllables.empty()) {
      const Syllable& sl = cur.core.syllables.back();
      if (sl.edge == cur.end_edge && exit_half(sl.sign) == cur.end_half &&
          half_pre(g, cur.end_edge, cur.end_half, sl.elt) >= 0) {
        cur = reduce_end(cur);
        cur.core = slide_canonicalize(cur.core);
        continue;
      }
    }
    if (cur.start_half >= 0 && cur.end_half >= 0 && cur.core.syllables.empty() &&
        cur.start_edge == cur.end_edge && cur.start_half == cur.end_half) {
      Elt h = half_pre(g, cur.start_edge, cur.start_half, cur.core.head);
      if (h >= 0) return InsideEdge{cur.start_edge, h};
    }
    return cur;
  }
}

std::string fibre_key(const FibreClass& c) {
  if (std::holds_alternative<InsideEdge>(c)) {
    const InsideEdge& i = std::get<InsideEdge>(c);
    return "I|" + std::to_string(i.edge) + "|" + std::to_string(i.elt);
  }
  const FibreWord& w = std::get<FibreWord>(c);
  std::ostringstream out;
  out << "F|";
  if (w.start_half >= 0)
    out << 'e' << w.start_edge << '.' << w.start_half;
  else
    out << '-';
  out << '|' << word_key(w.core) << '|';
  if (w.end_half >= 0)
    out << 'e' << w.end_edge << '.' << w.end_half;
  else
    out << '-';
  return out.str();
}

std::string format_fibre(const FibreWord& w) {
  std::ostringstream out;
  if (w.start_half >= 0) out << "(e" << w.start_edge << (w.start_half == 0 ? ".src" : ".tgt") << ") ";
  out << format_word(w.core);
  if (w.end_half >= 0) out << " (e" << w.end_edge << (w.end_half == 0 ? ".src" : ".tgt") << ")";
  return out.str();
}

StagePattern stage_pattern(const SpecPtr& spec, const Basepoint& from, const Basepoint& to) {
  const GraphOfGroups& g = *spec;
  check_basepoint(g, from);
  check_basepoint(g, to);
  auto dist = parity_distances(g, basepoint_vertices(g, to));
  int best[2] = {kInf, kInf};
  for (VertexId v : basepoint_vertices(g, from))
    for (int p = 0; p < 2; ++p) best[p] = std::min(best[p], dist[v][p]);
  StagePattern out;
  if (best[0] == kInf && best[1] == kInf) {
    out.first_stage = -1;
    out.step = 2;
    return out;
  }
  out.first_stage = std::min(best[0], best[1]);
  out.step = (best[0] < kInf && best[1] < kInf) ? 1 : 2;
  return out;
}

long long stage_label(const SpecPtr& spec, const Basepoint& from, const Basepoint& to, int stage) {
  const GraphOfGroups& g = *spec;
  bool trivial = true;
  for (const auto& vg : g.vertex_groups)
    if (vg->order != 1) trivial = false;
  for (const auto& e : g.edges)
    if (e.group->order != 1) trivial = false;
  int ends = (from.side == Basepoint::Side::edge ? 1 : 0) + (to.side == Basepoint::Side::edge ? 1 : 0);
  long long base = trivial ? stage : 2LL * stage;
  return base + ends;
}

Filtration filtration(const SpecPtr& spec, const Basepoint& from, const Basepoint& to,
                      int stage_count, const CensusOptions& options) {
  const GraphOfGroups& g = *spec;
  check_basepoint(g, from);
  check_basepoint(g, to);
  Filtration f;
  f.spec = spec;
  f.from = from;
  f.to = to;
  bool same_edge = from.side == Basepoint::Side::edge && to.side == Basepoint::Side::edge &&
                   from.id == to.id;
  f.baseline = same_edge ? g.edges[from.id].group->order : 0;

  std::set<std::string> seen;
  if (options.verify && same_edge)
    for (Elt h = 0; h < g.edges[from.id].group->order; ++h)
      seen.insert(fibre_key(InsideEdge{from.id, h}));

  const StagePattern pattern = stage_pattern(spec, from, to);
  long long r = f.baseline;
  for (int i = 0; pattern.first_stage >= 0 && i < stage_count; ++i) {
    const int stage = pattern.first_stage + i * pattern.step;
    CensusOptions per_stage = options;
    per_stage.store_reps = options.store_reps || options.verify;
    EnumerateResult res = enumerate_stage(spec, from, to, stage, per_stage);
    long long fresh = res.z_count - res.j_count;
    r += fresh;
    f.stages.push_back({stage, res.z_count, res.j_count, fresh, r});
    if (options.verify) {
      for (const FibreWord& w : res.z_classes) seen.insert(fibre_key(normalize_fibre(w)));
      if (static_cast<long long>(seen.size()) != r)
        fail(errc::consistency,
             "stage " + std::to_string(stage) + ": distinct canonical forms " +
                 std::to_string(seen.size()) + " but running census says " + std::to_string(r));
    }
    if (options.store_reps) {
      std::vector<FibreWord> fresh_reps;
      for (size_t i = 0; i < res.z_classes.size(); ++i)
        if (!res.in_j[i]) fresh_reps.push_back(res.z_classes[i]);
      f.representatives.push_back(std::move(fresh_reps));
    }
  }
  return f;
}

GapMapReport gap_map_check(const SpecPtr& spec) {
  const GraphOfGroups& g = *spec;
  if (g.vertex_count() != 2 || g.edge_count() != 1 || g.edges[0].src != 0 || g.edges[0].tgt != 1)
    fail(errc::not_an_amalgam, "expected two vertices joined by one edge");
  const Edge& e = g.edges[0];
  const FiniteGroup& left = *g.vertex_groups[0];
  const FiniteGroup& right = *g.vertex_groups[1];

  GapMapReport report;
  report.pass = true;
  for (Elt a = 0; a < left.order; ++a) {
    for (Elt b = 0; b < right.order; ++b) {
      Word lhs;
      lhs.spec = spec;
      lhs.start = 0;
      lhs.head = a;
      Word rhs;
      rhs.spec = spec;
      rhs.start = 0;
      rhs.head = FiniteGroup::identity;
      rhs.syllables = {{0, -1, b}, {0, +1, FiniteGroup::identity}};
      bool equal = word_equal(lhs, rhs);
      Elt n = e.alpha_pre[a];
      bool expected = n >= 0 && e.beta.apply(n) == b;
      if (equal != expected) {
        report.pass = false;
        report.detail = "pair (" + std::to_string(a) + ", " + std::to_string(b) +
                        "): word problem says " + (equal ? "equal" : "distinct") +
                        " but edge group says " + (expected ? "equal" : "distinct");
        return report;
      }
      if (equal) report.identified.push_back({a, b});
    }
  }
  return report;
}

}  // namespace gog
