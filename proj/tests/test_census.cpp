#include <doctest.h>

#include <set>

#include "gog/census.hpp"
#include "gog/shipped.hpp"
#include "support.hpp"

using namespace gog;
using testsupport::random_spec;

namespace {

struct StageRow {
  int stage;
  long long z, j, nr, r;
};

void check_table(const Filtration& f, long long baseline, const std::vector<StageRow>& rows) {
  CHECK(f.baseline == baseline);
  REQUIRE(f.stages.size() == rows.size());
  for (size_t i = 0; i < rows.size(); ++i) {
    CAPTURE(i);
    CHECK(f.stages[i].stage == rows[i].stage);
    CHECK(f.stages[i].z_count == rows[i].z);
    CHECK(f.stages[i].j_count == rows[i].j);
    CHECK(f.stages[i].new_reduced == rows[i].nr);
    CHECK(f.stages[i].r_count == rows[i].r);
  }
}

}  // namespace

TEST_CASE("circle censuses") {
  const SpecPtr c = shipped("circle").file.graph;

  SUBCASE("vertex to itself") {
    const Filtration f = filtration(c, Basepoint::vertex(0), Basepoint::vertex(0), 4);
    check_table(f, 0,
                {{0, 1, 0, 1, 1}, {2, 4, 2, 2, 3}, {4, 16, 14, 2, 5}, {6, 64, 62, 2, 7}});
  }
  SUBCASE("vertex to the other vertex") {
    const Filtration f = filtration(c, Basepoint::vertex(0), Basepoint::vertex(1), 3);
    CHECK(f.stages[0].stage == 1);
    CHECK(f.stages[1].stage == 3);
    CHECK(f.stages[0].new_reduced == 2);
  }
  SUBCASE("vertex to an edge") {
    const Filtration f = filtration(c, Basepoint::vertex(0), Basepoint::edge(0), 4);
    check_table(f, 0, {{0, 1, 0, 1, 1}, {1, 2, 1, 1, 2}, {2, 4, 3, 1, 3}, {3, 8, 7, 1, 4}});
  }
  SUBCASE("edge to itself has a baseline class") {
    const Filtration f = filtration(c, Basepoint::edge(0), Basepoint::edge(0), 4);
    check_table(f, 1, {{0, 2, 2, 0, 1}, {1, 4, 2, 2, 3}, {2, 8, 8, 0, 3}, {3, 16, 14, 2, 5}});
  }
  SUBCASE("edge to the parallel edge") {
    const Filtration f = filtration(c, Basepoint::edge(0), Basepoint::edge(1), 4);
    check_table(f, 0, {{0, 2, 0, 2, 2}, {1, 4, 4, 0, 2}, {2, 8, 6, 2, 4}, {3, 16, 16, 0, 4}});
  }
}

TEST_CASE("hnn censuses") {
  const SpecPtr h = shipped("z3_hnn").file.graph;

  SUBCASE("vertex loop classes") {
    const Filtration f = filtration(h, Basepoint::vertex(0), Basepoint::vertex(0), 3);
    check_table(f, 0, {{0, 3, 0, 3, 3}, {1, 6, 0, 6, 9}, {2, 12, 6, 6, 15}});
  }
  SUBCASE("edge loop classes sit over a full subgroup baseline") {
    const Filtration f = filtration(h, Basepoint::edge(0), Basepoint::edge(0), 2);
    check_table(f, 3, {{0, 12, 6, 6, 9}, {1, 24, 18, 6, 15}});
  }
}

TEST_CASE("modular wedge hub census matches the splitting counts") {
  const SpecPtr g = shipped("psl2z_wedge").file.graph;
  const Filtration f = filtration(g, Basepoint::vertex(0), Basepoint::vertex(0), 4);
  check_table(f, 0,
              {{0, 1, 0, 1, 1}, {2, 5, 2, 3, 4}, {4, 25, 21, 4, 8}, {6, 125, 119, 6, 14}});
}

TEST_CASE("amalgam census doubles its new classes every other stage") {
  const SpecPtr a = shipped("sl2z_amalgam").file.graph;
  const Filtration f = filtration(a, Basepoint::vertex(0), Basepoint::vertex(0), 3);
  check_table(f, 0, {{0, 4, 0, 4, 4}, {2, 24, 8, 16, 20}, {4, 144, 112, 32, 52}});
}

TEST_CASE("stage patterns") {
  const SpecPtr c = shipped("circle").file.graph;
  const StagePattern vv = stage_pattern(c, Basepoint::vertex(0), Basepoint::vertex(0));
  CHECK(vv.first_stage == 0);
  CHECK(vv.step == 2);
  const StagePattern vw = stage_pattern(c, Basepoint::vertex(0), Basepoint::vertex(1));
  CHECK(vw.first_stage == 1);
  CHECK(vw.step == 2);

  const SpecPtr h = shipped("z3_hnn").file.graph;
  const StagePattern loop = stage_pattern(h, Basepoint::vertex(0), Basepoint::vertex(0));
  CHECK(loop.first_stage == 0);
  CHECK(loop.step == 1);

  // unreachable pair: no usable stage at all
  const SpecPtr d = multigraph_as_graph({3, {{0, 1}}});
  const StagePattern un = stage_pattern(d, Basepoint::vertex(0), Basepoint::vertex(2));
  CHECK(un.first_stage == -1);
  const Filtration f = filtration(d, Basepoint::vertex(0), Basepoint::vertex(2), 5);
  CHECK(f.stages.empty());
}

TEST_CASE("stage labels") {
  const SpecPtr c = shipped("circle").file.graph;
  CHECK(stage_label(c, Basepoint::vertex(0), Basepoint::vertex(0), 4) == 4);
  CHECK(stage_label(c, Basepoint::vertex(0), Basepoint::edge(0), 4) == 5);
  CHECK(stage_label(c, Basepoint::edge(0), Basepoint::edge(1), 4) == 6);

  const SpecPtr h = shipped("z3_hnn").file.graph;
  CHECK(stage_label(h, Basepoint::vertex(0), Basepoint::vertex(0), 4) == 8);
  CHECK(stage_label(h, Basepoint::edge(0), Basepoint::edge(0), 1) == 4);
}

TEST_CASE("parallel and serial enumeration agree classwise") {
  const SpecPtr a = shipped("sl2z_amalgam").file.graph;
  CensusOptions par;
  CensusOptions ser;
  ser.parallel = false;
  for (const int stage : {0, 2, 4, 6}) {
    const EnumerateResult p =
        enumerate_stage(a, Basepoint::vertex(0), Basepoint::vertex(0), stage, par);
    const EnumerateResult s =
        enumerate_stage_serial(a, Basepoint::vertex(0), Basepoint::vertex(0), stage, ser);
    CHECK(p.z_count == s.z_count);
    CHECK(p.j_count == s.j_count);
    REQUIRE(p.z_classes.size() == s.z_classes.size());
    for (size_t i = 0; i < p.z_classes.size(); ++i) {
      CHECK(format_fibre(p.z_classes[i]) == format_fibre(s.z_classes[i]));
      CHECK(p.in_j[i] == s.in_j[i]);
    }
  }
  // a stage outside the pattern enumerates nothing
  const EnumerateResult odd =
      enumerate_stage(a, Basepoint::vertex(0), Basepoint::vertex(0), 3, par);
  CHECK(odd.z_count == 0);
}

TEST_CASE("verify mode recomputes r from distinct normal forms") {
  CensusOptions opt;
  opt.verify = true;
  for (const char* name : {"circle", "dinfty_wedge", "z3_hnn"}) {
    const SpecPtr g = shipped(name).file.graph;
    const Filtration f = filtration(g, Basepoint::vertex(0), Basepoint::vertex(0), 3, opt);
    CHECK(!f.stages.empty());
  }
}

TEST_CASE("representatives are exactly the new classes") {
  CensusOptions opt;
  opt.store_reps = true;
  const SpecPtr g = shipped("psl2z_wedge").file.graph;
  const Filtration f = filtration(g, Basepoint::vertex(0), Basepoint::vertex(0), 3, opt);
  REQUIRE(f.representatives.size() == f.stages.size());
  std::set<std::string> seen;
  for (size_t i = 0; i < f.stages.size(); ++i) {
    CHECK(static_cast<long long>(f.representatives[i].size()) == f.stages[i].new_reduced);
    for (const FibreWord& rep : f.representatives[i]) {
      CHECK_FALSE(has_any_pinch(rep));
      CHECK(seen.insert(fibre_key(normalize_fibre(rep))).second);
    }
  }

  CensusOptions bare;
  bare.store_reps = false;
  const Filtration f2 = filtration(g, Basepoint::vertex(0), Basepoint::vertex(0), 3, bare);
  for (const auto& reps : f2.representatives) CHECK(reps.empty());
}

TEST_CASE("degenerate classes inside one edge") {
  const SpecPtr c = shipped("circle").file.graph;
  FibreWord w;
  w.core.spec = c;
  w.core.start = 0;  // source vertex of edge 0 carries half 0
  w.start_edge = 0;
  w.start_half = 0;
  w.end_edge = 0;
  w.end_half = 0;
  const FibreClass cls = normalize_fibre(w);
  REQUIRE(std::holds_alternative<InsideEdge>(cls));
  CHECK(std::get<InsideEdge>(cls).edge == 0);
  CHECK(std::get<InsideEdge>(cls).elt == 0);
  CHECK(has_any_pinch(w));
  CHECK(fibre_key(cls) != "");
}

TEST_CASE("budget cuts enumeration off") {
  const SpecPtr a = shipped("sl2z_amalgam").file.graph;
  CensusOptions opt;
  opt.budget = 10;
  try {
    filtration(a, Basepoint::vertex(0), Basepoint::vertex(0), 4, opt);
    CHECK(false);
  } catch (const error& e) {
    CHECK(e.code() == errc::budget_exceeded);
  }
}

TEST_CASE("gap map on the matrix amalgam") {
  const SpecPtr a = shipped("sl2z_amalgam").file.graph;
  const GapMapReport r = gap_map_check(a);
  CHECK(r.pass);
  REQUIRE(r.identified.size() == 2);
  CHECK(r.identified[0] == std::pair<Elt, Elt>{0, 0});
  CHECK(r.identified[1] == std::pair<Elt, Elt>{2, 3});
}

TEST_CASE("gap map on random amalgams") {
  std::mt19937_64 rng(4242);
  for (int i = 0; i < 12; ++i) {
    const SpecPtr a = testsupport::random_amalgam(rng);
    const GapMapReport r = gap_map_check(a);
    CHECK_MESSAGE(r.pass, r.detail);
  }
}

TEST_CASE("recurrence holds on random graphs of groups") {
  std::mt19937_64 rng(909);
  CensusOptions opt;
  opt.verify = true;
  opt.budget = 200'000;
  int verified = 0;
  for (int i = 0; i < 25; ++i) {
    const SpecPtr g = random_spec(rng);
    const Basepoint from = Basepoint::vertex(static_cast<int>(rng() % g->vertex_count()));
    const Basepoint to = Basepoint::vertex(static_cast<int>(rng() % g->vertex_count()));
    try {
      const Filtration f = filtration(g, from, to, 4, opt);
      long long prev = f.baseline;
      for (const StageCensus& s : f.stages) {
        CHECK(s.new_reduced == s.z_count - s.j_count);
        CHECK(s.r_count == prev + s.new_reduced);
        prev = s.r_count;
      }
      ++verified;
    } catch (const error& e) {
      if (e.code() != errc::budget_exceeded) throw;
    }
  }
  CHECK(verified >= 15);
}
