#include <doctest.h>

#include "gog/graph.hpp"
#include "gog/shipped.hpp"
#include "support.hpp"

using namespace gog;

TEST_CASE("amalgam shape and orientation") {
  const GroupPtr z4 = cyclic_group(4);
  const GroupPtr z6 = cyclic_group(6);
  const GroupPtr z2 = cyclic_group(2);
  const SpecPtr a =
      amalgam(z4, z6, z2, cyclic_hom(z2, z4, 2, true), cyclic_hom(z2, z6, 3, true));
  CHECK(a->vertex_count() == 2);
  CHECK(a->edge_count() == 1);
  CHECK(a->edges[0].src == 0);
  CHECK(a->edges[0].tgt == 1);
  // crossing with sign +1 moves tgt -> src
  CHECK(a->arrive_vertex(0, 1) == 0);
  CHECK(a->depart_vertex(0, 1) == 1);
  CHECK(a->arrive_vertex(0, -1) == 1);
  CHECK(a->depart_vertex(0, -1) == 0);
  // departures are grouped by the vertex the crossing leaves from
  REQUIRE(a->departures[0].size() == 1);
  CHECK(a->departures[0][0].sign == -1);
  REQUIRE(a->departures[1].size() == 1);
  CHECK(a->departures[1][0].sign == 1);
}

TEST_CASE("hnn extension is one vertex with a loop") {
  const GroupPtr z3 = cyclic_group(3);
  const SpecPtr h = hnn(z3, z3, identity_hom(z3), validate_hom(z3, z3, {0, 2, 1}, true));
  CHECK(h->vertex_count() == 1);
  CHECK(h->edge_count() == 1);
  CHECK(h->edges[0].src == 0);
  CHECK(h->edges[0].tgt == 0);
  // loops depart both ways from the same vertex, +1 listed first
  REQUIRE(h->departures[0].size() == 2);
  CHECK(h->departures[0][0].sign == 1);
  CHECK(h->departures[0][1].sign == -1);
}

TEST_CASE("wedge becomes a star with a trivial hub") {
  const WedgeSpec wedge{{cyclic_group(2), cyclic_group(3)}};
  const SpecPtr g = wedge_as_graph(wedge);
  CHECK(g->vertex_count() == 3);
  CHECK(g->edge_count() == 2);
  CHECK(g->vertex_groups[0]->order == 1);
  CHECK(g->vertex_groups[1]->order == 2);
  CHECK(g->vertex_groups[2]->order == 3);
  for (int e = 0; e < 2; ++e) {
    CHECK(g->edges[e].src == e + 1);
    CHECK(g->edges[e].tgt == 0);
    CHECK(g->edges[e].group->order == 1);
  }
  // hub departures reach each spoke with sign +1
  CHECK(g->departures[0].size() == 2);
  CHECK(g->departures[0][0].sign == 1);
}

TEST_CASE("multigraph conversion keeps the shape, all groups trivial") {
  const Multigraph mg{2, {{0, 1}, {0, 1}}};
  const SpecPtr g = multigraph_as_graph(mg);
  CHECK(g->vertex_count() == 2);
  CHECK(g->edge_count() == 2);
  for (const auto& vg : g->vertex_groups) CHECK(vg->order == 1);
  for (const auto& e : g->edges) CHECK(e.group->order == 1);
  CHECK(g->departures[0].size() == 2);
  CHECK(g->departures[1].size() == 2);
}

TEST_CASE("edge endpoint validation") {
  const GroupPtr t = trivial_group();
  const GroupHom id = identity_hom(t);
  try {
    make_graph_of_groups({t}, {{0, 5, t, id, id}});
    CHECK(false);
  } catch (const error& e) {
    CHECK(e.code() == errc::dangling_edge);
  }

  // leg domain must be the edge group
  const GroupPtr z2 = cyclic_group(2);
  try {
    make_graph_of_groups({z2}, {{0, 0, z2, identity_hom(z2), cyclic_hom(t, z2, 0)}});
    CHECK(false);
  } catch (const error& e) {
    CHECK(e.code() == errc::bad_hom_target);
  }
}

TEST_CASE("basepoint names parse and print") {
  CHECK(basepoint_name(Basepoint::vertex(0)) == "v0");
  CHECK(basepoint_name(Basepoint::edge(12)) == "e12");
  CHECK(parse_basepoint("v3") == Basepoint::vertex(3));
  CHECK(parse_basepoint("e0") == Basepoint::edge(0));
  for (const char* bad : {"x1", "v", "e", "v1x", ""}) {
    try {
      parse_basepoint(bad);
      CHECK(false);
    } catch (const error& e) {
      CHECK(e.code() == errc::parse_error);
    }
  }
}

TEST_CASE("edge transversals are precomputed") {
  const SpecPtr a = shipped("sl2z_amalgam").file.graph;
  const Edge& e = a->edges[0];
  CHECK(e.alpha_cosets.index() == 2);
  CHECK(e.beta_cosets.index() == 3);
  // preimages invert the legs on the subgroup, -1 off it
  CHECK(e.alpha_pre[2] == 1);
  CHECK(e.alpha_pre[1] == -1);
  CHECK(e.beta_pre[3] == 1);
  CHECK(e.beta_pre[0] == 0);
}
