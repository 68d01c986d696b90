#pragma once

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "gog/hom.hpp"
#include "gog/transversal.hpp"

namespace gog {

using VertexId = int;
using EdgeId = int;

// Directed edge of a graph of groups. The edge group embeds into the source
// vertex group via alpha and into the target vertex group via beta. Crossing
// the edge with sign +1 moves from tgt to src, so that conjugation by the
// stable letter carries alpha-images to beta-images.
struct Edge {
  VertexId src = 0;
  VertexId tgt = 0;
  GroupPtr group;
  GroupHom alpha;
  GroupHom beta;

  CosetTransversal alpha_cosets;
  CosetTransversal beta_cosets;
  // Preimages under alpha/beta for subgroup members, -1 elsewhere.
  std::vector<Elt> alpha_pre;
  std::vector<Elt> beta_pre;
};

struct Departure {
  EdgeId edge = 0;
  int sign = 0;
};

struct GraphOfGroups {
  std::vector<GroupPtr> vertex_groups;
  std::vector<Edge> edges;
  // departures[v] lists the crossings available at v: sign +1 entries for
  // edges with tgt == v, sign -1 for edges with src == v, ordered by edge id
  // with +1 before -1 on loops.
  std::vector<std::vector<Departure>> departures;

  int vertex_count() const { return static_cast<int>(vertex_groups.size()); }
  int edge_count() const { return static_cast<int>(edges.size()); }

  // Vertex the crossing exits into (src for +1) and the vertex it is usable at.
  VertexId arrive_vertex(EdgeId e, int sign) const {
    return sign > 0 ? edges[e].src : edges[e].tgt;
  }
  VertexId depart_vertex(EdgeId e, int sign) const {
    return sign > 0 ? edges[e].tgt : edges[e].src;
  }
};

using SpecPtr = std::shared_ptr<const GraphOfGroups>;

struct EdgeInput {
  VertexId src;
  VertexId tgt;
  GroupPtr group;
  GroupHom alpha;
  GroupHom beta;
};

SpecPtr make_graph_of_groups(std::vector<GroupPtr> vertex_groups, std::vector<EdgeInput> edges);

// Amalgam G *_N H: vertex 0 carries G (the source side), vertex 1 carries H.
SpecPtr amalgam(const GroupPtr& left, const GroupPtr& right, const GroupPtr& edge_group,
                const GroupHom& alpha, const GroupHom& beta);

// HNN extension of one vertex group along a loop edge.
SpecPtr hnn(const GroupPtr& vertex_group, const GroupPtr& edge_group, const GroupHom& alpha,
            const GroupHom& beta);

// Plain multigraph, no group data.
struct Multigraph {
  int vertex_count = 0;
  std::vector<std::pair<int, int>> edges;
};

// Wedge of groups: hub vertex with one spoke per factor group.
struct WedgeSpec {
  std::vector<GroupPtr> groups;
};

// Spoke i becomes vertex i + 1 with the hub at vertex 0; spoke edges run
// src = spoke, tgt = hub, with trivial edge groups.
SpecPtr wedge_as_graph(const WedgeSpec& wedge);

// All vertex and edge groups trivial.
SpecPtr multigraph_as_graph(const Multigraph& mg);

struct Basepoint {
  enum class Side { vertex, edge };
  Side side = Side::vertex;
  int id = 0;

  static Basepoint vertex(int v) { return {Side::vertex, v}; }
  static Basepoint edge(int e) { return {Side::edge, e}; }

  bool operator==(const Basepoint& o) const { return side == o.side && id == o.id; }
};

std::string basepoint_name(const Basepoint& b);
Basepoint parse_basepoint(const std::string& text);

}  // namespace gog
