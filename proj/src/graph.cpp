#include "gog/graph.hpp"

#include <algorithm>
#include <cctype>
#include <string>

namespace gog {

namespace {

std::vector<Elt> hom_image_set(const GroupHom& h) {
  std::vector<Elt> out;
  out.reserve(h.image.size());
  for (Elt x : h.image) out.push_back(x);
  return out;
}

std::vector<Elt> preimage_table(const GroupHom& h) {
  std::vector<Elt> pre(h.codomain->order, -1);
  for (Elt x = 0; x < h.domain->order; ++x) pre[h.image[x]] = x;
  return pre;
}

}  // namespace

SpecPtr make_graph_of_groups(std::vector<GroupPtr> vertex_groups, std::vector<EdgeInput> edges) {
  if (vertex_groups.empty()) fail(errc::bad_shape, "need at least one vertex");
  for (const auto& g : vertex_groups)
    if (!g) fail(errc::bad_shape, "null vertex group");

  auto spec = std::make_shared<GraphOfGroups>();
  spec->vertex_groups = std::move(vertex_groups);
  const int nv = spec->vertex_count();

  for (size_t i = 0; i < edges.size(); ++i) {
    EdgeInput& in = edges[i];
    const std::string where = "edge " + std::to_string(i);
    if (in.src < 0 || in.src >= nv || in.tgt < 0 || in.tgt >= nv)
      fail(errc::dangling_edge, where + " endpoint out of range");
    if (!in.group) fail(errc::bad_shape, where + " has no group");
    if (in.alpha.domain != in.group || in.beta.domain != in.group)
      fail(errc::bad_hom_target, where + " leg domain is not the edge group");
    if (in.alpha.codomain != spec->vertex_groups[in.src])
      fail(errc::bad_hom_target, where + " alpha codomain is not the source vertex group");
    if (in.beta.codomain != spec->vertex_groups[in.tgt])
      fail(errc::bad_hom_target, where + " beta codomain is not the target vertex group");
    // Revalidate on the stored tables so invalid hand-built homs cannot slip in.
    GroupHom alpha = validate_hom(in.alpha.domain, in.alpha.codomain, in.alpha.image, true);
    GroupHom beta = validate_hom(in.beta.domain, in.beta.codomain, in.beta.image, true);

    Edge e;
    e.src = in.src;
    e.tgt = in.tgt;
    e.group = in.group;
    e.alpha_cosets = right_transversal(spec->vertex_groups[in.src], hom_image_set(alpha));
    e.beta_cosets = right_transversal(spec->vertex_groups[in.tgt], hom_image_set(beta));
    e.alpha_pre = preimage_table(alpha);
    e.beta_pre = preimage_table(beta);
    e.alpha = std::move(alpha);
    e.beta = std::move(beta);
    spec->edges.push_back(std::move(e));
  }

  spec->departures.assign(nv, {});
  for (EdgeId e = 0; e < spec->edge_count(); ++e) {
    if (spec->edges[e].tgt < nv) spec->departures[spec->edges[e].tgt].push_back({e, +1});
    if (spec->edges[e].src < nv) spec->departures[spec->edges[e].src].push_back({e, -1});
  }
  // Departure order: ascending edge id, +1 before -1 on loops.
  for (auto& list : spec->departures)
    std::stable_sort(list.begin(), list.end(), [](const Departure& a, const Departure& b) {
      if (a.edge != b.edge) return a.edge < b.edge;
      return a.sign > b.sign;
    });
  return spec;
}

SpecPtr amalgam(const GroupPtr& left, const GroupPtr& right, const GroupPtr& edge_group,
                const GroupHom& alpha, const GroupHom& beta) {
  EdgeInput e;
  e.src = 0;
  e.tgt = 1;
  e.group = edge_group;
  e.alpha = alpha;
  e.beta = beta;
  return make_graph_of_groups({left, right}, {std::move(e)});
}

SpecPtr hnn(const GroupPtr& vertex_group, const GroupPtr& edge_group, const GroupHom& alpha,
            const GroupHom& beta) {
  EdgeInput e;
  e.src = 0;
  e.tgt = 0;
  e.group = edge_group;
  e.alpha = alpha;
  e.beta = beta;
  return make_graph_of_groups({vertex_group}, {std::move(e)});
}

SpecPtr wedge_as_graph(const WedgeSpec& wedge) {
  std::vector<GroupPtr> vgroups;
  vgroups.push_back(trivial_group());
  for (const auto& g : wedge.groups) vgroups.push_back(g);
  std::vector<EdgeInput> edges;
  for (size_t i = 0; i < wedge.groups.size(); ++i) {
    EdgeInput e;
    e.src = static_cast<VertexId>(i + 1);
    e.tgt = 0;
    e.group = trivial_group();
    e.alpha = validate_hom(e.group, vgroups[i + 1], {0}, true);
    e.beta = validate_hom(e.group, vgroups[0], {0}, true);
    edges.push_back(std::move(e));
  }
  return make_graph_of_groups(std::move(vgroups), std::move(edges));
}

SpecPtr multigraph_as_graph(const Multigraph& mg) {
  if (mg.vertex_count <= 0) fail(errc::bad_shape, "multigraph needs at least one vertex");
  std::vector<GroupPtr> vgroups(mg.vertex_count, trivial_group());
  std::vector<EdgeInput> edges;
  for (const auto& [s, t] : mg.edges) {
    EdgeInput e;
    e.src = s;
    e.tgt = t;
    e.group = trivial_group();
    if (s < 0 || s >= mg.vertex_count || t < 0 || t >= mg.vertex_count)
      fail(errc::dangling_edge, "multigraph edge endpoint out of range");
    e.alpha = validate_hom(e.group, vgroups[s], {0}, true);
    e.beta = validate_hom(e.group, vgroups[t], {0}, true);
    edges.push_back(std::move(e));
  }
  return make_graph_of_groups(std::move(vgroups), std::move(edges));
}

std::string basepoint_name(const Basepoint& b) {
  return (b.side == Basepoint::Side::vertex ? "v" : "e") + std::to_string(b.id);
}

Basepoint parse_basepoint(const std::string& text) {
  if (text.size() < 2 || (text[0] != 'v' && text[0] != 'e'))
    fail(errc::parse_error, "basepoint must look like v0 or e1, got '" + text + "'");
  for (size_t i = 1; i < text.size(); ++i)
    if (!isdigit(static_cast<unsigned char>(text[i])))
      fail(errc::parse_error, "basepoint must look like v0 or e1, got '" + text + "'");
  Basepoint b;
  b.side = text[0] == 'v' ? Basepoint::Side::vertex : Basepoint::Side::edge;
  b.id = std::stoi(text.substr(1));
  return b;
}

}  // namespace gog
