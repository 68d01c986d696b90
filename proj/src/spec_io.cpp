#include "gog/spec_io.hpp"

#include <cstdint>
#include <fstream>
#include <limits>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

namespace gog {

namespace {

using json = nlohmann::ordered_json;

[[noreturn]] void bad(const std::string& message) { fail(errc::parse_error, message); }

const json& field(const json& j, const char* name) {
  const auto it = j.find(name);
  if (it == j.end()) bad(std::string("missing field '") + name + "'");
  return *it;
}

void check_keys(const json& j, const std::set<std::string>& allowed, const std::string& where) {
  if (!j.is_object()) bad(where + " must be an object");
  for (const auto& item : j.items())
    if (allowed.find(item.key()) == allowed.end())
      bad("unknown field '" + item.key() + "' in " + where);
}

long long to_ll(const json& v, const std::string& where) {
  if (!v.is_number_integer()) bad(where + " must be an integer");
  return v.get<long long>();
}

int to_int(const json& v, const std::string& where) {
  const long long x = to_ll(v, where);
  if (x < std::numeric_limits<int>::min() || x > std::numeric_limits<int>::max())
    bad(where + " is out of range");
  return static_cast<int>(x);
}

std::vector<Elt> row_of(const json& v, const std::string& where) {
  if (!v.is_array()) bad(where + " must be an array");
  std::vector<Elt> out;
  out.reserve(v.size());
  for (size_t i = 0; i < v.size(); ++i)
    out.push_back(to_int(v[i], where + "[" + std::to_string(i) + "]"));
  return out;
}

GroupPtr group_of(const json& v, const std::string& where) {
  if (!v.is_array()) bad(where + " must be an array of rows");
  std::vector<std::vector<Elt>> table;
  table.reserve(v.size());
  for (size_t i = 0; i < v.size(); ++i)
    table.push_back(row_of(v[i], where + "[" + std::to_string(i) + "]"));
  return validate_group(table);
}

json group_json(const GroupPtr& g) {
  json out = json::array();
  for (const std::vector<Elt>& row : g->mul) out.push_back(row);
  return out;
}

const char* model_kind_name(ModelKind k) {
  switch (k) {
    case ModelKind::integer_affine:
      return "integer_affine";
    case ModelKind::integer_matrix_2x2:
      return "integer_matrix_2x2";
    case ModelKind::semidirect_finite_by_z:
      return "semidirect_finite_by_z";
  }
  fail(errc::bad_shape, "unknown model kind");
}

ModelKind model_kind_of(const std::string& name) {
  if (name == "integer_affine") return ModelKind::integer_affine;
  if (name == "integer_matrix_2x2") return ModelKind::integer_matrix_2x2;
  if (name == "semidirect_finite_by_z") return ModelKind::semidirect_finite_by_z;
  bad("unknown model kind '" + name + "'");
}

long long to_int64_entry(__int128 v) {
  if (v > std::numeric_limits<long long>::max() || v < std::numeric_limits<long long>::min())
    fail(errc::overflow, "matrix entry does not fit in the spec file format");
  return static_cast<long long>(v);
}

ModelValue value_of(ModelKind kind, const json& v, const std::string& where) {
  if (!v.is_array()) bad(where + " must be an array");
  switch (kind) {
    case ModelKind::integer_affine: {
      if (v.size() != 2) bad(where + " must be [sign, shift]");
      return AffineMap{to_int(v[0], where), to_ll(v[1], where)};
    }
    case ModelKind::integer_matrix_2x2: {
      if (v.size() != 4) bad(where + " must be [a, b, c, d]");
      return Mat2{to_ll(v[0], where), to_ll(v[1], where), to_ll(v[2], where),
                  to_ll(v[3], where)};
    }
    case ModelKind::semidirect_finite_by_z: {
      if (v.size() != 2) bad(where + " must be [element, power]");
      return SemiPair{to_int(v[0], where), to_ll(v[1], where)};
    }
  }
  bad(where + " has an unknown kind");
}

json value_json(const ModelValue& v) {
  json out = json::array();
  if (const AffineMap* p = std::get_if<AffineMap>(&v)) {
    out.push_back(p->sign);
    out.push_back(p->shift);
  } else if (const Mat2* m = std::get_if<Mat2>(&v)) {
    out.push_back(to_int64_entry(m->a));
    out.push_back(to_int64_entry(m->b));
    out.push_back(to_int64_entry(m->c));
    out.push_back(to_int64_entry(m->d));
  } else {
    const SemiPair& p = std::get<SemiPair>(v);
    out.push_back(p.a);
    out.push_back(p.k);
  }
  return out;
}

ConcreteModel model_of(const json& j, const SpecPtr& graph) {
  const json& kind_field = field(j, "kind");
  if (!kind_field.is_string()) bad("model kind must be a string");
  const ModelKind kind = model_kind_of(kind_field.get<std::string>());

  std::set<std::string> allowed = {"kind", "vertex_images", "edge_images", "faithful_radius"};
  if (kind == ModelKind::integer_matrix_2x2) allowed.insert("projective");
  if (kind == ModelKind::semidirect_finite_by_z) {
    allowed.insert("base");
    allowed.insert("twist");
  }
  check_keys(j, allowed, "model");

  ConcreteModel m;
  m.kind = kind;
  m.spec = graph;
  if (j.contains("projective")) {
    const json& p = j["projective"];
    if (!p.is_boolean()) bad("model projective must be a boolean");
    m.projective = p.get<bool>();
  }
  if (kind == ModelKind::semidirect_finite_by_z) {
    m.base = group_of(field(j, "base"), "model base");
    m.twist = row_of(field(j, "twist"), "model twist");
  }

  const json& vimgs = field(j, "vertex_images");
  if (!vimgs.is_array()) bad("model vertex_images must be an array");
  for (size_t v = 0; v < vimgs.size(); ++v) {
    const json& rows = vimgs[v];
    const std::string where = "model vertex_images[" + std::to_string(v) + "]";
    if (!rows.is_array()) bad(where + " must be an array");
    std::vector<ModelValue> imgs;
    imgs.reserve(rows.size());
    for (size_t a = 0; a < rows.size(); ++a)
      imgs.push_back(value_of(kind, rows[a], where + "[" + std::to_string(a) + "]"));
    m.vertex_images.push_back(std::move(imgs));
  }

  const json& eimgs = field(j, "edge_images");
  if (!eimgs.is_array()) bad("model edge_images must be an array");
  for (size_t e = 0; e < eimgs.size(); ++e)
    m.edge_images.push_back(
        value_of(kind, eimgs[e], "model edge_images[" + std::to_string(e) + "]"));

  if (j.contains("faithful_radius"))
    m.faithful_radius = to_int(j["faithful_radius"], "model faithful_radius");

  verify_model(m);
  return m;
}

json model_json(const ConcreteModel& m) {
  json out;
  out["kind"] = model_kind_name(m.kind);
  if (m.kind == ModelKind::integer_matrix_2x2) out["projective"] = m.projective;
  if (m.kind == ModelKind::semidirect_finite_by_z) {
    out["base"] = group_json(m.base);
    out["twist"] = m.twist;
  }
  json vimgs = json::array();
  for (const std::vector<ModelValue>& imgs : m.vertex_images) {
    json rows = json::array();
    for (const ModelValue& v : imgs) rows.push_back(value_json(v));
    vimgs.push_back(std::move(rows));
  }
  out["vertex_images"] = std::move(vimgs);
  json eimgs = json::array();
  for (const ModelValue& v : m.edge_images) eimgs.push_back(value_json(v));
  out["edge_images"] = std::move(eimgs);
  out["faithful_radius"] = m.faithful_radius;
  return out;
}

GroupHom hom_field(const json& j, const char* name, const GroupPtr& domain,
                   const GroupPtr& codomain) {
  return validate_hom(domain, codomain, row_of(field(j, name), name), true);
}

// Two-space indentation with arrays of scalars kept on one line, so group
// tables render one row per line.
void write_json(std::string& out, const json& j, int indent) {
  if (j.is_object()) {
    if (j.empty()) {
      out += "{}";
      return;
    }
    out += "{\n";
    size_t i = 0;
    for (const auto& item : j.items()) {
      out.append(indent + 2, ' ');
      out += json(item.key()).dump();
      out += ": ";
      write_json(out, item.value(), indent + 2);
      if (++i < j.size()) out += ",";
      out += "\n";
    }
    out.append(indent, ' ');
    out += "}";
  } else if (j.is_array()) {
    bool flat = true;
    for (const json& el : j)
      if (el.is_structured()) flat = false;
    if (flat) {
      out += "[";
      for (size_t i = 0; i < j.size(); ++i) {
        if (i > 0) out += ", ";
        out += j[i].dump();
      }
      out += "]";
    } else {
      out += "[\n";
      for (size_t i = 0; i < j.size(); ++i) {
        out.append(indent + 2, ' ');
        write_json(out, j[i], indent + 2);
        if (i + 1 < j.size()) out += ",";
        out += "\n";
      }
      out.append(indent, ' ');
      out += "]";
    }
  } else {
    out += j.dump();
  }
}

std::string pretty(const json& j) {
  std::string out;
  write_json(out, j, 0);
  out += "\n";
  return out;
}

}  // namespace

SpecFile parse_spec_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const std::exception& e) {
    fail(errc::parse_error, std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object()) bad("spec file must be a JSON object");
  if (to_int(field(j, "schema"), "schema") != 1) bad("unsupported schema version");

  SpecFile f;
  f.schema = 1;
  const json& kind_field = field(j, "kind");
  if (!kind_field.is_string()) bad("kind must be a string");
  f.kind = kind_field.get<std::string>();

  if (f.kind == "graph_of_groups") {
    check_keys(j, {"schema", "kind", "vertex_groups", "edges", "model"}, "spec");
    const json& vgs = field(j, "vertex_groups");
    if (!vgs.is_array()) bad("vertex_groups must be an array");
    std::vector<GroupPtr> groups;
    for (size_t v = 0; v < vgs.size(); ++v)
      groups.push_back(group_of(vgs[v], "vertex_groups[" + std::to_string(v) + "]"));
    const json& edges = field(j, "edges");
    if (!edges.is_array()) bad("edges must be an array");
    std::vector<EdgeInput> inputs;
    for (size_t e = 0; e < edges.size(); ++e) {
      const json& ej = edges[e];
      const std::string where = "edges[" + std::to_string(e) + "]";
      check_keys(ej, {"src", "tgt", "group", "alpha", "beta"}, where);
      const int src = to_int(field(ej, "src"), where + " src");
      const int tgt = to_int(field(ej, "tgt"), where + " tgt");
      if (src < 0 || src >= static_cast<int>(groups.size()) || tgt < 0 ||
          tgt >= static_cast<int>(groups.size()))
        fail(errc::dangling_edge, where + " endpoint out of range");
      const GroupPtr eg = group_of(field(ej, "group"), where + " group");
      inputs.push_back(EdgeInput{src, tgt, eg, hom_field(ej, "alpha", eg, groups[src]),
                                 hom_field(ej, "beta", eg, groups[tgt])});
    }
    f.graph = make_graph_of_groups(std::move(groups), std::move(inputs));
  } else if (f.kind == "amalgam") {
    check_keys(j, {"schema", "kind", "left", "right", "edge_group", "alpha", "beta", "model"},
               "spec");
    const GroupPtr left = group_of(field(j, "left"), "left");
    const GroupPtr right = group_of(field(j, "right"), "right");
    const GroupPtr eg = group_of(field(j, "edge_group"), "edge_group");
    f.graph = amalgam(left, right, eg, hom_field(j, "alpha", eg, left),
                      hom_field(j, "beta", eg, right));
  } else if (f.kind == "hnn") {
    check_keys(j, {"schema", "kind", "vertex_group", "edge_group", "alpha", "beta", "model"},
               "spec");
    const GroupPtr vg = group_of(field(j, "vertex_group"), "vertex_group");
    const GroupPtr eg = group_of(field(j, "edge_group"), "edge_group");
    f.graph = hnn(vg, eg, hom_field(j, "alpha", eg, vg), hom_field(j, "beta", eg, vg));
  } else if (f.kind == "wedge") {
    check_keys(j, {"schema", "kind", "groups", "model"}, "spec");
    const json& gs = field(j, "groups");
    if (!gs.is_array()) bad("groups must be an array");
    WedgeSpec wedge;
    for (size_t i = 0; i < gs.size(); ++i)
      wedge.groups.push_back(group_of(gs[i], "groups[" + std::to_string(i) + "]"));
    f.graph = wedge_as_graph(wedge);
    f.wedge = std::move(wedge);
  } else if (f.kind == "multigraph") {
    check_keys(j, {"schema", "kind", "vertex_count", "edges", "model"}, "spec");
    Multigraph mg;
    mg.vertex_count = to_int(field(j, "vertex_count"), "vertex_count");
    const json& edges = field(j, "edges");
    if (!edges.is_array()) bad("edges must be an array");
    for (size_t e = 0; e < edges.size(); ++e) {
      const json& ej = edges[e];
      const std::string where = "edges[" + std::to_string(e) + "]";
      if (!ej.is_array() || ej.size() != 2) bad(where + " must be [src, tgt]");
      mg.edges.push_back({to_int(ej[0], where + " src"), to_int(ej[1], where + " tgt")});
    }
    f.graph = multigraph_as_graph(mg);
    f.multigraph = std::move(mg);
  } else {
    bad("unknown kind '" + f.kind + "'");
  }

  if (j.contains("model")) f.model = model_of(j["model"], f.graph);
  f.digest = fnv1a_hex(serialize_spec(f));
  return f;
}

SpecFile load_spec_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(errc::parse_error, "cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_spec_json(buf.str());
}

std::string serialize_spec(const SpecFile& f) {
  if (!f.graph) fail(errc::bad_shape, "spec file has no graph");
  const GraphOfGroups& g = *f.graph;
  json j;
  j["schema"] = f.schema;
  j["kind"] = f.kind;
  if (f.kind == "graph_of_groups") {
    json vgs = json::array();
    for (const GroupPtr& vg : g.vertex_groups) vgs.push_back(group_json(vg));
    j["vertex_groups"] = std::move(vgs);
    json edges = json::array();
    for (const Edge& e : g.edges) {
      json ej;
      ej["src"] = e.src;
      ej["tgt"] = e.tgt;
      ej["group"] = group_json(e.group);
      ej["alpha"] = e.alpha.image;
      ej["beta"] = e.beta.image;
      edges.push_back(std::move(ej));
    }
    j["edges"] = std::move(edges);
  } else if (f.kind == "amalgam") {
    if (g.vertex_count() != 2 || g.edge_count() != 1)
      fail(errc::not_an_amalgam, "amalgam spec must have two vertices and one edge");
    j["left"] = group_json(g.vertex_groups[0]);
    j["right"] = group_json(g.vertex_groups[1]);
    j["edge_group"] = group_json(g.edges[0].group);
    j["alpha"] = g.edges[0].alpha.image;
    j["beta"] = g.edges[0].beta.image;
  } else if (f.kind == "hnn") {
    if (g.vertex_count() != 1 || g.edge_count() != 1)
      fail(errc::bad_shape, "hnn spec must have one vertex and one loop");
    j["vertex_group"] = group_json(g.vertex_groups[0]);
    j["edge_group"] = group_json(g.edges[0].group);
    j["alpha"] = g.edges[0].alpha.image;
    j["beta"] = g.edges[0].beta.image;
  } else if (f.kind == "wedge") {
    if (!f.wedge) fail(errc::consistency, "wedge spec lost its factor groups");
    json gs = json::array();
    for (const GroupPtr& fg : f.wedge->groups) gs.push_back(group_json(fg));
    j["groups"] = std::move(gs);
  } else if (f.kind == "multigraph") {
    if (!f.multigraph) fail(errc::consistency, "multigraph spec lost its edge list");
    j["vertex_count"] = f.multigraph->vertex_count;
    json edges = json::array();
    for (const auto& [a, b] : f.multigraph->edges) {
      json pair = json::array();
      pair.push_back(a);
      pair.push_back(b);
      edges.push_back(std::move(pair));
    }
    j["edges"] = std::move(edges);
  } else {
    fail(errc::bad_shape, "unknown kind '" + f.kind + "'");
  }
  if (f.model) j["model"] = model_json(*f.model);
  return pretty(j);
}

std::string fnv1a_hex(const std::string& data) {
  std::uint64_t h = 14695981039346656037ULL;
  for (const unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  static const char* digits = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[i] = digits[h & 0xf];
    h >>= 4;
  }
  return out;
}

}  // namespace gog
