#include "gog/shipped.hpp"

#include <utility>

namespace gog {

namespace {

SpecFile finish(SpecFile f) {
  if (f.model) verify_model(*f.model);
  f.digest = fnv1a_hex(serialize_spec(f));
  return f;
}

const Mat2 kId{1, 0, 0, 1};
// Order four and order six in the integral matrix group; their squares and
// cubes meet in the central element of order two.
const Mat2 kS{0, -1, 1, 0};
const Mat2 kU{0, -1, 1, 1};

Mat2 mat_mul(const Mat2& x, const Mat2& y) {
  return Mat2{x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d, x.c * y.a + x.d * y.c,
              x.c * y.b + x.d * y.d};
}

std::vector<ModelValue> mat_powers(const Mat2& m, int count) {
  std::vector<ModelValue> out;
  Mat2 acc = kId;
  for (int i = 0; i < count; ++i) {
    out.push_back(acc);
    acc = mat_mul(acc, m);
  }
  return out;
}

}  // namespace

SpecFile circle_spec() {
  SpecFile f;
  f.kind = "multigraph";
  f.multigraph = Multigraph{2, {{0, 1}, {0, 1}}};
  f.graph = multigraph_as_graph(*f.multigraph);
  return finish(std::move(f));
}

SpecFile theta_spec() {
  SpecFile f;
  f.kind = "multigraph";
  f.multigraph = Multigraph{2, {{0, 1}, {0, 1}, {0, 1}}};
  f.graph = multigraph_as_graph(*f.multigraph);
  return finish(std::move(f));
}

SpecFile dinfty_wedge_spec() {
  SpecFile f;
  f.kind = "wedge";
  const GroupPtr z2 = cyclic_group(2);
  f.wedge = WedgeSpec{{z2, z2}};
  f.graph = wedge_as_graph(*f.wedge);

  ConcreteModel m;
  m.kind = ModelKind::integer_affine;
  m.spec = f.graph;
  // Reflections about 0 and about 1/2; their product is the unit translation.
  m.vertex_images = {
      {AffineMap{1, 0}},
      {AffineMap{1, 0}, AffineMap{-1, 0}},
      {AffineMap{1, 0}, AffineMap{-1, 1}},
  };
  m.edge_images = {AffineMap{1, 0}, AffineMap{1, 0}};
  m.faithful_radius = 6;
  f.model = std::move(m);
  return finish(std::move(f));
}

SpecFile psl2z_wedge_spec() {
  SpecFile f;
  f.kind = "wedge";
  f.wedge = WedgeSpec{{cyclic_group(2), cyclic_group(3)}};
  f.graph = wedge_as_graph(*f.wedge);

  ConcreteModel m;
  m.kind = ModelKind::integer_matrix_2x2;
  m.projective = true;
  m.spec = f.graph;
  m.vertex_images = {
      {kId},
      {kId, kS},
      {kId, kU, mat_mul(kU, kU)},
  };
  m.edge_images = {kId, kId};
  m.faithful_radius = 6;
  f.model = std::move(m);
  return finish(std::move(f));
}

SpecFile sl2z_amalgam_spec() {
  SpecFile f;
  f.kind = "amalgam";
  const GroupPtr z4 = cyclic_group(4);
  const GroupPtr z6 = cyclic_group(6);
  const GroupPtr z2 = cyclic_group(2);
  f.graph = amalgam(z4, z6, z2, cyclic_hom(z2, z4, 2, true), cyclic_hom(z2, z6, 3, true));

  ConcreteModel m;
  m.kind = ModelKind::integer_matrix_2x2;
  m.spec = f.graph;
  m.vertex_images = {mat_powers(kS, 4), mat_powers(kU, 6)};
  m.edge_images = {kId};
  m.faithful_radius = 6;
  f.model = std::move(m);
  return finish(std::move(f));
}

SpecFile z3_hnn_spec() {
  SpecFile f;
  f.kind = "hnn";
  const GroupPtr z3 = cyclic_group(3);
  f.graph = hnn(z3, z3, identity_hom(z3), validate_hom(z3, z3, {0, 2, 1}, true));

  ConcreteModel m;
  m.kind = ModelKind::semidirect_finite_by_z;
  m.spec = f.graph;
  m.base = z3;
  m.twist = {0, 2, 1};
  m.vertex_images = {{SemiPair{0, 0}, SemiPair{1, 0}, SemiPair{2, 0}}};
  m.edge_images = {SemiPair{0, 1}};
  m.faithful_radius = 6;
  f.model = std::move(m);
  return finish(std::move(f));
}

const std::vector<ShippedSpec>& shipped_specs() {
  static const std::vector<ShippedSpec> all = [] {
    std::vector<ShippedSpec> out;
    out.push_back({"circle", circle_spec()});
    out.push_back({"theta", theta_spec()});
    out.push_back({"dinfty_wedge", dinfty_wedge_spec()});
    out.push_back({"psl2z_wedge", psl2z_wedge_spec()});
    out.push_back({"sl2z_amalgam", sl2z_amalgam_spec()});
    out.push_back({"z3_hnn", z3_hnn_spec()});
    return out;
  }();
  return all;
}

const ShippedSpec& shipped(const std::string& name) {
  for (const ShippedSpec& s : shipped_specs())
    if (s.name == name) return s;
  fail(errc::parse_error, "unknown spec name '" + name + "'");
}

}  // namespace gog
