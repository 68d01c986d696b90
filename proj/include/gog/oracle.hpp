#pragma once

#include <string>
#include <unordered_map>
#include <variant>
#include <vector>

#include "gog/census.hpp"
#include "gog/normal_forms.hpp"

namespace gog {

// Affine map of the integers: x -> sign * x + shift, sign in {+1, -1}.
struct AffineMap {
  int sign = 1;
  long long shift = 0;
};

// 2x2 integer matrix. Wide entries keep radius-bounded products exact.
struct Mat2 {
  __int128 a = 1, b = 0, c = 0, d = 1;
};

// Element of F x| Z for a finite group F with an automorphism twist.
struct SemiPair {
  Elt a = 0;
  long long k = 0;
};

using ModelValue = std::variant<AffineMap, Mat2, SemiPair>;

enum class ModelKind {
  integer_affine,
  integer_matrix_2x2,
  semidirect_finite_by_z,
};

// Faithful concrete realization of the colimit group of a spec. vertex_images
// maps each vertex group elementwise; edge_images gives the stable letter of
// each edge. projective identifies a matrix with its negative.
struct ConcreteModel {
  ModelKind kind = ModelKind::integer_affine;
  bool projective = false;
  SpecPtr spec;
  std::vector<std::vector<ModelValue>> vertex_images;
  std::vector<ModelValue> edge_images;
  // semidirect data: base group and the twist automorphism used per stable letter
  GroupPtr base;
  std::vector<Elt> twist;
  int faithful_radius = 0;

  ModelValue identity() const;
  ModelValue mul(const ModelValue& x, const ModelValue& y) const;
  ModelValue inv(const ModelValue& x) const;
  std::string value_key(const ModelValue& v) const;
};

// Soundness: each vertex image is a homomorphism and each stable letter
// conjugates alpha images to beta images. Throws oracle_mismatch.
void verify_model(const ConcreteModel& model);

// Distinct canonical classes up to the given crossing radius must evaluate to
// distinct values at every vertex basepoint. Throws oracle_mismatch.
void verify_faithful(const ConcreteModel& model, int radius, long long budget = 1'000'000);

ModelValue eval_word(const ConcreteModel& model, const Word& w);

struct BallCensus {
  int radius = 0;
  // new_at_base[m]: values first reached back at the basepoint after exactly m crossings
  std::vector<long long> new_at_base;
  std::unordered_map<std::string, int> first_length;
};

// Breadth-first sweep over (vertex, value) states; one step is one crossing
// followed by absorbing an arrival vertex element.
BallCensus ball_enumerate(const ConcreteModel& model, VertexId basepoint, int radius,
                          long long budget = 4'000'000);

// Explores every maximal reduction sequence; true when all of them terminate
// at the same canonical form.
bool reduction_order_oracle(const Word& w, long long budget = 200'000);

// Fundamental group rank via an explicit spanning tree, independent of the
// Euler characteristic path.
int spanning_tree_pi1(const Multigraph& mg, int vertex);

}  // namespace gog
