#include <doctest.h>

#include "gog/hom.hpp"
#include "gog/transversal.hpp"
#include "support.hpp"

using namespace gog;
using testsupport::make_s3;

TEST_CASE("identity homomorphism") {
  const GroupPtr z4 = cyclic_group(4);
  const GroupHom id = identity_hom(z4);
  CHECK(id.injective);
  for (Elt a = 0; a < 4; ++a) CHECK(id.apply(a) == a);
}

TEST_CASE("cyclic homomorphisms") {
  const GroupPtr z2 = cyclic_group(2);
  const GroupPtr z4 = cyclic_group(4);
  const GroupPtr z6 = cyclic_group(6);

  const GroupHom into4 = cyclic_hom(z2, z4, 2, true);
  CHECK(into4.injective);
  CHECK(into4.apply(0) == 0);
  CHECK(into4.apply(1) == 2);

  const GroupHom into6 = cyclic_hom(z2, z6, 3, true);
  CHECK(into6.apply(1) == 3);

  // 1 has order 4 in Z4, too big for a Z2 domain
  CHECK_THROWS_AS(cyclic_hom(z2, z4, 1), error);

  // collapsing map exists but is not injective
  try {
    cyclic_hom(z2, z4, 0, true);
    CHECK(false);
  } catch (const error& e) {
    CHECK(e.code() == errc::not_injective);
  }
}

TEST_CASE("validate_hom rejects non-homomorphisms") {
  const GroupPtr z2 = cyclic_group(2);

  try {
    validate_hom(z2, z2, {1, 0});
    CHECK(false);
  } catch (const error& e) {
    CHECK(e.code() == errc::not_homomorphism);
  }

  try {
    validate_hom(z2, z2, {0});
    CHECK(false);
  } catch (const error& e) {
    CHECK(e.code() == errc::bad_shape);
  }

  try {
    validate_hom(z2, z2, {0, 5});
    CHECK(false);
  } catch (const error& e) {
    CHECK(e.code() == errc::bad_hom_target);
  }
}

TEST_CASE("right transversal of Z2 in Z4") {
  const GroupPtr z4 = cyclic_group(4);
  const CosetTransversal t = right_transversal(z4, {0, 2});
  CHECK(t.index() == 2);
  CHECK(t.reps == std::vector<Elt>{0, 1});
  CHECK(t.rep_of(0) == 0);
  CHECK(t.rep_of(2) == 0);
  CHECK(t.rep_of(1) == 1);
  CHECK(t.rep_of(3) == 1);
  CHECK(t.in_subgroup(2));
  CHECK_FALSE(t.in_subgroup(3));
  // every g factors as subgroup part times representative
  for (Elt g = 0; g < 4; ++g) CHECK(z4->times(t.sub_part_of(g), t.rep_of(g)) == g);
}

TEST_CASE("right transversal of Z2 in Z6") {
  const GroupPtr z6 = cyclic_group(6);
  const CosetTransversal t = right_transversal(z6, {0, 3});
  CHECK(t.index() == 3);
  CHECK(t.reps == std::vector<Elt>{0, 1, 2});
  for (Elt g = 0; g < 6; ++g) CHECK(z6->times(t.sub_part_of(g), t.rep_of(g)) == g);
}

TEST_CASE("transversal in a nonabelian group") {
  const GroupPtr s3 = make_s3();
  const auto three = testsupport::elements_of_order(*s3, 3);
  const auto sub = generated_subgroup(*s3, {three[0]});
  const CosetTransversal t = right_transversal(s3, sub);
  CHECK(t.index() == 2);
  for (Elt g = 0; g < 6; ++g) CHECK(s3->times(t.sub_part_of(g), t.rep_of(g)) == g);
}

TEST_CASE("transversal rejects non-subgroups") {
  const GroupPtr z4 = cyclic_group(4);
  try {
    right_transversal(z4, {0, 1});
    CHECK(false);
  } catch (const error& e) {
    CHECK(e.code() == errc::not_a_subgroup);
  }
  CHECK_THROWS_AS(right_transversal(z4, {1, 3}), error);
}
