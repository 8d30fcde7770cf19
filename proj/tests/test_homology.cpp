#include <doctest.h>

#include "corpus.hpp"
#include "fixtures.hpp"
#include "lamseifert/error.hpp"
#include "lamseifert/homology.hpp"
#include "oracles.hpp"

using namespace lamseifert;
using namespace lamseifert::homology;

TEST_CASE("unknot linking and twist space") {
  const auto d = fixtures::load("unknot").diagram;
  const auto cs = cell_structure(d);
  const auto l = linking_matrix(d, cs);
  CHECK(l.rows() == 1);
  CHECK(l(0, 0) == 0);
  CHECK(l(0, 1) == 1);
  const auto space = valid_twist_space(d, fixtures::ones(1));
  REQUIRE(space.particular);
  CHECK((*space.particular)[0] == Scalar(0));
  CHECK(space.dimension == 0);
}

TEST_CASE("trefoil linking and twist space") {
  const auto d = fixtures::load("trefoil").diagram;
  const auto cs = cell_structure(d);
  const auto l = linking_matrix(d, cs);
  CHECK(l(0, 0) * cs.cycles[0][0] == 3);
  CHECK(symmetric_linking_matrix(d, cs) == l);
  const auto space = valid_twist_space(d, fixtures::ones(1));
  REQUIRE(space.particular);
  CHECK((*space.particular)[0] == Scalar(-3));
  CHECK(space.dimension == 0);
  CHECK(verify(d, fixtures::ones(1), ScalarVector{Scalar(-3)}).valid);
  const auto wrong = verify(d, fixtures::ones(1), ScalarVector{Scalar(0)});
  CHECK_FALSE(wrong.valid);
  CHECK(wrong.residual.size() == 1);
}

TEST_CASE("zero weights leave only directions") {
  const auto d = fixtures::load("theta").diagram;
  const ScalarVector zero(3);
  const auto space = valid_twist_space(d, zero);
  REQUIRE(space.particular);
  for (const auto& x : *space.particular) CHECK(x.is_zero());
  CHECK(space.dimension == 1);
  CHECK(verify(d, zero, zero).valid);
}

TEST_CASE("K needs an invariant weight") {
  const auto d = fixtures::load("theta").diagram;
  try {
    K_class(d, ScalarVector{Scalar(1), Scalar(1), Scalar(1)}, ScalarVector(3));
    FAIL("expected NotInvariant");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotInvariant);
  }
}

TEST_CASE("reflection identity on the unknot") {
  const auto d = fixtures::load("unknot").diagram;
  CHECK(reflection_identity_check(d, fixtures::ones(1), ScalarVector{Scalar(5)}));
  CHECK(K_class(d, fixtures::ones(1), ScalarVector{Scalar(-5)}).meridional[0] == Scalar(-5));
}

TEST_CASE("segments on no cycle are flagged") {
  const auto d = fixtures::load("empty_cone").diagram;
  const auto space = valid_twist_space(d, ScalarVector{Scalar(0), Scalar(1), Scalar(1)});
  CHECK(space.warnings.size() == 1);
  CHECK(space.dimension == 1);
}

TEST_CASE("affine combinations of valid twists stay valid") {
  std::mt19937_64 rng(11);
  for (const auto& s : corpus::make_corpus(40, 99, false)) {
    CAPTURE(s.name);
    const auto space = valid_twist_space(s.diagram, s.weights);
    REQUIRE(space.particular);
    ScalarVector t1 = *space.particular, t2 = *space.particular;
    for (const auto& u : space.directions) {
      const Rational a(std::uniform_int_distribution<int>(-5, 5)(rng), 3);
      const Rational b(std::uniform_int_distribution<int>(-5, 5)(rng), 7);
      for (std::size_t i = 0; i < u.size(); ++i) {
        t1[i] += Scalar(u[i] * a);
        t2[i] += Scalar(u[i] * b);
      }
    }
    const Rational r(std::uniform_int_distribution<int>(-9, 9)(rng), 4);
    ScalarVector mix(t1.size());
    for (std::size_t i = 0; i < mix.size(); ++i) mix[i] = t1[i] + (t2[i] - t1[i]) * r;
    CHECK(verify(s.diagram, s.weights, t1).valid);
    CHECK(verify(s.diagram, s.weights, mix).valid);
    CHECK(space.dimension == s.diagram.segments.size() - meridian_rank(cell_structure(s.diagram)));
  }
}
