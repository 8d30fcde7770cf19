#include <doctest.h>

#include "lamseifert/error.hpp"
#include "lamseifert/linalg.hpp"
#include "lamseifert/scalar.hpp"

using namespace lamseifert;

namespace {

ScalarContext sqrt2_field(int precision = ScalarContext::kDefaultPrecision) {
  return ScalarContext({BasisElement{"1", std::nullopt, std::nullopt}, BasisElement{"sqrt2", std::nullopt, Scalar(2)}},
                       precision);
}

}  // namespace

TEST_CASE("rational literals") {
  CHECK(parse_rational("3/6") == Rational(1, 2));
  CHECK(parse_rational("-1.25") == Rational(-5, 4));
  CHECK(parse_rational("7") == Rational(7));
  CHECK(format_rational(Rational(-3, 4)) == "-3/4");
  CHECK_THROWS_AS(parse_rational("1/0"), Error);
  CHECK_THROWS_AS(parse_rational("x"), Error);
}

TEST_CASE("expressions over a quadratic field") {
  const auto f = sqrt2_field();
  const Scalar a = f.parse("1 + sqrt2");
  CHECK(a.coefficient(0) == 1);
  CHECK(a.coefficient(1) == 1);
  CHECK(f.parse("3/2*sqrt2 - 1/2") == Scalar(std::vector<Rational>{Rational(-1, 2), Rational(3, 2)}));
  CHECK(f.multiply(f.parse("sqrt2"), f.parse("sqrt2")) == Scalar(2));
  CHECK(f.to_string(a) == "1 + sqrt2");
  CHECK_THROWS_AS(f.parse("sqrt3"), Error);
}

TEST_CASE("inverse in the field") {
  const auto f = sqrt2_field();
  const Scalar sum = f.parse("2 + 2*sqrt2");
  const Scalar inv = f.inverse(sum);
  CHECK(inv == f.parse("-1/2 + 1/2*sqrt2"));
  CHECK(f.multiply(sum, inv) == Scalar(1));
  CHECK_THROWS_AS(f.inverse(Scalar()), Error);
}

TEST_CASE("ordering uses enclosures") {
  const auto f = sqrt2_field();
  CHECK(f.sign(f.parse("sqrt2 - 1")) == 1);
  CHECK(f.sign(f.parse("sqrt2 - 3/2")) == -1);
  CHECK(f.compare(f.parse("sqrt2"), f.parse("1.4142")) == Ordering::Greater);
  CHECK(f.sign(Scalar()) == 0);
  CHECK(f.to_decimal(f.parse("sqrt2"), 6) == "1.414214");
}

TEST_CASE("ordering reports exhausted precision") {
  const auto f = sqrt2_field(16);
  // p^2 - 2q^2 = 1, so q*sqrt2 - p is about -6.5e-10 while the enclosure of
  // q*sqrt2 at 16 digits is about 5e-8 wide.
  const Scalar tiny = f.parse("543339720*sqrt2 - 768398401");
  try {
    (void)f.sign(tiny);
    FAIL("expected PrecisionExhausted");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::PrecisionExhausted);
  }
  CHECK(sqrt2_field(64).sign(tiny) == -1);
}

TEST_CASE("rank, null space and solve") {
  using linalg::Matrix;
  const Matrix m = Matrix::from_rows({{1, -1, -1}, {-1, 1, 1}}, 3);
  CHECK(linalg::rank(m) == 1);
  const auto ns = linalg::null_space(m);
  CHECK(ns.size() == 2);
  for (const auto& v : ns) {
    for (const auto& x : m.apply(v)) CHECK(x == 0);
  }
  const Matrix a = Matrix::from_rows({{2, 1}, {1, 3}}, 2);
  const auto x = linalg::solve(a, linalg::RationalVector{3, 4});
  REQUIRE(x);
  CHECK((*x)[0] == 1);
  CHECK((*x)[1] == 1);
  CHECK_FALSE(linalg::solve(Matrix::from_rows({{1, 1}, {1, 1}}, 2), linalg::RationalVector{0, 1}));
}
