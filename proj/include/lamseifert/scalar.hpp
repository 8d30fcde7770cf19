#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace lamseifert {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

/// Parses "3", "-7/4", "0.125" into an exact rational. Throws Error(Syntax).
Rational parse_rational(const std::string& text);
std::string format_rational(const Rational& q);

/// A real number written as a Q-linear combination of declared basis reals
/// b_0 = 1, b_1, ..., b_{m-1}. Coefficients beyond the stored length are zero.
///
/// Addition, negation and rational scaling need no context. Products, inverses
/// and ordering go through a ScalarContext, which knows the multiplication
/// table and decimal enclosures of the basis.
class Scalar {
 public:
  Scalar() = default;
  Scalar(const Rational& q);  // NOLINT(google-explicit-constructor)
  Scalar(long long n) : Scalar(Rational(n)) {}  // NOLINT(google-explicit-constructor)
  explicit Scalar(std::vector<Rational> coefficients);

  static Scalar basis_element(std::size_t index);

  const Rational& coefficient(std::size_t index) const;
  const std::vector<Rational>& coefficients() const { return coeffs_; }
  /// One past the last nonzero coefficient.
  std::size_t support_size() const { return coeffs_.size(); }

  bool is_zero() const { return coeffs_.empty(); }
  /// True when only the coefficient of 1 is nonzero.
  bool is_rational() const { return coeffs_.size() <= 1; }
  /// True when rational with denominator 1.
  bool is_integer() const;
  Rational rational_value() const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& other);
  Scalar& operator-=(const Scalar& other);
  Scalar& operator*=(const Rational& factor);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Rational& q) { return a *= q; }
  friend Scalar operator*(const Rational& q, Scalar a) { return a *= q; }
  friend bool operator==(const Scalar& a, const Scalar& b) { return a.coeffs_ == b.coeffs_; }
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

using ScalarVector = std::vector<Scalar>;

struct BasisElement {
  std::string name;
  /// Decimal expansion, e.g. "1.41421356...". Optional when `square` is a
  /// nonnegative rational: the enclosure is then computed by integer sqrt.
  std::optional<std::string> decimal;
  /// The element's square, expressed in the basis.
  std::optional<Scalar> square;
};

struct Interval {
  Rational lo;
  Rational hi;
};

enum class Ordering { Less, Equal, Greater };

/// Read-only description of the scalar field: basis, multiplication table and
/// decimal enclosures at a fixed number of digits.
///
/// Equality of Scalars is coefficient-wise; the caller is responsible for the
/// basis being linearly independent over Q. Declaring (1, sqrt2, 2*sqrt2)
/// silently breaks equality and makes comparisons fail loudly.
class ScalarContext {
 public:
  static constexpr int kDefaultPrecision = 64;

  /// The rationals: basis (1).
  ScalarContext();
  /// `basis[0]` must be the unit; its name is kept for display only.
  explicit ScalarContext(std::vector<BasisElement> basis, int precision = kDefaultPrecision);

  /// Declares b_i * b_j for two non-unit elements.
  void declare_product(std::size_t i, std::size_t j, Scalar value);

  std::size_t dimension() const { return basis_.size(); }
  int precision() const { return precision_; }
  const std::vector<BasisElement>& basis() const { return basis_; }
  std::optional<std::size_t> find(const std::string& name) const;
  ScalarContext with_precision(int digits) const;

  /// Throws Error(NotRepresentable) for a coefficient outside the basis.
  void check(const Scalar& s) const;

  Scalar multiply(const Scalar& a, const Scalar& b) const;
  /// Multiplicative inverse inside the field spanned by the basis. Throws
  /// Error(NotNormalizable) when a is zero, when a needed product is
  /// undeclared, or when the inverse leaves the span.
  Scalar inverse(const Scalar& a) const;

  Interval enclose(const Scalar& s) const;
  /// Sign decided by interval evaluation. Throws Error(PrecisionExhausted)
  /// when the enclosure of a nonzero, irrational value straddles zero.
  int sign(const Scalar& s) const;
  Ordering compare(const Scalar& a, const Scalar& b) const;
  bool less(const Scalar& a, const Scalar& b) const { return compare(a, b) == Ordering::Less; }
  bool is_positive(const Scalar& s) const { return sign(s) > 0; }

  /// Midpoint of the enclosure, rounded to `digits` fractional digits.
  std::string to_decimal(const Scalar& s, int digits = 12) const;
  /// "1 + 3/2*sqrt2" style rendering.
  std::string to_string(const Scalar& s) const;
  /// Parses a rational ("3/2") or a linear expression in basis names
  /// ("1 + sqrt2", "-2/3*sqrt2 + 1/2").
  Scalar parse(const std::string& text) const;

 private:
  std::optional<Scalar> product_of_basis(std::size_t i, std::size_t j) const;
  void build_enclosures();

  std::vector<BasisElement> basis_;
  int precision_ = kDefaultPrecision;
  std::map<std::pair<std::size_t, std::size_t>, Scalar> products_;
  std::vector<Interval> enclosures_;
};

}  // namespace lamseifert
