#include "lamseifert/scalar.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "lamseifert/error.hpp"
#include "lamseifert/linalg.hpp"

namespace lamseifert {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Syntax: return "SyntaxError";
    case ErrorKind::Structure: return "StructureError";
    case ErrorKind::Index: return "IndexError";
    case ErrorKind::PrecisionExhausted: return "PrecisionExhausted";
    case ErrorKind::NotRepresentable: return "NotRepresentable";
    case ErrorKind::NotNormalizable: return "NotNormalizable";
    case ErrorKind::NonPositiveSum: return "NonPositiveSum";
    case ErrorKind::NonPositiveWeight: return "NonPositiveWeight";
    case ErrorKind::NotInvariant: return "NotInvariant";
    case ErrorKind::SplitDiverged: return "SplitDiverged";
    case ErrorKind::ConventionMismatch: return "ConventionMismatch";
    case ErrorKind::NotASurface: return "NotASurface";
    case ErrorKind::Io: return "IoError";
  }
  return "Error";
}

namespace {

std::string trim_copy(const std::string& s) {
  auto begin = s.find_first_not_of(" \t\n\r");
  if (begin == std::string::npos) return {};
  auto end = s.find_last_not_of(" \t\n\r");
  return s.substr(begin, end - begin + 1);
}

bool all_digits(const std::string& s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
}

BigInt pow10(int n) {
  BigInt r = 1;
  for (int i = 0; i < n; ++i) r *= 10;
  return r;
}

// Digits after the decimal point in a plain decimal literal, or -1.
int fractional_digits(const std::string& text) {
  auto dot = text.find('.');
  if (dot == std::string::npos) return 0;
  return static_cast<int>(text.size() - dot - 1);
}

std::string format_decimal(const Rational& value, int digits) {
  const BigInt scale = pow10(digits);
  Rational scaled = abs(value) * scale;
  BigInt n = numerator(scaled);
  BigInt d = denominator(scaled);
  BigInt q = n / d;
  if ((n % d) * 2 >= d) q += 1;  // round half up

  std::string body = q.str();
  if (digits > 0) {
    if (body.size() <= static_cast<std::size_t>(digits)) {
      body.insert(0, static_cast<std::size_t>(digits) + 1 - body.size(), '0');
    }
    body.insert(body.size() - static_cast<std::size_t>(digits), ".");
  }
  const bool negative = value < 0 && q != 0;
  return negative ? "-" + body : body;
}

}  // namespace

Rational parse_rational(const std::string& raw) {
  const std::string text = trim_copy(raw);
  if (text.empty()) throw Error(ErrorKind::Syntax, "empty rational literal");
  std::string body = text;
  bool negative = false;
  if (body[0] == '-' || body[0] == '+') {
    negative = body[0] == '-';
    body = body.substr(1);
  }

  Rational value;
  if (auto slash = body.find('/'); slash != std::string::npos) {
    const std::string num = body.substr(0, slash);
    const std::string den = body.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) {
      throw Error(ErrorKind::Syntax, "malformed rational '" + text + "'");
    }
    BigInt d(den);
    if (d == 0) throw Error(ErrorKind::Syntax, "zero denominator in '" + text + "'");
    value = Rational(BigInt(num), d);
  } else if (auto dot = body.find('.'); dot != std::string::npos) {
    std::string ipart = body.substr(0, dot);
    std::string fpart = body.substr(dot + 1);
    if (ipart.empty()) ipart = "0";
    if (!all_digits(ipart) || (!fpart.empty() && !all_digits(fpart))) {
      throw Error(ErrorKind::Syntax, "malformed decimal '" + text + "'");
    }
    value = Rational(BigInt(ipart + fpart), pow10(static_cast<int>(fpart.size())));
  } else {
    if (!all_digits(body)) throw Error(ErrorKind::Syntax, "malformed rational '" + text + "'");
    value = Rational(BigInt(body));
  }
  return negative ? Rational(-value) : value;
}

std::string format_rational(const Rational& q) {
  if (denominator(q) == 1) return numerator(q).str();
  return numerator(q).str() + "/" + denominator(q).str();
}

// ---------------------------------------------------------------------------
// Scalar

Scalar::Scalar(const Rational& q) {
  if (!q.is_zero()) coeffs_.push_back(q);
}

Scalar::Scalar(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) { trim(); }

Scalar Scalar::basis_element(std::size_t index) {
  std::vector<Rational> c(index + 1);
  c[index] = 1;
  return Scalar(std::move(c));
}

const Rational& Scalar::coefficient(std::size_t index) const {
  static const Rational zero;
  return index < coeffs_.size() ? coeffs_[index] : zero;
}

bool Scalar::is_integer() const { return is_rational() && denominator(coefficient(0)) == 1; }

Rational Scalar::rational_value() const {
  if (!is_rational()) throw Error(ErrorKind::NotRepresentable, "scalar is not rational");
  return coefficient(0);
}

void Scalar::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Scalar Scalar::operator-() const {
  Scalar r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

Scalar& Scalar::operator+=(const Scalar& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  trim();
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& other) { return *this += -other; }

Scalar& Scalar::operator*=(const Rational& factor) {
  for (auto& c : coeffs_) c *= factor;
  trim();
  return *this;
}

// ---------------------------------------------------------------------------
// ScalarContext

ScalarContext::ScalarContext() : ScalarContext({BasisElement{"1", std::nullopt, std::nullopt}}) {}

ScalarContext::ScalarContext(std::vector<BasisElement> basis, int precision)
    : basis_(std::move(basis)), precision_(precision) {
  if (basis_.empty()) basis_.push_back(BasisElement{"1", std::nullopt, std::nullopt});
  if (precision_ < 1) throw Error(ErrorKind::Structure, "precision must be positive");
  for (std::size_t i = 1; i < basis_.size(); ++i) {
    if (basis_[i].square) {
      check(*basis_[i].square);
      products_[{i, i}] = *basis_[i].square;
    }
  }
  build_enclosures();
}

void ScalarContext::declare_product(std::size_t i, std::size_t j, Scalar value) {
  if (i == 0 || j == 0 || i >= basis_.size() || j >= basis_.size()) {
    throw Error(ErrorKind::Index, "products are declared between non-unit basis elements");
  }
  check(value);
  products_[{std::min(i, j), std::max(i, j)}] = std::move(value);
}

std::optional<std::size_t> ScalarContext::find(const std::string& name) const {
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    if (basis_[i].name == name) return i;
  }
  return std::nullopt;
}

ScalarContext ScalarContext::with_precision(int digits) const {
  ScalarContext copy = *this;
  copy.precision_ = digits;
  copy.build_enclosures();
  return copy;
}

void ScalarContext::check(const Scalar& s) const {
  if (s.support_size() > basis_.size()) {
    throw Error(ErrorKind::NotRepresentable, "scalar has " + std::to_string(s.support_size()) +
                                                 " coefficients but the basis has " +
                                                 std::to_string(basis_.size()));
  }
}

void ScalarContext::build_enclosures() {
  enclosures_.assign(basis_.size(), Interval{});
  enclosures_[0] = Interval{1, 1};
  const BigInt scale = pow10(precision_);
  for (std::size_t i = 1; i < basis_.size(); ++i) {
    const auto& element = basis_[i];
    if (element.decimal) {
      const Rational value = parse_rational(*element.decimal);
      const int given = fractional_digits(trim_copy(*element.decimal));
      if (given > precision_) {
        // Truncate toward zero to the configured precision.
        Rational scaled = value * scale;
        BigInt truncated = numerator(scaled) / denominator(scaled);
        const Rational mid(truncated, scale);
        enclosures_[i] = Interval{mid - Rational(1, scale), mid + Rational(1, scale)};
      } else {
        const Rational radius(1, pow10(given));
        enclosures_[i] = Interval{value - radius, value + radius};
      }
    } else if (element.square && element.square->is_rational() && element.square->coefficient(0) >= 0) {
      const Rational scaled = element.square->coefficient(0) * scale * scale;
      const BigInt floor_scaled = numerator(scaled) / denominator(scaled);
      const BigInt root = boost::multiprecision::sqrt(floor_scaled);
      enclosures_[i] = Interval{Rational(root, scale), Rational(root + 1, scale)};
    } else {
      throw Error(ErrorKind::Structure, "basis element '" + element.name +
                                            "' needs a decimal value or a nonnegative rational square");
    }
  }
}

std::optional<Scalar> ScalarContext::product_of_basis(std::size_t i, std::size_t j) const {
  if (i == 0) return Scalar::basis_element(j);
  if (j == 0) return Scalar::basis_element(i);
  auto it = products_.find({std::min(i, j), std::max(i, j)});
  if (it == products_.end()) return std::nullopt;
  return it->second;
}

Scalar ScalarContext::multiply(const Scalar& a, const Scalar& b) const {
  check(a);
  check(b);
  Scalar out;
  for (std::size_t i = 0; i < a.support_size(); ++i) {
    if (a.coefficient(i).is_zero()) continue;
    for (std::size_t j = 0; j < b.support_size(); ++j) {
      if (b.coefficient(j).is_zero()) continue;
      auto p = product_of_basis(i, j);
      if (!p) {
        throw Error(ErrorKind::NotRepresentable, "product " + basis_[i].name + "*" + basis_[j].name +
                                                     " is not declared in the basis");
      }
      out += *p * (a.coefficient(i) * b.coefficient(j));
    }
  }
  return out;
}

Scalar ScalarContext::inverse(const Scalar& a) const {
  check(a);
  if (a.is_zero()) throw Error(ErrorKind::NotNormalizable, "zero has no inverse");
  if (a.is_rational()) return Scalar(Rational(1) / a.coefficient(0));

  const std::size_t m = basis_.size();
  linalg::Matrix mult(m, m);
  for (std::size_t j = 0; j < m; ++j) {
    Scalar column;
    for (std::size_t i = 0; i < a.support_size(); ++i) {
      if (a.coefficient(i).is_zero()) continue;
      auto p = product_of_basis(i, j);
      if (!p) {
        throw Error(ErrorKind::NotNormalizable,
                    "1/(" + to_string(a) + ") needs the product " + basis_[i].name + "*" + basis_[j].name +
                        "; extend the basis with a multiplication table");
      }
      column += *p * a.coefficient(i);
    }
    for (std::size_t r = 0; r < m; ++r) mult(r, j) = column.coefficient(r);
  }
  linalg::RationalVector unit(m);
  unit[0] = 1;
  auto x = linalg::solve(mult, unit);
  if (!x) {
    throw Error(ErrorKind::NotNormalizable,
                "1/(" + to_string(a) + ") is not representable in the declared basis");
  }
  Scalar inv(std::move(*x));
  if (multiply(a, inv) != Scalar(1)) {
    throw Error(ErrorKind::NotNormalizable, "1/(" + to_string(a) + ") leaves the declared field");
  }
  return inv;
}

Interval ScalarContext::enclose(const Scalar& s) const {
  check(s);
  Interval out{0, 0};
  for (std::size_t i = 0; i < s.support_size(); ++i) {
    const Rational& c = s.coefficient(i);
    if (c.is_zero()) continue;
    const Interval& e = enclosures_[i];
    if (c > 0) {
      out.lo += c * e.lo;
      out.hi += c * e.hi;
    } else {
      out.lo += c * e.hi;
      out.hi += c * e.lo;
    }
  }
  return out;
}

int ScalarContext::sign(const Scalar& s) const {
  if (s.is_zero()) return 0;
  if (s.is_rational()) return s.coefficient(0) > 0 ? 1 : -1;
  const Interval e = enclose(s);
  if (e.lo > 0) return 1;
  if (e.hi < 0) return -1;
  throw Error(ErrorKind::PrecisionExhausted,
              "cannot decide the sign of " + to_string(s) + " with " + std::to_string(precision_) +
                  " digits; raise --precision or supply longer decimals");
}

Ordering ScalarContext::compare(const Scalar& a, const Scalar& b) const {
  const int s = sign(a - b);
  return s < 0 ? Ordering::Less : (s > 0 ? Ordering::Greater : Ordering::Equal);
}

std::string ScalarContext::to_decimal(const Scalar& s, int digits) const {
  const Interval e = enclose(s);
  return format_decimal((e.lo + e.hi) / 2, digits);
}

std::string ScalarContext::to_string(const Scalar& s) const {
  if (s.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = 0; i < s.support_size(); ++i) {
    Rational c = s.coefficient(i);
    if (c.is_zero()) continue;
    const bool negative = c < 0;
    if (negative) c = -c;
    if (first) {
      if (negative) out << "-";
    } else {
      out << (negative ? " - " : " + ");
    }
    first = false;
    const std::string name = i < basis_.size() ? basis_[i].name : "b" + std::to_string(i);
    if (i == 0) {
      out << format_rational(c);
    } else if (c == 1) {
      out << name;
    } else {
      out << format_rational(c) << "*" << name;
    }
  }
  return out.str();
}

Scalar ScalarContext::parse(const std::string& raw) const {
  std::string text;
  for (char ch : raw) {
    if (!std::isspace(static_cast<unsigned char>(ch))) text.push_back(ch);
  }
  if (text.empty()) throw Error(ErrorKind::Syntax, "empty scalar expression");

  // Split into signed terms at top-level '+'/'-' (not the sign of a term).
  std::vector<std::string> terms;
  std::string current;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char ch = text[i];
    if ((ch == '+' || ch == '-') && i > 0 && text[i - 1] != '*' && text[i - 1] != '/') {
      terms.push_back(current);
      current.clear();
    }
    current.push_back(ch);
  }
  terms.push_back(current);

  Scalar result;
  for (std::string term : terms) {
    Rational sign = 1;
    while (!term.empty() && (term[0] == '+' || term[0] == '-')) {
      if (term[0] == '-') sign = -sign;
      term.erase(0, 1);
    }
    if (term.empty()) throw Error(ErrorKind::Syntax, "dangling sign in '" + raw + "'");

    std::string coef_text = "1";
    std::string name;
    if (auto star = term.find('*'); star != std::string::npos) {
      coef_text = term.substr(0, star);
      name = term.substr(star + 1);
    } else if (std::isdigit(static_cast<unsigned char>(term[0])) || term[0] == '.') {
      coef_text = term;
    } else {
      name = term;
    }
    const Rational coef = parse_rational(coef_text) * sign;
    if (name.empty()) {
      result += Scalar(coef);
      continue;
    }
    auto index = find(name);
    if (!index) throw Error(ErrorKind::Syntax, "unknown basis element '" + name + "' in '" + raw + "'");
    result += Scalar::basis_element(*index) * coef;
  }
  return result;
}

}  // namespace lamseifert
