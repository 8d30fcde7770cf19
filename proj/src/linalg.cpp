#include "lamseifert/linalg.hpp"

#include <algorithm>
#include <utility>

namespace lamseifert::linalg {

Matrix Matrix::from_rows(const std::vector<RationalVector>& rows, std::size_t cols) {
  Matrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (std::size_t c = 0; c < cols && c < rows[r].size(); ++c) m(r, c) = rows[r][c];
  }
  return m;
}

RationalVector Matrix::row(std::size_t r) const {
  return RationalVector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                        data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

RationalVector Matrix::apply(const RationalVector& x) const {
  RationalVector out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) {
      if (!(*this)(r, c).is_zero()) out[r] += (*this)(r, c) * x[c];
    }
  }
  return out;
}

ScalarVector Matrix::apply(const ScalarVector& x) const {
  ScalarVector out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) {
      if (!(*this)(r, c).is_zero()) out[r] += x[c] * (*this)(r, c);
    }
  }
  return out;
}

Echelon rref(Matrix m) {
  Echelon result;
  std::size_t lead_row = 0;
  for (std::size_t col = 0; col < m.cols() && lead_row < m.rows(); ++col) {
    std::size_t pivot = lead_row;
    while (pivot < m.rows() && m(pivot, col).is_zero()) ++pivot;
    if (pivot == m.rows()) continue;
    if (pivot != lead_row) {
      for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(pivot, c), m(lead_row, c));
    }
    const Rational inv = 1 / m(lead_row, col);
    for (std::size_t c = col; c < m.cols(); ++c) m(lead_row, c) *= inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == lead_row || m(r, col).is_zero()) continue;
      const Rational factor = m(r, col);
      for (std::size_t c = col; c < m.cols(); ++c) m(r, c) -= factor * m(lead_row, c);
    }
    result.pivots.push_back(col);
    ++lead_row;
  }
  result.reduced = std::move(m);
  return result;
}

std::size_t rank(const Matrix& m) { return rref(m).pivots.size(); }

std::vector<RationalVector> null_space(const Matrix& m) {
  const Echelon e = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : e.pivots) is_pivot[p] = true;

  std::vector<RationalVector> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    RationalVector v(m.cols());
    v[free] = 1;
    for (std::size_t r = 0; r < e.pivots.size(); ++r) v[e.pivots[r]] = -e.reduced(r, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<RationalVector> solve(const Matrix& m, const RationalVector& b) {
  Matrix augmented(m.rows(), m.cols() + 1);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) augmented(r, c) = m(r, c);
    augmented(r, m.cols()) = b[r];
  }
  const Echelon e = rref(std::move(augmented));
  if (!e.pivots.empty() && e.pivots.back() == m.cols()) return std::nullopt;
  RationalVector x(m.cols());
  for (std::size_t r = 0; r < e.pivots.size(); ++r) x[e.pivots[r]] = e.reduced(r, m.cols());
  return x;
}

std::optional<ScalarVector> solve(const Matrix& m, const ScalarVector& b) {
  std::size_t width = 1;
  for (const auto& s : b) width = std::max(width, s.support_size());

  std::vector<RationalVector> per_coordinate;
  for (std::size_t k = 0; k < width; ++k) {
    RationalVector rhs(b.size());
    for (std::size_t r = 0; r < b.size(); ++r) rhs[r] = b[r].coefficient(k);
    auto x = solve(m, rhs);
    if (!x) return std::nullopt;
    per_coordinate.push_back(std::move(*x));
  }

  ScalarVector out(m.cols());
  for (std::size_t c = 0; c < m.cols(); ++c) {
    std::vector<Rational> coeffs(width);
    for (std::size_t k = 0; k < width; ++k) coeffs[k] = per_coordinate[k][c];
    out[c] = Scalar(std::move(coeffs));
  }
  return out;
}

}  // namespace lamseifert::linalg
