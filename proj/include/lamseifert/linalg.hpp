#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "lamseifert/scalar.hpp"

namespace lamseifert::linalg {

using RationalVector = std::vector<Rational>;

/// Dense row-major matrix over Q. Sizes here are tens of rows, so no sparsity.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  static Matrix from_rows(const std::vector<RationalVector>& rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  RationalVector row(std::size_t r) const;

  RationalVector apply(const RationalVector& x) const;
  ScalarVector apply(const ScalarVector& x) const;

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

struct Echelon {
  Matrix reduced;                    // reduced row echelon form
  std::vector<std::size_t> pivots;   // pivot column of each nonzero row
};

Echelon rref(Matrix m);
std::size_t rank(const Matrix& m);

/// Basis of {x : m x = 0}, one vector per free column, with that free
/// coordinate equal to 1 and the other free coordinates 0.
std::vector<RationalVector> null_space(const Matrix& m);

/// A solution of m x = b with free coordinates 0, or nullopt if inconsistent.
std::optional<RationalVector> solve(const Matrix& m, const RationalVector& b);

/// Same, for a right-hand side in a scalar field. m is rational, so the system
/// splits into one rational system per basis coordinate.
std::optional<ScalarVector> solve(const Matrix& m, const ScalarVector& b);

}  // namespace lamseifert::linalg
