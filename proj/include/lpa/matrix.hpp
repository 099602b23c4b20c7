#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "lpa/rational.hpp"

namespace lpa {

/// Raised when an operation receives a matrix of the wrong shape.
class ShapeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Dense row-major matrix of exact rationals.
class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(std::size_t rows, std::size_t cols);

  static RatMatrix identity(std::size_t n);
  /// All rows must have equal length.
  static RatMatrix from_rows(const std::vector<RatVector>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  RatVector row(std::size_t i) const;
  RatVector col(std::size_t j) const;
  RatMatrix transpose() const;
  RatVector apply(const RatVector& v) const;

  bool is_zero() const;
  bool is_skew_symmetric() const;

  friend RatMatrix operator+(const RatMatrix& a, const RatMatrix& b);
  friend RatMatrix operator-(const RatMatrix& a, const RatMatrix& b);
  friend RatMatrix operator*(const RatMatrix& a, const RatMatrix& b);
  friend RatMatrix operator*(const Rational& s, const RatMatrix& a);
  friend bool operator==(const RatMatrix& a, const RatMatrix& b);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

/// Rank over Q, by fraction-free (Bareiss) elimination on an integer
/// rescaling of the rows.
std::size_t rank(const RatMatrix& m);

/// Exact determinant (Bareiss). Throws ShapeError for non-square input.
Rational determinant(const RatMatrix& m);

/// Basis of the right null space {v : m v = 0}; its size is cols - rank.
/// The basis is the reduced-echelon one: each vector has a 1 in one free
/// column and 0 in the other free columns.
std::vector<RatVector> kernel_basis(const RatMatrix& m);

/// Some solution of m x = b, or nullopt when the system is inconsistent.
std::optional<RatVector> solve(const RatMatrix& m, const RatVector& b);

/// Characteristic polynomial det(t I - m), returned as coefficients from the
/// constant term upward; the last coefficient is 1. Computed by reduction to
/// upper Hessenberg form. Throws ShapeError for non-square input.
std::vector<Rational> char_poly(const RatMatrix& m);

/// Evaluates a polynomial (coefficients low to high) at a square matrix.
RatMatrix evaluate_polynomial(const std::vector<Rational>& coeffs, const RatMatrix& m);

/// Sparse row for large, very sparse matrices such as simplicial boundary
/// maps: (column, value) pairs sorted by column, no explicit zeros.
using SparseRow = std::vector<std::pair<std::size_t, Rational>>;

/// Rank over Q of a sparse matrix given by its rows.
std::size_t sparse_rank(std::vector<SparseRow> rows);

}  // namespace lpa
