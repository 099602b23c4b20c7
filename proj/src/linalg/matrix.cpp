#include "lpa/matrix.hpp"

#include <algorithm>
#include <map>

namespace lpa {

RatMatrix::RatMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, Rational(0)) {}

RatMatrix RatMatrix::identity(std::size_t n) {
  RatMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RatMatrix RatMatrix::from_rows(const std::vector<RatVector>& rows) {
  if (rows.empty()) return {};
  RatMatrix m(rows.size(), rows.front().size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != m.cols_) throw ShapeError("from_rows: ragged rows");
    for (std::size_t j = 0; j < m.cols_; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

RatVector RatMatrix::row(std::size_t i) const {
  return RatVector(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                   data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

RatVector RatMatrix::col(std::size_t j) const {
  RatVector v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
  return v;
}

RatMatrix RatMatrix::transpose() const {
  RatMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

RatVector RatMatrix::apply(const RatVector& v) const {
  if (v.size() != cols_) throw ShapeError("apply: vector length mismatch");
  RatVector out(rows_, Rational(0));
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if ((*this)(i, j) != 0 && v[j] != 0) out[i] += (*this)(i, j) * v[j];
  return out;
}

bool RatMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Rational& x) { return x == 0; });
}

bool RatMatrix::is_skew_symmetric() const {
  if (!is_square()) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = i; j < cols_; ++j)
      if ((*this)(i, j) != -(*this)(j, i)) return false;
  return true;
}

RatMatrix operator+(const RatMatrix& a, const RatMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw ShapeError("operator+: shape mismatch");
  RatMatrix c = a;
  for (std::size_t k = 0; k < c.data_.size(); ++k) c.data_[k] += b.data_[k];
  return c;
}

RatMatrix operator-(const RatMatrix& a, const RatMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw ShapeError("operator-: shape mismatch");
  RatMatrix c = a;
  for (std::size_t k = 0; k < c.data_.size(); ++k) c.data_[k] -= b.data_[k];
  return c;
}

RatMatrix operator*(const RatMatrix& a, const RatMatrix& b) {
  if (a.cols_ != b.rows_) throw ShapeError("operator*: inner dimension mismatch");
  RatMatrix c(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Rational& aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j)
        if (b(k, j) != 0) c(i, j) += aik * b(k, j);
    }
  return c;
}

RatMatrix operator*(const Rational& s, const RatMatrix& a) {
  RatMatrix c = a;
  for (auto& x : c.data_) x *= s;
  return c;
}

bool operator==(const RatMatrix& a, const RatMatrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

namespace {

/// Integer copy of m with each row multiplied by the lcm of its
/// denominators. Returns the product of the multipliers through `scale`.
std::vector<std::vector<Integer>> integer_rows(const RatMatrix& m, Integer* scale) {
  std::vector<std::vector<Integer>> a(m.rows(), std::vector<Integer>(m.cols()));
  if (scale) *scale = 1;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Integer l = 1;
    for (std::size_t j = 0; j < m.cols(); ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).get_den_mpz_t());
    for (std::size_t j = 0; j < m.cols(); ++j) a[i][j] = m(i, j).get_num() * (l / m(i, j).get_den());
    if (scale) *scale *= l;
  }
  return a;
}

/// In-place Bareiss elimination; returns the rank and, for square input,
/// the sign-corrected determinant of the integer matrix through `det`.
std::size_t bareiss(std::vector<std::vector<Integer>>& a, std::size_t cols, Integer* det) {
  const std::size_t rows = a.size();
  std::size_t r = 0;
  Integer prev = 1;
  int sign = 1;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    if (p != r) {
      std::swap(a[p], a[r]);
      sign = -sign;
    }
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        a[i][j] = a[i][j] * a[r][c] - a[i][c] * a[r][j];
        mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), prev.get_mpz_t());
      }
      a[i][c] = 0;
    }
    prev = a[r][c];
    ++r;
  }
  if (det) *det = (r == rows && rows == cols) ? Integer(sign * prev) : Integer(0);
  return r;
}

/// Reduced row echelon form over Q, in place; returns the pivot columns.
std::vector<std::size_t> rref(RatMatrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && m(p, c) == 0) ++p;
    if (p == m.rows()) continue;
    if (p != r)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
    const Rational inv = 1 / m(r, c);
    for (std::size_t j = c; j < m.cols(); ++j) m(r, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c) == 0) continue;
      const Rational f = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j)
        if (m(r, j) != 0) m(i, j) -= f * m(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

std::size_t rank(const RatMatrix& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  auto a = integer_rows(m, nullptr);
  return bareiss(a, m.cols(), nullptr);
}

Rational determinant(const RatMatrix& m) {
  if (!m.is_square()) throw ShapeError("determinant: matrix is not square");
  if (m.rows() == 0) return 1;
  Integer scale;
  auto a = integer_rows(m, &scale);
  Integer det;
  bareiss(a, m.cols(), &det);
  Rational out(det, scale);
  out.canonicalize();
  return out;
}

std::vector<RatVector> kernel_basis(const RatMatrix& m) {
  RatMatrix r = m;
  const auto pivots = rref(r);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<RatVector> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    RatVector v(m.cols(), Rational(0));
    v[f] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -r(i, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<RatVector> solve(const RatMatrix& m, const RatVector& b) {
  if (b.size() != m.rows()) throw ShapeError("solve: right-hand side length mismatch");
  RatMatrix aug(m.rows(), m.cols() + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
    aug(i, m.cols()) = b[i];
  }
  const auto pivots = rref(aug);
  if (!pivots.empty() && pivots.back() == m.cols()) return std::nullopt;
  RatVector x(m.cols(), Rational(0));
  for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = aug(i, m.cols());
  return x;
}

std::vector<Rational> char_poly(const RatMatrix& m) {
  if (!m.is_square()) throw ShapeError("char_poly: matrix is not square");
  const std::size_t n = m.rows();
  RatMatrix h = m;
  // Similarity reduction to upper Hessenberg form.
  for (std::size_t k = 1; k + 1 < n; ++k) {
    std::size_t i = k;
    while (i < n && h(i, k - 1) == 0) ++i;
    if (i == n) continue;
    if (i != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(h(i, j), h(k, j));
      for (std::size_t j = 0; j < n; ++j) std::swap(h(j, i), h(j, k));
    }
    const Rational pivot = h(k, k - 1);
    for (std::size_t r = k + 1; r < n; ++r) {
      if (h(r, k - 1) == 0) continue;
      const Rational u = h(r, k - 1) / pivot;
      for (std::size_t j = 0; j < n; ++j)
        if (h(k, j) != 0) h(r, j) -= u * h(k, j);
      for (std::size_t j = 0; j < n; ++j)
        if (h(j, r) != 0) h(j, k) += u * h(j, r);
    }
  }
  // p[k] is the characteristic polynomial of the leading k x k block.
  std::vector<std::vector<Rational>> p(n + 1);
  p[0] = {Rational(1)};
  for (std::size_t k = 1; k <= n; ++k) {
    std::vector<Rational> next(k + 1, Rational(0));
    const auto& prev = p[k - 1];
    for (std::size_t d = 0; d < prev.size(); ++d) {
      next[d + 1] += prev[d];
      next[d] -= h(k - 1, k - 1) * prev[d];
    }
    Rational prod = 1;
    for (std::size_t i = k - 1; i-- > 0;) {
      prod *= h(i + 1, i);
      if (prod == 0) break;
      const Rational t = h(i, k - 1) * prod;
      if (t == 0) continue;
      for (std::size_t d = 0; d < p[i].size(); ++d) next[d] -= t * p[i][d];
    }
    p[k] = std::move(next);
  }
  return p[n];
}

RatMatrix evaluate_polynomial(const std::vector<Rational>& coeffs, const RatMatrix& m) {
  if (!m.is_square()) throw ShapeError("evaluate_polynomial: matrix is not square");
  RatMatrix acc(m.rows(), m.cols());
  for (std::size_t k = coeffs.size(); k-- > 0;) {
    acc = acc * m + coeffs[k] * RatMatrix::identity(m.rows());
  }
  return acc;
}

std::size_t sparse_rank(std::vector<SparseRow> rows) {
  std::map<std::size_t, SparseRow> pivots;  // leading column -> normalized row
  for (auto& row : rows) {
    SparseRow r = std::move(row);
    while (!r.empty()) {
      const std::size_t lead = r.front().first;
      auto it = pivots.find(lead);
      if (it == pivots.end()) {
        const Rational inv = 1 / r.front().second;
        for (auto& e : r) e.second *= inv;
        pivots.emplace(lead, std::move(r));
        break;
      }
      const Rational f = r.front().second;
      const SparseRow& p = it->second;
      SparseRow out;
      out.reserve(r.size() + p.size());
      std::size_t a = 0, b = 0;
      while (a < r.size() || b < p.size()) {
        if (b == p.size() || (a < r.size() && r[a].first < p[b].first)) {
          out.push_back(std::move(r[a++]));
        } else if (a == r.size() || p[b].first < r[a].first) {
          out.emplace_back(p[b].first, -f * p[b].second);
          ++b;
        } else {
          Rational v = r[a].second - f * p[b].second;
          if (v != 0) out.emplace_back(r[a].first, std::move(v));
          ++a;
          ++b;
        }
      }
      r = std::move(out);
    }
  }
  return pivots.size();
}

}  // namespace lpa
