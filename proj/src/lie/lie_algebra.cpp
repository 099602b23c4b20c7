#include "lpa/lie_algebra.hpp"

#include <algorithm>

namespace lpa {

std::string BasisElement::label() const {
  switch (kind) {
    case BasisKind::Diagonal:
      return "E" + std::to_string(p) + "," + std::to_string(p);
    case BasisKind::DiagonalDifference:
      return "E" + std::to_string(p) + "," + std::to_string(p) + "-E" + std::to_string(p + 1) + "," +
             std::to_string(p + 1);
    case BasisKind::Strict:
      return "E" + std::to_string(p) + "," + std::to_string(q);
    case BasisKind::Custom:
      return name;
  }
  return name;
}

namespace {

/// Matrix elements are tiny here, so a sorted map is adequate.
MatrixCoords commutator(const MatrixCoords& x, const MatrixCoords& y) {
  MatrixCoords out;
  for (const auto& [a, xa] : x)
    for (const auto& [b, yb] : y) {
      if (a.second == b.first) out[{a.first, b.second}] += xa * yb;
      if (b.second == a.first) out[{b.first, a.second}] -= xa * yb;
    }
  for (auto it = out.begin(); it != out.end();) it = (it->second == 0) ? out.erase(it) : std::next(it);
  return out;
}

MatrixCoords matrix_of_basis(const BasisElement& b) {
  switch (b.kind) {
    case BasisKind::Diagonal:
      return {{{b.p, b.p}, Rational(1)}};
    case BasisKind::DiagonalDifference:
      return {{{b.p, b.p}, Rational(1)}, {{b.p + 1, b.p + 1}, Rational(-1)}};
    case BasisKind::Strict:
      return {{{b.p, b.q}, Rational(1)}};
    case BasisKind::Custom:
      break;
  }
  throw AlgebraError("custom basis elements have no matrix form");
}

SparseVector to_sparse(const RatVector& v) {
  SparseVector s;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i] != 0) s.emplace_back(i, v[i]);
  return s;
}

}  // namespace

void LieAlgebra::fill_from_matrix_units() {
  const std::size_t d = dim();
  for (std::size_t i = 0; i < d; ++i)
    if (basis_[i].kind == BasisKind::Strict) strict_pos_[{basis_[i].p, basis_[i].q}] = i;
  std::vector<MatrixCoords> mats;
  mats.reserve(d);
  for (const auto& b : basis_) mats.push_back(matrix_of_basis(b));
  table_.assign(d * d, {});
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j) {
      const MatrixCoords c = commutator(mats[i], mats[j]);
      if (c.empty()) continue;
      SparseVector v = to_sparse(from_matrix_coords(c));
      SparseVector neg = v;
      for (auto& e : neg) e.second = -e.second;
      table_[i * d + j] = std::move(v);
      table_[j * d + i] = std::move(neg);
    }
}

LieAlgebra build_g(const Poset& p) {
  LieAlgebra g;
  g.kind_ = AlgebraKind::Incidence;
  g.host_ = p;
  for (int i = 1; i <= p.size(); ++i) g.basis_.push_back({BasisKind::Diagonal, i, i, {}});
  for (const auto& [a, b] : p.relations()) g.basis_.push_back({BasisKind::Strict, a, b, {}});
  g.fill_from_matrix_units();
  return g;
}

LieAlgebra build_gA(const Poset& p) {
  LieAlgebra g;
  g.kind_ = AlgebraKind::TraceZero;
  g.host_ = p;
  for (int i = 1; i < p.size(); ++i) g.basis_.push_back({BasisKind::DiagonalDifference, i, i, {}});
  for (const auto& [a, b] : p.relations()) g.basis_.push_back({BasisKind::Strict, a, b, {}});
  g.fill_from_matrix_units();
  return g;
}

LieAlgebra build_custom(std::size_t dim, const std::vector<BracketRule>& brackets,
                        std::vector<std::string> names) {
  LieAlgebra g;
  g.kind_ = AlgebraKind::Custom;
  for (std::size_t i = 0; i < dim; ++i) {
    std::string name = i < names.size() ? names[i] : "e" + std::to_string(i + 1);
    g.basis_.push_back({BasisKind::Custom, 0, 0, std::move(name)});
  }
  g.table_.assign(dim * dim, {});
  std::vector<bool> set(dim * dim, false);
  for (const auto& [i, j, value] : brackets) {
    if (i >= dim || j >= dim) throw AlgebraError("bracket references a generator out of range");
    if (i == j) {
      if (!value.empty()) throw AlgebraError("[x, x] must vanish");
      continue;
    }
    SparseVector v;
    for (const auto& e : value) {
      if (e.first >= dim) throw AlgebraError("bracket value references a generator out of range");
      if (e.second != 0) v.push_back(e);
    }
    std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    SparseVector neg = v;
    for (auto& e : neg) e.second = -e.second;
    if (set[i * dim + j] && g.table_[i * dim + j] != v) throw AlgebraError("conflicting brackets for one pair");
    if (set[j * dim + i] && g.table_[j * dim + i] != neg) throw AlgebraError("bracket is not antisymmetric");
    g.table_[i * dim + j] = std::move(v);
    g.table_[j * dim + i] = std::move(neg);
    set[i * dim + j] = set[j * dim + i] = true;
  }
  if (auto bad = g.jacobi_violation()) {
    throw JacobiError("Jacobi identity fails on generators (" + g.basis_[(*bad)[0]].label() + ", " +
                          g.basis_[(*bad)[1]].label() + ", " + g.basis_[(*bad)[2]].label() + ")",
                      *bad);
  }
  return g;
}

RatVector LieAlgebra::bracket(const RatVector& a, const RatVector& b) const {
  if (a.size() != dim() || b.size() != dim()) throw ShapeError("bracket: element length mismatch");
  RatVector out(dim(), Rational(0));
  for (std::size_t i = 0; i < dim(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < dim(); ++j) {
      if (b[j] == 0) continue;
      const Rational s = a[i] * b[j];
      for (const auto& [k, c] : bracket_of_basis(i, j)) out[k] += s * c;
    }
  }
  return out;
}

RatMatrix LieAlgebra::ad_matrix(const RatVector& a) const {
  if (a.size() != dim()) throw ShapeError("ad_matrix: element length mismatch");
  RatMatrix m(dim(), dim());
  for (std::size_t i = 0; i < dim(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < dim(); ++j)
      for (const auto& [k, c] : bracket_of_basis(i, j)) m(k, j) += a[i] * c;
  }
  return m;
}

std::optional<std::size_t> LieAlgebra::strict_index(int p, int q) const {
  auto it = strict_pos_.find({p, q});
  if (it == strict_pos_.end()) return std::nullopt;
  return it->second;
}

MatrixCoords LieAlgebra::to_matrix_coords(const RatVector& v) const {
  if (kind_ == AlgebraKind::Custom) throw AlgebraError("custom algebras have no matrix coordinates");
  if (v.size() != dim()) throw ShapeError("to_matrix_coords: element length mismatch");
  MatrixCoords m;
  for (std::size_t i = 0; i < dim(); ++i) {
    if (v[i] == 0) continue;
    for (const auto& [rc, x] : matrix_of_basis(basis_[i])) m[rc] += v[i] * x;
  }
  for (auto it = m.begin(); it != m.end();) it = (it->second == 0) ? m.erase(it) : std::next(it);
  return m;
}

RatVector LieAlgebra::from_matrix_coords(const MatrixCoords& m) const {
  if (kind_ == AlgebraKind::Custom) throw AlgebraError("custom algebras have no matrix coordinates");
  const int n = host_->size();
  RatVector v(dim(), Rational(0));
  std::vector<Rational> diag(static_cast<std::size_t>(n + 1), Rational(0));
  for (const auto& [rc, x] : m) {
    if (x == 0) continue;
    const auto [p, q] = rc;
    if (p < 1 || p > n || q < 1 || q > n) throw AlgebraError("matrix entry outside the poset");
    if (p == q) {
      diag[p] += x;
      continue;
    }
    auto pos = strict_index(p, q);
    if (!pos) {
      throw AlgebraError("entry (" + std::to_string(p) + "," + std::to_string(q) + ") is not a relation of the poset");
    }
    v[*pos] += x;
  }
  if (kind_ == AlgebraKind::Incidence) {
    for (int p = 1; p <= n; ++p) v[p - 1] = diag[p];
  } else {
    Rational running = 0;
    for (int p = 1; p <= n; ++p) {
      running += diag[p];
      if (p < n) v[p - 1] = running;
    }
    if (running != 0) throw AlgebraError("element has nonzero trace, so it is not in g_A");
  }
  return v;
}

bool LieAlgebra::is_antisymmetric() const {
  for (std::size_t i = 0; i < dim(); ++i)
    for (std::size_t j = 0; j < dim(); ++j) {
      SparseVector neg = bracket_of_basis(j, i);
      for (auto& e : neg) e.second = -e.second;
      if (neg != bracket_of_basis(i, j)) return false;
    }
  return true;
}

std::optional<std::array<std::size_t, 3>> LieAlgebra::jacobi_violation() const {
  const std::size_t d = dim();
  // [x,[y,z]] + [y,[z,x]] + [z,[x,y]] with sparse inner brackets.
  auto accumulate = [&](std::size_t outer, const SparseVector& inner, RatVector& acc) {
    for (const auto& [k, c] : inner)
      for (const auto& [m, e] : bracket_of_basis(outer, k)) acc[m] += c * e;
  };
  RatVector acc(d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j)
      for (std::size_t k = j + 1; k < d; ++k) {
        std::fill(acc.begin(), acc.end(), Rational(0));
        accumulate(i, bracket_of_basis(j, k), acc);
        accumulate(j, bracket_of_basis(k, i), acc);
        accumulate(k, bracket_of_basis(i, j), acc);
        if (!lpa::is_zero(acc)) return std::array<std::size_t, 3>{i, j, k};
      }
  return std::nullopt;
}

Rational trace(const LieAlgebra& g, const RatVector& a) {
  Rational t = 0;
  for (const auto& [rc, x] : g.to_matrix_coords(a))
    if (rc.first == rc.second) t += x;
  return t;
}

RatVector identity_element(const LieAlgebra& g) {
  if (g.kind() != AlgebraKind::Incidence) throw AlgebraError("the identity lies in g(P) only");
  MatrixCoords m;
  for (int p = 1; p <= g.host()->size(); ++p) m[{p, p}] = 1;
  return g.from_matrix_coords(m);
}

RatVector unit_vector(std::size_t dim, std::size_t i) {
  RatVector v(dim, Rational(0));
  v.at(i) = 1;
  return v;
}

}  // namespace lpa
