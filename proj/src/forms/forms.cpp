#include "lpa/forms.hpp"

#include <functional>
#include <numeric>
#include <random>

namespace lpa {

OneForm OneForm::from_support(const std::vector<Relation>& support) {
  OneForm f;
  for (const auto& r : support) f.add(r, 1);
  return f;
}

void OneForm::add(const Relation& pair, const Rational& coeff) {
  auto& c = coeffs_[pair];
  c += coeff;
  if (c == 0) coeffs_.erase(pair);
}

Rational OneForm::coeff(const Relation& pair) const {
  auto it = coeffs_.find(pair);
  return it == coeffs_.end() ? Rational(0) : it->second;
}

std::vector<Relation> OneForm::support() const {
  std::vector<Relation> s;
  for (const auto& [r, c] : coeffs_) s.push_back(r);
  return s;
}

std::vector<Relation> OneForm::strict_support() const {
  std::vector<Relation> s;
  for (const auto& [r, c] : coeffs_)
    if (r.first != r.second) s.push_back(r);
  return s;
}

std::vector<Relation> OneForm::diagonal_support() const {
  std::vector<Relation> s;
  for (const auto& [r, c] : coeffs_)
    if (r.first == r.second) s.push_back(r);
  return s;
}

OneForm OneForm::strict_part() const {
  OneForm f;
  for (const auto& [r, c] : coeffs_)
    if (r.first != r.second) f.coeffs_.emplace(r, c);
  return f;
}

OneForm OneForm::relabeled(const std::vector<int>& map) const {
  OneForm f;
  for (const auto& [r, c] : coeffs_) f.add({map.at(r.first), map.at(r.second)}, c);
  return f;
}

void OneForm::check_host(const Poset& p) const {
  for (const auto& [r, c] : coeffs_) {
    const auto [a, b] = r;
    const bool inside = a >= 1 && b >= 1 && a <= p.size() && b <= p.size() && (a == b || p.less(a, b));
    if (!inside) {
      throw AlgebraError("form term E*" + std::to_string(a) + "," + std::to_string(b) +
                         " is not a diagonal pair or relation of the poset");
    }
  }
}

OneForm operator+(const OneForm& a, const OneForm& b) {
  OneForm f = a;
  for (const auto& [r, c] : b.coeffs_) f.add(r, c);
  return f;
}

RatVector functional(const LieAlgebra& g, const OneForm& phi) {
  if (!g.host()) throw AlgebraError("one-forms on poset supports need a poset algebra");
  phi.check_host(*g.host());
  RatVector v(g.dim(), Rational(0));
  for (std::size_t i = 0; i < g.dim(); ++i) {
    const auto& b = g.basis()[i];
    switch (b.kind) {
      case BasisKind::Diagonal:
        v[i] = phi.coeff({b.p, b.p});
        break;
      case BasisKind::DiagonalDifference:
        v[i] = phi.coeff({b.p, b.p}) - phi.coeff({b.p + 1, b.p + 1});
        break;
      case BasisKind::Strict:
        v[i] = phi.coeff({b.p, b.q});
        break;
      case BasisKind::Custom:
        break;
    }
  }
  return v;
}

RatMatrix dphi_matrix(const LieAlgebra& g, const RatVector& phi) {
  if (phi.size() != g.dim()) throw ShapeError("dphi_matrix: form length mismatch");
  const std::size_t d = g.dim();
  RatMatrix m(d, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j) {
      Rational s = 0;
      for (const auto& [k, c] : g.bracket_of_basis(i, j))
        if (phi[k] != 0) s += c * phi[k];
      if (s == 0) continue;
      m(i, j) = -s;
      m(j, i) = s;
    }
  return m;
}

namespace {

void fill_coords(const LieAlgebra& g, KernelReport& r) {
  if (g.kind() == AlgebraKind::Custom) return;
  for (const auto& v : r.basis) r.coords.push_back(g.to_matrix_coords(v));
}

}  // namespace

KernelReport kernel(const LieAlgebra& g, const RatVector& phi) {
  KernelReport r;
  r.basis = kernel_basis(dphi_matrix(g, phi));
  r.dimension = r.basis.size();
  r.trace_zero = g.kind() == AlgebraKind::TraceZero;
  fill_coords(g, r);
  return r;
}

KernelReport kernel(const Poset& p, const OneForm& phi, bool restrict_to_gA) {
  const LieAlgebra g = build_g(p);
  KernelReport full = kernel(g, functional(g, phi));
  if (!restrict_to_gA) return full;
  // Intersect span(basis) with the hyperplane trace = 0.
  RatVector traces;
  for (const auto& v : full.basis) traces.push_back(trace(g, v));
  KernelReport r;
  r.trace_zero = true;
  if (!full.basis.empty()) {
    for (const auto& c : kernel_basis(RatMatrix::from_rows({traces}))) {
      RatVector v(g.dim(), Rational(0));
      for (std::size_t k = 0; k < c.size(); ++k)
        if (c[k] != 0)
          for (std::size_t i = 0; i < g.dim(); ++i) v[i] += c[k] * full.basis[k][i];
      r.basis.push_back(std::move(v));
    }
  }
  r.dimension = r.basis.size();
  fill_coords(g, r);
  return r;
}

IndexSample sample_index(const LieAlgebra& g, IndexOptions options) {
  const std::size_t d = g.dim();
  IndexSample best{d, RatVector(d, Rational(0))};
  if (d == 0) return best;
  std::mt19937_64 rng(options.seed);
  std::uniform_int_distribution<unsigned long> coeff(1, 1ul << 20);
  for (int t = 0; t < options.trials && best.index > d % 2; ++t) {
    RatVector phi(d);
    for (auto& x : phi) x = Rational(coeff(rng));
    const std::size_t corank = d - rank(dphi_matrix(g, phi));
    if (corank < best.index || t == 0) best = {corank, std::move(phi)};
  }
  return best;
}

std::size_t index(const LieAlgebra& g, IndexOptions options) { return sample_index(g, options).index; }

OneForm form_from_functional(const LieAlgebra& g, const RatVector& phi) {
  if (!g.host()) throw AlgebraError("form_from_functional needs a poset algebra");
  if (phi.size() != g.dim()) throw ShapeError("form_from_functional: length mismatch");
  OneForm f;
  const int n = g.host()->size();
  std::vector<Rational> diag(static_cast<std::size_t>(n + 1), Rational(0));
  for (std::size_t i = 0; i < g.dim(); ++i) {
    const auto& b = g.basis()[i];
    if (b.kind == BasisKind::Strict) f.add({b.p, b.q}, phi[i]);
    if (b.kind == BasisKind::Diagonal) diag[b.p] = phi[i];
  }
  if (g.kind() == AlgebraKind::TraceZero) {
    // phi(E_ii - E_{i+1,i+1}) = a_i - a_{i+1}, with a_n = 0.
    for (int i = n - 1; i >= 1; --i) diag[i] = phi[static_cast<std::size_t>(i - 1)] + diag[i + 1];
  }
  for (int p = 1; p <= n; ++p) f.add({p, p}, diag[p]);
  return f;
}

bool is_regular(const LieAlgebra& g, const RatVector& phi, IndexOptions options) {
  return g.dim() - rank(dphi_matrix(g, phi)) == index(g, options);
}

ContactVerdict contact_verdict(const LieAlgebra& g, const RatVector& phi) {
  ContactVerdict v;
  if (g.dim() % 2 == 0) {
    v.reason = "even dimension";
    v.kernel_dimension = g.dim() == 0 ? 0 : g.dim() - rank(dphi_matrix(g, phi));
    return v;
  }
  const auto basis = kernel_basis(dphi_matrix(g, phi));
  v.kernel_dimension = basis.size();
  if (basis.size() != 1) {
    v.reason = "kernel of dphi has dimension " + std::to_string(basis.size()) + ", not 1";
    return v;
  }
  v.kernel_generator = basis.front();
  const Rational value = dot(phi, basis.front());
  if (value == 0) {
    v.reason = "phi vanishes on the kernel generator";
    return v;
  }
  v.contact = true;
  v.reason = "contact";
  RatVector reeb = basis.front();
  const Rational scale = 1 / abs(value);
  for (auto& x : reeb) x *= scale;
  v.reeb = std::move(reeb);
  return v;
}

bool is_contact_form(const LieAlgebra& g, const RatVector& phi) { return contact_verdict(g, phi).contact; }

bool is_contact_form_volume(const LieAlgebra& g, const RatVector& phi) {
  const std::size_t d = g.dim();
  if (d % 2 == 0) throw ParityError("volume-form test needs an odd-dimensional algebra");
  const RatMatrix dp = dphi_matrix(g, phi);
  RatMatrix bordered(d + 1, d + 1);
  for (std::size_t j = 0; j < d; ++j) {
    bordered(0, j + 1) = phi[j];
    bordered(j + 1, 0) = -phi[j];
  }
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) bordered(i + 1, j + 1) = dp(i, j);
  return determinant(bordered) != 0;
}

RatVector principal_element(const LieAlgebra& g, const RatVector& phi) {
  // phi([x, b_j]) = phi(b_j) reads sum_i x_i (-M[i][j]) = phi_j, i.e. M x = phi
  // because M is skew.
  const RatMatrix m = dphi_matrix(g, phi);
  if (rank(m) != g.dim()) throw NotFrobenius("dphi is singular: the form is not Frobenius");
  return *solve(m, phi);
}

std::vector<Rational> principal_char_poly(const LieAlgebra& g, const RatVector& phi) {
  return char_poly(g.ad_matrix(principal_element(g, phi)));
}

bool is_binary_spectrum(const LieAlgebra& g, const RatVector& phi) {
  const std::size_t d = g.dim();
  if (d % 2 == 1) return false;
  std::vector<Rational> cp;
  try {
    cp = principal_char_poly(g, phi);
  } catch (const NotFrobenius&) {
    return false;
  }
  // Expected t^{d/2} (t - 1)^{d/2}: coefficient of t^{d/2 + k} is
  // C(d/2, k) (-1)^{d/2 - k}.
  const std::size_t h = d / 2;
  std::vector<Rational> expected(d + 1, Rational(0));
  Integer binom = 1;
  for (std::size_t k = 0; k <= h; ++k) {
    expected[h + k] = ((h - k) % 2 == 0) ? Rational(binom) : Rational(-binom);
    binom = binom * static_cast<unsigned long>(h - k) / static_cast<unsigned long>(k + 1);
  }
  return cp == expected;
}

FormGraph form_graph(const Poset& p, const OneForm& phi) {
  FormGraph fg;
  fg.edges = phi.strict_support();
  std::vector<int> in(static_cast<std::size_t>(p.size() + 1), 0), out(in);
  for (const auto& [a, b] : fg.edges) {
    ++out[a];
    ++in[b];
  }
  for (int v = 1; v <= p.size(); ++v) {
    if (in[v] && out[v]) fg.interior.insert(v);
    else if (in[v]) fg.sinks.insert(v);
    else if (out[v]) fg.sources.insert(v);
    else fg.isolated.insert(v);
  }
  return fg;
}

bool is_small(const Poset& p, const OneForm& phi) {
  const auto edges = phi.strict_support();
  if (static_cast<int>(edges.size()) != p.size() - 1) return false;
  std::vector<int> parent(static_cast<std::size_t>(p.size() + 1));
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
  for (const auto& [a, b] : edges) {
    if (a < 1 || b > p.size() || !p.less(a, b)) return false;
    const int ra = find(a), rb = find(b);
    if (ra == rb) return false;
    parent[ra] = rb;
  }
  return true;  // n - 1 acyclic edges on n vertices: a spanning tree
}

}  // namespace lpa
