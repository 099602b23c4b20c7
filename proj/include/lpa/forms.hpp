#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "lpa/lie_algebra.hpp"
#include "lpa/matrix.hpp"
#include "lpa/poset.hpp"

namespace lpa {

/// A one-form on a poset algebra: sum of coeff * E*_{p,q} over its support,
/// where (p,q) is a strict relation or a diagonal pair (p,p).
class OneForm {
 public:
  OneForm() = default;
  /// Every listed pair receives coefficient 1.
  static OneForm from_support(const std::vector<Relation>& support);

  void add(const Relation& pair, const Rational& coeff);
  Rational coeff(const Relation& pair) const;
  bool contains(const Relation& pair) const { return coeffs_.count(pair) > 0; }

  const std::map<Relation, Rational>& terms() const { return coeffs_; }
  std::vector<Relation> support() const;
  std::vector<Relation> strict_support() const;
  std::vector<Relation> diagonal_support() const;
  /// The form with its diagonal terms removed.
  OneForm strict_part() const;
  /// Relabeled copy: pair (p,q) becomes (map[p], map[q]).
  OneForm relabeled(const std::vector<int>& map) const;

  /// Throws AlgebraError if a pair is neither diagonal nor a relation of p.
  void check_host(const Poset& p) const;

  friend bool operator==(const OneForm& a, const OneForm& b) { return a.coeffs_ == b.coeffs_; }

  friend OneForm operator+(const OneForm& a, const OneForm& b);

 private:
  std::map<Relation, Rational> coeffs_;
};

/// Values phi(b_i) of the form on the basis of a poset algebra.
RatVector functional(const LieAlgebra& g, const OneForm& phi);

/// Skew matrix M[i][j] = -phi([b_i, b_j]).
RatMatrix dphi_matrix(const LieAlgebra& g, const RatVector& phi);

struct KernelReport {
  std::vector<RatVector> basis;  ///< coefficient vectors in the algebra's basis
  std::vector<MatrixCoords> coords;  ///< matrix coordinates (poset algebras only)
  std::size_t dimension = 0;
  bool trace_zero = false;  ///< computed in (or restricted to) g_A
};

/// Kernel of dphi in the algebra g itself.
KernelReport kernel(const LieAlgebra& g, const RatVector& phi);

/// Kernel of dphi for a poset form, computed in g(P); with restrict_to_gA it
/// is intersected with the trace-zero hyperplane.
KernelReport kernel(const Poset& p, const OneForm& phi, bool restrict_to_gA);

struct IndexOptions {
  std::uint64_t seed = 0x5eed;
  int trials = 5;
};

/// Sampled index: the minimum corank of dphi over `trials` random forms with
/// coefficients uniform in [1, 2^20]. Sampling stops early once the corank
/// reaches dim mod 2, which no form can beat. Zero for a zero-dimensional
/// algebra.
std::size_t index(const LieAlgebra& g, IndexOptions options = {});

/// Sampled index together with a form attaining it.
struct IndexSample {
  std::size_t index = 0;
  RatVector witness;
};
IndexSample sample_index(const LieAlgebra& g, IndexOptions options = {});

bool is_regular(const LieAlgebra& g, const RatVector& phi, IndexOptions options = {});

/// A poset one-form inducing the given functional on a poset algebra (for
/// g_A the diagonal values are fixed by setting E*_{n,n} to zero).
OneForm form_from_functional(const LieAlgebra& g, const RatVector& phi);

/// Outcome of the contact decision with its certificate.
struct ContactVerdict {
  bool contact = false;
  std::string reason;  ///< failed condition, or "contact"
  std::size_t kernel_dimension = 0;
  std::optional<RatVector> kernel_generator;
  std::optional<RatVector> reeb;  ///< B / |phi(B)| when contact
};

/// Contact decision by the kernel criterion: dim g odd, ker(dphi) spanned by
/// one B, and phi(B) != 0. A one-dimensional kernel certifies index one on an
/// odd-dimensional algebra without sampling (the corank of a skew form has
/// the parity of the dimension).
ContactVerdict contact_verdict(const LieAlgebra& g, const RatVector& phi);
bool is_contact_form(const LieAlgebra& g, const RatVector& phi);

/// Raised by the volume oracle on even-dimensional algebras.
class ParityError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Independent contact oracle: phi ^ (dphi)^k != 0 on a (2k+1)-dimensional
/// algebra, decided by the bordered skew matrix [[0, phi], [-phi^T, dphi]]
/// being nonsingular.
bool is_contact_form_volume(const LieAlgebra& g, const RatVector& phi);

class NotFrobenius : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The unique x with phi([x, y]) = phi(y) for all y. Throws NotFrobenius when
/// dphi is singular.
RatVector principal_element(const LieAlgebra& g, const RatVector& phi);

/// Characteristic polynomial of ad(principal element).
std::vector<Rational> principal_char_poly(const LieAlgebra& g, const RatVector& phi);

/// True when ad(principal element) has eigenvalues 0 and 1 with equal
/// multiplicity; false on odd dimension or non-Frobenius forms.
bool is_binary_spectrum(const LieAlgebra& g, const RatVector& phi);

/// Directed support graph of the strict part of a form.
struct FormGraph {
  std::vector<Relation> edges;
  std::set<int> sinks;     ///< U: in-edges only
  std::set<int> sources;   ///< D: out-edges only
  std::set<int> interior;  ///< O: both
  std::set<int> isolated;  ///< untouched by the support
};

FormGraph form_graph(const Poset& p, const OneForm& phi);

/// Strict support is a spanning tree on all elements of p.
bool is_small(const Poset& p, const OneForm& phi);

}  // namespace lpa
