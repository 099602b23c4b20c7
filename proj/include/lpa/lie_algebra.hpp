#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "lpa/matrix.hpp"
#include "lpa/poset.hpp"
#include "lpa/rational.hpp"

namespace lpa {

enum class BasisKind {
  Diagonal,            ///< E_{p,p} in g(P)
  DiagonalDifference,  ///< E_{p,p} - E_{p+1,p+1} in g_A(P)
  Strict,              ///< E_{p,q}, p < q in P
  Custom               ///< opaque named generator
};

struct BasisElement {
  BasisKind kind = BasisKind::Custom;
  int p = 0;
  int q = 0;
  std::string name;

  std::string label() const;
};

enum class AlgebraKind {
  Incidence,  ///< g(P): the incidence algebra under the commutator
  TraceZero,  ///< g_A(P): its trace-zero part
  Custom      ///< given by structure constants
};

/// Sparse vector as (basis index, coefficient) pairs sorted by index.
using SparseVector = std::vector<std::pair<std::size_t, Rational>>;

/// Matrix-coordinate view k_{p,q} of an element of a poset algebra.
using MatrixCoords = std::map<Relation, Rational>;

/// One structure-constant rule [e_i, e_j] = value for a custom algebra.
struct BracketRule {
  std::size_t i = 0;
  std::size_t j = 0;
  SparseVector value;
};

/// Raised when an element does not belong to the algebra at hand.
class AlgebraError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised by build_custom when the Jacobi identity fails.
class JacobiError : public std::invalid_argument {
 public:
  JacobiError(const std::string& what, std::array<std::size_t, 3> triple)
      : std::invalid_argument(what), triple_(triple) {}
  std::array<std::size_t, 3> triple() const { return triple_; }

 private:
  std::array<std::size_t, 3> triple_;
};

/// A finite-dimensional Lie algebra over Q given by structure constants in a
/// fixed basis. Immutable after construction.
class LieAlgebra {
 public:
  std::size_t dim() const { return basis_.size(); }
  AlgebraKind kind() const { return kind_; }
  const std::vector<BasisElement>& basis() const { return basis_; }
  /// The poset of a poset algebra; empty for custom algebras.
  const std::optional<Poset>& host() const { return host_; }

  /// [b_i, b_j] in the basis.
  const SparseVector& bracket_of_basis(std::size_t i, std::size_t j) const { return table_[i * dim() + j]; }

  RatVector bracket(const RatVector& a, const RatVector& b) const;
  /// Matrix of ad(a): column j holds [a, b_j].
  RatMatrix ad_matrix(const RatVector& a) const;

  /// Index of the basis element E_{p,q} (p < q), if it exists.
  std::optional<std::size_t> strict_index(int p, int q) const;

  /// Matrix coordinates of a poset-algebra element (zero entries omitted).
  MatrixCoords to_matrix_coords(const RatVector& v) const;
  /// Basis coefficients from matrix coordinates; throws AlgebraError when the
  /// matrix lies outside the algebra (non-relation entry, or nonzero trace
  /// for g_A).
  RatVector from_matrix_coords(const MatrixCoords& m) const;

  /// True when [b_i,b_j] = -[b_j,b_i] for all i, j.
  bool is_antisymmetric() const;
  /// First basis triple (i < j < k) violating the Jacobi identity, if any.
  std::optional<std::array<std::size_t, 3>> jacobi_violation() const;

  friend LieAlgebra build_g(const Poset& p);
  friend LieAlgebra build_gA(const Poset& p);
  friend LieAlgebra build_custom(std::size_t dim, const std::vector<BracketRule>& brackets,
                                 std::vector<std::string> names);

 private:
  void fill_from_matrix_units();

  AlgebraKind kind_ = AlgebraKind::Custom;
  std::vector<BasisElement> basis_;
  std::optional<Poset> host_;
  std::vector<SparseVector> table_;
  std::map<Relation, std::size_t> strict_pos_;
};

/// g(P): basis E_{p,p} (p = 1..n) followed by E_{p,q} for p < q in
/// lexicographic order.
LieAlgebra build_g(const Poset& p);

/// g_A(P): basis E_{i,i} - E_{i+1,i+1} (i = 1..n-1) followed by E_{p,q} for
/// p < q. For a singleton poset the algebra is zero-dimensional.
LieAlgebra build_gA(const Poset& p);

/// Algebra on `dim` generators with the given brackets [e_i, e_j] (i != j);
/// unlisted brackets are zero and antisymmetry is implied. Throws
/// JacobiError naming the first failing triple, or AlgebraError for
/// inconsistent input (an (i,j) and (j,i) pair that are not negatives).
LieAlgebra build_custom(std::size_t dim, const std::vector<BracketRule>& brackets,
                        std::vector<std::string> names = {});

/// Trace of a poset-algebra element, sum of its k_{p,p}.
Rational trace(const LieAlgebra& g, const RatVector& a);

/// The identity matrix as an element of g(P).
RatVector identity_element(const LieAlgebra& g);

/// Basis vector e_i of length dim.
RatVector unit_vector(std::size_t dim, std::size_t i);

}  // namespace lpa
