#include <gtest/gtest.h>

#include <random>

#include "lpa/lie_algebra.hpp"
#include "oracles.hpp"

using namespace lpa;

namespace {

Poset fork_poset() { return Poset::from_covers(4, {{1, 2}, {2, 3}, {2, 4}}); }

std::set<oracle::Pair> rel_set(const Poset& p) { return {p.relations().begin(), p.relations().end()}; }

// Brackets of basis elements computed as explicit matrix commutators.
void expect_matches_matrix_oracle(const Poset& p, bool traceless) {
  const LieAlgebra g = traceless ? build_gA(p) : build_g(p);
  const oracle::MatrixAlgebra m = oracle::matrix_algebra(p.size(), rel_set(p), traceless);
  ASSERT_EQ(g.dim(), m.basis.size());
  const int n = p.size();
  for (std::size_t i = 0; i < g.dim(); ++i)
    for (std::size_t j = 0; j < g.dim(); ++j) {
      oracle::Dense c = oracle::zeros(n + 1, n + 1);
      for (int a = 1; a <= n; ++a)
        for (int b = 1; b <= n; ++b)
          for (int k = 1; k <= n; ++k)
            c[a][b] += m.basis[i][a][k] * m.basis[j][k][b] - m.basis[j][a][k] * m.basis[i][k][b];
      const MatrixCoords got = g.to_matrix_coords(g.bracket(unit_vector(g.dim(), i), unit_vector(g.dim(), j)));
      for (int a = 1; a <= n; ++a)
        for (int b = 1; b <= n; ++b) {
          const auto it = got.find({a, b});
          EXPECT_EQ(it == got.end() ? Rational(0) : it->second, c[a][b]) << i << "," << j << " at " << a << b;
        }
    }
}

}  // namespace

TEST(PosetAlgebra, BasesOfFork) {
  const LieAlgebra g = build_g(fork_poset());
  EXPECT_EQ(g.dim(), 9u);
  std::vector<std::string> labels;
  for (const auto& b : g.basis()) labels.push_back(b.label());
  EXPECT_EQ(labels, (std::vector<std::string>{"E1,1", "E2,2", "E3,3", "E4,4", "E1,2", "E1,3", "E1,4", "E2,3", "E2,4"}));

  const LieAlgebra ga = build_gA(fork_poset());
  EXPECT_EQ(ga.dim(), 8u);
  EXPECT_EQ(ga.basis()[0].kind, BasisKind::DiagonalDifference);
  EXPECT_EQ(ga.basis()[2].p, 3);
  EXPECT_EQ(ga.basis()[3].kind, BasisKind::Strict);
}

TEST(PosetAlgebra, Dimensions) {
  EXPECT_EQ(build_g(Poset::chain(1)).dim(), 1u);
  EXPECT_EQ(build_gA(Poset::chain(1)).dim(), 0u);
  EXPECT_EQ(build_g(Poset::chain(2)).dim(), 3u);
  EXPECT_EQ(build_gA(Poset::chain(2)).dim(), 2u);
  EXPECT_EQ(build_gA(Poset::chain(4)).dim(), 9u);
}

TEST(PosetAlgebra, ChainOfTwoBrackets) {
  const LieAlgebra g = build_g(Poset::chain(2));
  // Basis E11, E22, E12.
  EXPECT_EQ(g.bracket_of_basis(0, 2), (SparseVector{{2, 1}}));
  EXPECT_EQ(g.bracket_of_basis(1, 2), (SparseVector{{2, -1}}));
  EXPECT_TRUE(g.bracket_of_basis(0, 1).empty());
  const RatVector a = {1, 2, 3};
  EXPECT_TRUE(is_zero(g.bracket(a, a)));
  EXPECT_EQ(trace(g, {1, -1, 0}), 0);
  EXPECT_EQ(trace(g, {1, 2, 5}), 3);
}

TEST(PosetAlgebra, MatchesMatrixCommutators) {
  expect_matches_matrix_oracle(fork_poset(), false);
  expect_matches_matrix_oracle(fork_poset(), true);
  const Poset crown = Poset::from_covers(5, {{1, 3}, {1, 4}, {2, 3}, {2, 4}, {4, 5}});
  expect_matches_matrix_oracle(crown, false);
  expect_matches_matrix_oracle(crown, true);
}

TEST(PosetAlgebra, MatrixCoordinateConversion) {
  const LieAlgebra ga = build_gA(Poset::chain(3));
  const MatrixCoords m = {{{1, 1}, 2}, {{2, 2}, -5}, {{3, 3}, 3}, {{1, 3}, 7}};
  const RatVector v = ga.from_matrix_coords(m);
  EXPECT_EQ(ga.to_matrix_coords(v), m);
  EXPECT_THROW(ga.from_matrix_coords({{{1, 1}, 1}}), AlgebraError);
  EXPECT_THROW(build_gA(Poset::antichain(2)).from_matrix_coords({{{1, 2}, 1}}), AlgebraError);
  EXPECT_EQ(ga.strict_index(1, 3), std::optional<std::size_t>(3));
  EXPECT_FALSE(ga.strict_index(3, 1));
}

TEST(PosetAlgebra, IdentityIsCentral) {
  const LieAlgebra g = build_g(fork_poset());
  EXPECT_TRUE(g.ad_matrix(identity_element(g)).is_zero());
  EXPECT_THROW(identity_element(build_gA(fork_poset())), AlgebraError);
}

TEST(PosetAlgebra, BracketMismatchedLength) {
  const LieAlgebra g = build_g(Poset::chain(2));
  EXPECT_THROW(g.bracket({1, 2}, {1, 2, 3}), ShapeError);
}

TEST(CustomAlgebra, FootnoteAlgebra) {
  const LieAlgebra g = build_custom(3, {{0, 1, {{1, 1}}}, {0, 2, {{2, 1}}}});
  EXPECT_EQ(g.dim(), 3u);
  EXPECT_EQ(g.kind(), AlgebraKind::Custom);
  EXPECT_EQ(g.bracket_of_basis(1, 0), (SparseVector{{1, -1}}));
  EXPECT_FALSE(g.jacobi_violation());
}

TEST(CustomAlgebra, AbelianAndSl2) {
  const LieAlgebra ab = build_custom(2, {});
  EXPECT_TRUE(ab.bracket_of_basis(0, 1).empty());
  const LieAlgebra sl2 = build_custom(3, {{0, 1, {{1, 2}}}, {0, 2, {{2, -2}}}, {1, 2, {{0, 1}}}}, {"h", "e", "f"});
  EXPECT_EQ(sl2.basis()[1].label(), "e");
  EXPECT_TRUE(sl2.is_antisymmetric());
}

TEST(CustomAlgebra, RejectsJacobiFailure) {
  // [e1,e2]=e3, [e2,e3]=e1, [e1,e3]=e1 fails Jacobi.
  try {
    build_custom(3, {{0, 1, {{2, 1}}}, {1, 2, {{0, 1}}}, {0, 2, {{0, 1}}}});
    FAIL() << "expected JacobiError";
  } catch (const JacobiError& e) {
    EXPECT_EQ(e.triple(), (std::array<std::size_t, 3>{0, 1, 2}));
  }
}

TEST(CustomAlgebra, RejectsInconsistentAntisymmetry) {
  EXPECT_THROW(build_custom(2, {{0, 1, {{1, 1}}}, {1, 0, {{1, 1}}}}), AlgebraError);
  EXPECT_THROW(build_custom(2, {{0, 0, {{1, 1}}}}), AlgebraError);
  EXPECT_THROW(build_custom(2, {{0, 5, {{1, 1}}}}), AlgebraError);
}

TEST(LieProperties, RandomPosetAlgebras) {
  std::mt19937_64 rng(23);
  std::uniform_int_distribution<int> coef(-3, 3);
  for (int t = 0; t < 40; ++t) {
    const int n = 2 + t % 5;
    const Poset p = Poset::from_covers(n, oracle::random_covers(rng, n, 0.4));
    const LieAlgebra g = build_g(p), ga = build_gA(p);
    EXPECT_EQ(g.dim(), ga.dim() + 1);
    EXPECT_EQ(g.dim(), static_cast<std::size_t>(n) + p.relations().size());
    EXPECT_TRUE(g.is_antisymmetric());
    EXPECT_FALSE(g.jacobi_violation());
    EXPECT_FALSE(ga.jacobi_violation());
    EXPECT_TRUE(g.ad_matrix(identity_element(g)).is_zero());
    RatVector a(g.dim()), b(g.dim());
    for (auto& x : a) x = coef(rng);
    for (auto& x : b) x = coef(rng);
    EXPECT_EQ(trace(g, g.bracket(a, b)), 0);
    // ad(a) b = [a, b]
    EXPECT_EQ(g.ad_matrix(a).apply(b), g.bracket(a, b));
    // g = g_A + span{I}: every element splits, and the trace-zero part lies in g_A.
    MatrixCoords ca = g.to_matrix_coords(a);
    const Rational shift = trace(g, a) / n;
    for (int x = 1; x <= n; ++x) ca[{x, x}] -= shift;
    for (auto it = ca.begin(); it != ca.end();) it = it->second == 0 ? ca.erase(it) : std::next(it);
    EXPECT_EQ(ga.to_matrix_coords(ga.from_matrix_coords(ca)), ca);
  }
}
