#include <gtest/gtest.h>

#include <random>

#include "lpa/catalog.hpp"
#include "lpa/forms.hpp"
#include "oracles.hpp"
#include "printed_data.hpp"

using namespace lpa;

namespace {

std::set<oracle::Pair> rel_set(const Poset& p) { return {p.relations().begin(), p.relations().end()}; }

OneForm form_of(const std::vector<oracle::Pair>& support) { return OneForm::from_support(support); }

oracle::Coords coords_of(const MatrixCoords& m) { return {m.begin(), m.end()}; }

const printed::Pairing& pairing(const std::string& id) {
  for (const auto& p : printed::six_element_toral_pairs())
    if (p.id == id) return p;
  for (const auto& p : printed::fixed_contact_pairs())
    if (p.id == id) return p;
  throw std::out_of_range(id);
}

Poset poset_of(const printed::Pairing& p) { return Poset::from_covers(p.n, p.covers); }

LieAlgebra footnote_algebra() { return build_custom(3, {{0, 1, {{1, 1}}}, {0, 2, {{2, 1}}}}); }

}  // namespace

TEST(Dphi, ChainOfTwo) {
  const LieAlgebra ga = build_gA(Poset::chain(2));
  const RatMatrix m = dphi_matrix(ga, functional(ga, form_of({{1, 2}})));
  EXPECT_EQ(m(0, 1), -2);
  EXPECT_EQ(m(1, 0), 2);
  EXPECT_EQ(m(0, 0), 0);
}

TEST(Dphi, AbelianIsZero) {
  const LieAlgebra ab = build_custom(4, {});
  EXPECT_TRUE(dphi_matrix(ab, {1, 2, 3, 4}).is_zero());
  EXPECT_EQ(index(ab), 4u);
  EXPECT_THROW(dphi_matrix(ab, {1}), ShapeError);
}

TEST(Dphi, MatchesMatrixOracle) {
  for (const auto& id : {"new-1", "contact-3", "contact-3*"}) {
    const printed::Pairing& pr = pairing(id);
    const Poset p = poset_of(pr);
    for (bool traceless : {false, true}) {
      const LieAlgebra g = traceless ? build_gA(p) : build_g(p);
      const oracle::MatrixAlgebra m = oracle::matrix_algebra(p.size(), rel_set(p), traceless);
      const RatMatrix got = dphi_matrix(g, functional(g, form_of(pr.support)));
      const oracle::Dense want = oracle::dphi(m, printed::ones(pr.support));
      for (std::size_t i = 0; i < g.dim(); ++i)
        for (std::size_t j = 0; j < g.dim(); ++j) EXPECT_EQ(got(i, j), want[i][j]) << id;
    }
  }
}

TEST(Kernel, ChainOfFourContactForm) {
  const printed::Pairing& pr = pairing("contact-2");
  const Poset p = poset_of(pr);
  const KernelReport k = kernel(build_gA(p), functional(build_gA(p), form_of(pr.support)));
  ASSERT_EQ(k.dimension, 1u);
  EXPECT_TRUE(k.trace_zero);
  EXPECT_TRUE(oracle::proportional(coords_of(k.coords[0]), printed::chain4_kernel()));
  const KernelReport kg = kernel(p, form_of(pr.support), true);
  ASSERT_EQ(kg.dimension, 1u);
  EXPECT_TRUE(oracle::proportional(coords_of(kg.coords[0]), printed::chain4_kernel()));
}

TEST(Kernel, ForkContactForm) {
  const printed::Pairing& pr = pairing("contact-3");
  const Poset p = poset_of(pr);
  const KernelReport k = kernel(p, form_of(pr.support), true);
  ASSERT_EQ(k.dimension, 1u);
  EXPECT_TRUE(oracle::proportional(coords_of(k.coords[0]), printed::fork_kernel()));
  const auto ok = oracle::kernel_coords(oracle::matrix_algebra(5, rel_set(p), true), printed::ones(pr.support));
  ASSERT_EQ(ok.size(), 1u);
  EXPECT_TRUE(oracle::proportional(ok[0], printed::fork_kernel()));
}

TEST(Kernel, SixElementToralFormIsFrobenius) {
  const printed::Pairing& pr = pairing("new-1");
  const Poset p = poset_of(pr);
  EXPECT_EQ(kernel(p, form_of(pr.support), true).dimension, 0u);
  const KernelReport kg = kernel(p, form_of(pr.support), false);
  ASSERT_EQ(kg.dimension, 1u);
  MatrixCoords identity;
  for (int i = 1; i <= 6; ++i) identity[{i, i}] = 1;
  EXPECT_TRUE(oracle::proportional(coords_of(kg.coords[0]), coords_of(identity)));
  EXPECT_EQ(index(build_gA(p)), 0u);
}

TEST(Index, FootnoteAlgebraAndTrials) {
  EXPECT_EQ(index(footnote_algebra()), 1u);
  EXPECT_EQ(index(build_gA(Poset::chain(1))), 0u);
  EXPECT_EQ(index(build_gA(Poset::chain(2))), 0u);
  // Index of a chain algebra of three elements is 1 (odd dimension 5).
  EXPECT_EQ(index(build_gA(Poset::chain(3))), 1u);
}

TEST(Index, MoreTrialsNeverIncreaseTheValue) {
  const Poset p = Poset::from_covers(6, {{1, 4}, {2, 4}, {2, 5}, {3, 5}, {3, 6}, {1, 6}});
  const LieAlgebra ga = build_gA(p);
  std::size_t last = ga.dim();
  for (int trials = 1; trials <= 6; ++trials) {
    const std::size_t v = index(ga, {99, trials});
    EXPECT_LE(v, last);
    last = v;
  }
}

TEST(Regular, Examples) {
  const printed::Pairing& pr = pairing("contact-2");
  const LieAlgebra ga = build_gA(poset_of(pr));
  EXPECT_TRUE(is_regular(ga, functional(ga, form_of(pr.support))));
  EXPECT_FALSE(is_regular(ga, RatVector(ga.dim(), Rational(0))));
  const printed::Pairing& tp = pairing("new-2");
  const LieAlgebra gt = build_gA(poset_of(tp));
  EXPECT_TRUE(is_regular(gt, functional(gt, form_of(tp.support))));
}

TEST(Contact, ChainOfFour) {
  const printed::Pairing& pr = pairing("contact-2");
  const LieAlgebra ga = build_gA(poset_of(pr));
  const RatVector phi = functional(ga, form_of(pr.support));
  const ContactVerdict v = contact_verdict(ga, phi);
  ASSERT_TRUE(v.contact);
  EXPECT_EQ(v.kernel_dimension, 1u);
  ASSERT_TRUE(v.reeb);
  EXPECT_EQ(abs(dot(phi, *v.reeb)), 1);
  EXPECT_TRUE(is_contact_form_volume(ga, phi));
}

TEST(Contact, FootnoteAlgebraIsNotContact) {
  const LieAlgebra g = footnote_algebra();
  const IndexSample s = sample_index(g);
  EXPECT_EQ(s.index, 1u);
  const ContactVerdict v = contact_verdict(g, s.witness);
  EXPECT_FALSE(v.contact);
  EXPECT_EQ(v.reason, "phi vanishes on the kernel generator");
  EXPECT_FALSE(is_contact_form_volume(g, s.witness));
  // Every form: [e1, -] hits e2, e3 only, so phi ^ dphi vanishes identically.
  std::mt19937_64 rng(4);
  std::uniform_int_distribution<int> c(-5, 5);
  for (int t = 0; t < 20; ++t) {
    const RatVector phi = {c(rng), c(rng), c(rng)};
    EXPECT_FALSE(is_contact_form(g, phi));
    EXPECT_FALSE(is_contact_form_volume(g, phi));
  }
}

TEST(Contact, EvenDimensionAndZeroForm) {
  const LieAlgebra ga = build_gA(Poset::chain(2));
  const ContactVerdict v = contact_verdict(ga, {1, 1});
  EXPECT_FALSE(v.contact);
  EXPECT_EQ(v.reason, "even dimension");
  EXPECT_THROW(is_contact_form_volume(ga, {1, 1}), ParityError);
  const LieAlgebra g3 = build_gA(Poset::chain(3));
  EXPECT_FALSE(is_contact_form_volume(g3, RatVector(g3.dim(), Rational(0))));
  EXPECT_FALSE(is_contact_form(g3, RatVector(g3.dim(), Rational(0))));
}

TEST(Contact, VolumeOracleOnCatalogForms) {
  const printed::Pairing& c1 = pairing("contact-1");
  const LieAlgebra g1 = build_gA(poset_of(c1));
  EXPECT_TRUE(is_contact_form_volume(g1, functional(g1, form_of(c1.support))));
  const printed::Pairing f = printed::family("contact-5", 7);
  const LieAlgebra g7 = build_gA(Poset::from_covers(f.n, f.covers));
  EXPECT_TRUE(is_contact_form_volume(g7, functional(g7, form_of(f.support))));
  EXPECT_TRUE(is_contact_form(g7, functional(g7, form_of(f.support))));
}

TEST(Principal, ChainOfTwo) {
  const LieAlgebra ga = build_gA(Poset::chain(2));
  const RatVector phi = functional(ga, form_of({{1, 2}}));
  const RatVector x = principal_element(ga, phi);
  // phi([x, y]) = phi(y) for every basis y.
  for (std::size_t j = 0; j < ga.dim(); ++j)
    EXPECT_EQ(dot(phi, ga.bracket(x, unit_vector(ga.dim(), j))), phi[j]);
  EXPECT_EQ(principal_char_poly(ga, phi), (std::vector<Rational>{0, -1, 1}));
  EXPECT_TRUE(is_binary_spectrum(ga, phi));
}

TEST(Principal, RejectsNonFrobenius) {
  const LieAlgebra ga = build_gA(Poset::chain(3));
  EXPECT_THROW(principal_element(ga, RatVector(ga.dim(), Rational(1))), NotFrobenius);
  EXPECT_FALSE(is_binary_spectrum(ga, RatVector(ga.dim(), Rational(1))));
}

TEST(Principal, SixElementBlocksHaveBinarySpectrum) {
  for (const auto& pr : printed::six_element_toral_pairs()) {
    const LieAlgebra ga = build_gA(poset_of(pr));
    EXPECT_TRUE(is_binary_spectrum(ga, functional(ga, form_of(pr.support)))) << pr.id;
  }
}

TEST(Principal, SpectrumDoesNotDependOnTheForm) {
  for (const auto& pr : printed::six_element_toral_pairs()) {
    const LieAlgebra ga = build_gA(poset_of(pr));
    const RatVector phi = functional(ga, form_of(pr.support));
    const IndexSample s = sample_index(ga, {static_cast<std::uint64_t>(pr.id.size()) * 31, 3});
    ASSERT_EQ(s.index, 0u);
    ASSERT_NE(s.witness, phi);
    EXPECT_EQ(principal_char_poly(ga, phi), principal_char_poly(ga, s.witness)) << pr.id;
  }
}

TEST(FormGraph, ChainOfThreeContactForm) {
  const Poset p = Poset::chain(3);
  const OneForm strict = form_of({{1, 1}, {1, 3}, {2, 3}}).strict_part();
  EXPECT_TRUE(is_small(p, strict));
  const FormGraph fg = form_graph(p, strict);
  EXPECT_EQ(fg.sinks, (std::set<int>{3}));
  EXPECT_EQ(fg.sources, (std::set<int>{1, 2}));
  EXPECT_TRUE(fg.interior.empty());
}

TEST(FormGraph, ForkContactForm) {
  const printed::Pairing& pr = pairing("contact-3");
  const Poset p = poset_of(pr);
  const OneForm strict = form_of(pr.support).strict_part();
  EXPECT_TRUE(is_small(p, strict));
  const FormGraph fg = form_graph(p, strict);
  EXPECT_EQ(fg.sinks, (std::set<int>{3, 4, 5}));
  EXPECT_EQ(fg.sources, (std::set<int>{1, 2}));
  EXPECT_TRUE(fg.interior.empty());
}

TEST(FormGraph, SmallnessNegativeCases) {
  EXPECT_FALSE(is_small(Poset::chain(3), OneForm{}));
  EXPECT_TRUE(is_small(Poset::chain(1), OneForm{}));
  // Three edges on three vertices contain a cycle.
  EXPECT_FALSE(is_small(Poset::chain(3), form_of({{1, 2}, {2, 3}, {1, 3}})));
  // Two edges that leave an element untouched and double up elsewhere.
  EXPECT_FALSE(is_small(Poset::chain(4), form_of({{1, 2}, {1, 2}, {3, 4}})));
  const FormGraph fg = form_graph(Poset::chain(3), form_of({{1, 2}}));
  EXPECT_EQ(fg.isolated, (std::set<int>{3}));
}

TEST(OneFormType, Basics) {
  OneForm f = form_of({{1, 1}, {1, 2}});
  f.add({1, 2}, 2);
  EXPECT_EQ(f.coeff({1, 2}), 3);
  f.add({1, 2}, -3);
  EXPECT_FALSE(f.contains({1, 2}));
  EXPECT_EQ(f.diagonal_support(), (std::vector<Relation>{{1, 1}}));
  EXPECT_THROW(form_of({{2, 1}}).check_host(Poset::chain(2)), AlgebraError);
  EXPECT_EQ(form_of({{1, 2}}).relabeled({0, 2, 3, 1}), form_of({{2, 3}}));
}

TEST(FormsProperties, RandomPairs) {
  std::mt19937_64 rng(41);
  std::uniform_int_distribution<int> c(-4, 4);
  std::bernoulli_distribution keep(0.5);
  for (int t = 0; t < 60; ++t) {
    const int n = 2 + t % 5;
    const Poset p = Poset::from_covers(n, oracle::random_covers(rng, n, 0.45));
    OneForm phi;
    for (int x = 1; x <= n; ++x)
      if (keep(rng)) phi.add({x, x}, c(rng));
    for (const auto& r : p.relations())
      if (keep(rng)) phi.add(r, c(rng));
    const LieAlgebra g = build_g(p), ga = build_gA(p);
    const RatVector fa = functional(ga, phi);
    EXPECT_TRUE(dphi_matrix(g, functional(g, phi)).is_skew_symmetric());
    EXPECT_TRUE(dphi_matrix(ga, fa).is_skew_symmetric());
    // ker in g(P) = ker_A + span{I}.
    const KernelReport kfull = kernel(p, phi, false), ka = kernel(p, phi, true);
    EXPECT_EQ(kfull.dimension, ka.dimension + 1);
    EXPECT_EQ(kernel(ga, fa).dimension, ka.dimension);
    EXPECT_TRUE(is_zero(dphi_matrix(g, functional(g, phi)).apply(identity_element(g))));
    // The kernel agrees with the matrix oracle.
    const auto oc = oracle::kernel_coords(oracle::matrix_algebra(n, rel_set(p), true),
                                          oracle::Coords(phi.terms().begin(), phi.terms().end()));
    EXPECT_EQ(oc.size(), ka.dimension);
    // Functionals round-trip through poset forms.
    EXPECT_EQ(functional(ga, form_from_functional(ga, fa)), fa);
    if (ga.dim() % 2 == 1) {
      EXPECT_EQ(is_contact_form(ga, fa), is_contact_form_volume(ga, fa));
    }
  }
}
