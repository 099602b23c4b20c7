#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "lpa/order_complex.hpp"
#include "lpa/poset.hpp"
#include "oracles.hpp"

using namespace lpa;

namespace {

Poset fork_poset() { return Poset::from_covers(4, {{1, 2}, {2, 3}, {2, 4}}); }

std::set<oracle::Pair> rel_set(const Poset& p) { return {p.relations().begin(), p.relations().end()}; }

// Left component of the two-component example (13 elements).
Poset two_component_left() {
  return Poset::from_covers(13, {{1, 4}, {4, 8}, {4, 9}, {2, 5}, {5, 9}, {5, 10}, {2, 6}, {6, 11}, {6, 12},
                                 {2, 7}, {7, 10}, {7, 13}, {1, 3}, {3, 8}, {3, 9}});
}

}  // namespace

TEST(Poset, ClosureOfFork) {
  const Poset p = fork_poset();
  EXPECT_EQ(p.relations(), (std::vector<Relation>{{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}}));
  EXPECT_TRUE(p.less(1, 4));
  EXPECT_FALSE(p.less(3, 4));
  EXPECT_FALSE(p.related(3, 4));
  EXPECT_FALSE(p.was_relabeled());
}

TEST(Poset, ExtremalDataOfFork) {
  const ExtremalData e = extremal_data(fork_poset());
  EXPECT_EQ(e.minimal, (std::set<int>{1}));
  EXPECT_EQ(e.maximal, (std::set<int>{3, 4}));
  EXPECT_EQ(e.ext, (std::set<int>{1, 3, 4}));
  EXPECT_EQ(e.rel_e, (std::vector<Relation>{{1, 3}, {1, 4}}));
}

TEST(Poset, CoveringRelations) {
  EXPECT_EQ(covering_relations(fork_poset()), (std::vector<Relation>{{1, 2}, {2, 3}, {2, 4}}));
  // Redundant generators are dropped from the Hasse diagram.
  const Poset c = Poset::from_covers(3, {{1, 2}, {2, 3}, {1, 3}});
  EXPECT_EQ(covering_relations(c), (std::vector<Relation>{{1, 2}, {2, 3}}));
}

TEST(Poset, RelabelsWhenInputViolatesLabelOrder) {
  const Poset p = Poset::from_covers(3, {{1, 3}, {3, 2}});
  EXPECT_TRUE(p.was_relabeled());
  EXPECT_EQ(p, Poset::chain(3));
  EXPECT_EQ(p.relabeling(), (std::vector<int>{0, 1, 3, 2}));
}

TEST(Poset, RejectsInvalidInput) {
  EXPECT_THROW(Poset::from_covers(0, {}), PosetError);
  EXPECT_THROW(Poset::from_covers(2, {{1, 3}}), PosetError);
  EXPECT_THROW(Poset::from_covers(2, {{1, 1}}), PosetError);
  EXPECT_THROW(Poset::from_covers(3, {{1, 2}, {2, 3}, {3, 1}}), PosetError);
}

TEST(Poset, FiltersAndIdeals) {
  const Poset p = fork_poset();
  EXPECT_TRUE(is_filter(p, {3, 4}));
  EXPECT_FALSE(is_ideal(p, {3, 4}));
  EXPECT_TRUE(is_ideal(p, {1, 2}));
  EXPECT_FALSE(is_filter(p, {1, 2}));
  EXPECT_TRUE(is_filter(p, {}));
  EXPECT_TRUE(is_ideal(p, {}));
}

TEST(Poset, ConnectivityAndHeight) {
  EXPECT_TRUE(is_connected(fork_poset()));
  EXPECT_EQ(height(fork_poset()), 2);
  EXPECT_FALSE(is_connected(Poset::antichain(2)));
  EXPECT_EQ(height(Poset::antichain(2)), 0);
  EXPECT_EQ(height(Poset::chain(5)), 4);
  const auto comps = connected_components(disjoint_sum(Poset::chain(2), Poset::antichain(2)));
  EXPECT_EQ(comps, (std::vector<std::vector<int>>{{1, 2}, {3}, {4}}));
}

TEST(Poset, DisjointSumShiftsLabels) {
  const Poset s = disjoint_sum(Poset::chain(2), Poset::chain(2));
  EXPECT_EQ(s.size(), 4);
  EXPECT_EQ(s.relations(), (std::vector<Relation>{{1, 2}, {3, 4}}));
}

TEST(Poset, InducedSubposetAndComparabilityGraph) {
  const Poset sub = induced_subposet(fork_poset(), {1, 3, 4});
  EXPECT_EQ(sub.relations(), (std::vector<Relation>{{1, 2}, {1, 3}}));
  const auto g = comparability_graph(fork_poset());
  EXPECT_EQ(g[2], (std::vector<int>{1, 3, 4}));
  EXPECT_EQ(g[3], (std::vector<int>{1, 2}));
}

TEST(Poset, DualReversesOrder) {
  const Poset d = dual(fork_poset());
  EXPECT_EQ(covering_relations(d), (std::vector<Relation>{{1, 3}, {2, 3}, {3, 4}}));
  EXPECT_EQ(dual(d), fork_poset());
}

TEST(Isomorphism, SmallCases) {
  EXPECT_TRUE(are_isomorphic(Poset::chain(3), Poset::from_covers(3, {{1, 3}, {3, 2}})));
  EXPECT_FALSE(are_isomorphic(Poset::chain(3), Poset::antichain(3)));
  const Poset p3 = Poset::from_covers(5, {{1, 2}, {2, 3}, {3, 4}, {3, 5}});
  const Poset p3d = Poset::from_covers(5, {{1, 3}, {2, 3}, {3, 4}, {4, 5}});
  EXPECT_FALSE(oracle::isomorphic(5, rel_set(p3), 5, rel_set(p3d)));
  EXPECT_FALSE(are_isomorphic(p3, p3d));
  EXPECT_TRUE(are_isomorphic(dual(p3), p3d));
}

TEST(Isomorphism, WitnessIsOrderPreserving) {
  const Poset a = Poset::from_covers(5, {{1, 3}, {2, 3}, {3, 4}, {3, 5}});
  const Poset b = Poset::from_covers(5, {{1, 2}, {1, 3}, {4, 1}, {5, 1}});
  const auto w = find_isomorphism(a, b);
  ASSERT_TRUE(w);
  for (int x = 1; x <= 5; ++x)
    for (int y = 1; y <= 5; ++y) EXPECT_EQ(a.less(x, y), b.less((*w)[x], (*w)[y]));
}

TEST(Isomorphism, RejectsLargeInput) {
  EXPECT_THROW(are_isomorphic(Poset::chain(13), Poset::chain(13)), UnsupportedSize);
}

TEST(Betti, SmallExamples) {
  EXPECT_EQ(betti_numbers(fork_poset(), 2), (std::vector<std::size_t>{1, 0, 0}));
  EXPECT_EQ(betti_numbers(Poset::antichain(3), 1), (std::vector<std::size_t>{3, 0}));
  // Crown: 1,2 < 3,4 is a circle.
  EXPECT_EQ(betti_numbers(Poset::from_covers(4, {{1, 3}, {1, 4}, {2, 3}, {2, 4}}), 2),
            (std::vector<std::size_t>{1, 1, 0}));
}

TEST(Betti, LeftComponentOfTwoComponentExample) {
  const Poset p = two_component_left();
  const ExtremalData e = extremal_data(p);
  const auto b = betti_numbers(p, 3);
  EXPECT_EQ(b, oracle::betti(p.size(), rel_set(p), 3));
  EXPECT_EQ(b[0], 1u);
  EXPECT_EQ(static_cast<long>(b[1]), static_cast<long>(e.rel_e.size()) - static_cast<long>(e.ext.size()) + 1);
  EXPECT_EQ(b[2], 0u);
  EXPECT_EQ(b[3], 0u);
}

TEST(PosetProperties, RandomPosets) {
  std::mt19937_64 rng(17);
  for (int t = 0; t < 150; ++t) {
    const int n = 1 + t % 7;
    const auto covers = oracle::random_covers(rng, n, 0.35);
    const Poset p = Poset::from_covers(n, covers);
    const auto closed = oracle::closure(n, covers);
    ASSERT_EQ(rel_set(p), closed);
    // Closing again changes nothing; covers regenerate the relations.
    EXPECT_EQ(Poset::from_covers(n, p.relations()), p);
    EXPECT_EQ(Poset::from_covers(n, covering_relations(p)), p);
    // Filters of P are the ideals of the dual (dual relabels i -> n+1-i).
    const Poset d = dual(p);
    std::bernoulli_distribution coin(0.5);
    std::set<int> s, s_dual;
    for (int x = 1; x <= n; ++x)
      if (coin(rng)) {
        s.insert(x);
        s_dual.insert(n + 1 - x);
      }
    EXPECT_EQ(is_filter(p, s), is_ideal(d, s_dual));
    // b0 counts Hasse components; higher Betti numbers match the oracle.
    const auto b = betti_numbers(p, 2);
    EXPECT_EQ(b[0], connected_components(p).size());
    EXPECT_EQ(b, oracle::betti(n, closed, 2));
  }
}

TEST(PosetProperties, IsomorphismMatchesBruteForce) {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 80; ++t) {
    const int n = 2 + t % 5;
    const Poset a = Poset::from_covers(n, oracle::random_covers(rng, n, 0.4));
    // Scramble a by a random permutation half of the time.
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 1);
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<Relation> moved;
    for (auto [x, y] : a.relations()) moved.push_back({perm[x - 1], perm[y - 1]});
    const Poset b = t % 2 ? Poset::from_covers(n, moved) : Poset::from_covers(n, oracle::random_covers(rng, n, 0.4));
    EXPECT_EQ(are_isomorphic(a, b), oracle::isomorphic(n, rel_set(a), n, rel_set(b)));
  }
}

TEST(PosetProperties, DisjointSumAssociativeUpToIsomorphism) {
  const Poset a = fork_poset(), b = Poset::chain(2), c = Poset::from_covers(3, {{1, 3}, {2, 3}});
  EXPECT_TRUE(are_isomorphic(disjoint_sum(disjoint_sum(a, b), c), disjoint_sum(a, disjoint_sum(b, c))));
  EXPECT_TRUE(are_isomorphic(disjoint_sum(a, b), disjoint_sum(b, a)));
}
