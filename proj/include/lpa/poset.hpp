#pragma once

#include <cstddef>
#include <optional>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

namespace lpa {

using Relation = std::pair<int, int>;

/// Raised for inputs that do not describe a valid poset.
class PosetError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A finite poset on the labels 1..n. Every strict relation p < q satisfies
/// p < q as integers; constructors relabel along a linear extension when the
/// input does not, and record the permutation used. Immutable once built.
class Poset {
 public:
  /// Builds the transitive closure of `covers` (any generating set of strict
  /// relations is accepted). Throws PosetError for n < 1, labels outside
  /// 1..n, self-loops or cycles.
  static Poset from_covers(int n, const std::vector<Relation>& covers);

  /// Total order 1 < 2 < ... < n.
  static Poset chain(int n);
  /// n pairwise incomparable elements.
  static Poset antichain(int n);

  int size() const { return n_; }

  /// Strict order test p < q.
  bool less(int p, int q) const { return lt_[index(p, q)]; }
  /// p <= q or q <= p (reflexive comparability).
  bool related(int p, int q) const { return p == q || less(p, q) || less(q, p); }

  /// All strict relations, sorted lexicographically.
  const std::vector<Relation>& relations() const { return rels_; }

  /// relabeling()[old] is the label assigned to input label `old`; entry 0 is
  /// unused. The identity whenever the input already respected the order.
  const std::vector<int>& relabeling() const { return relabel_; }
  bool was_relabeled() const;

  std::vector<int> successors(int p) const;
  std::vector<int> predecessors(int p) const;

  friend bool operator==(const Poset& a, const Poset& b) { return a.n_ == b.n_ && a.rels_ == b.rels_; }

 private:
  Poset(int n, std::vector<bool> lt, std::vector<int> relabel);
  std::size_t index(int p, int q) const {
    return static_cast<std::size_t>(p) * static_cast<std::size_t>(n_ + 1) + static_cast<std::size_t>(q);
  }

  int n_ = 0;
  std::vector<bool> lt_;
  std::vector<Relation> rels_;
  std::vector<int> relabel_;
};

struct ExtremalData {
  std::set<int> minimal;
  std::set<int> maximal;
  std::set<int> ext;
  std::vector<Relation> rel_e;
};

ExtremalData extremal_data(const Poset& p);

/// Hasse diagram edges: relations with no element strictly between.
std::vector<Relation> covering_relations(const Poset& p);

bool is_filter(const Poset& p, const std::set<int>& s);
bool is_ideal(const Poset& p, const std::set<int>& s);

/// Vertex sets of the connected components of the Hasse diagram, each sorted,
/// ordered by smallest element.
std::vector<std::vector<int>> connected_components(const Poset& p);
bool is_connected(const Poset& p);

/// Maximal chain cardinality minus one.
int height(const Poset& p);

/// Subposet induced on `s`, relabeled 1..|s| in increasing label order.
Poset induced_subposet(const Poset& p, const std::set<int>& s);

/// Adjacency lists (index 1..n) of the comparability graph.
std::vector<std::vector<int>> comparability_graph(const Poset& p);

/// P + Q with Q's labels shifted by |P|.
Poset disjoint_sum(const Poset& p, const Poset& q);

/// Order dual, relabeled by i -> n + 1 - i so the label convention holds.
Poset dual(const Poset& p);

class UnsupportedSize : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline constexpr int kIsomorphismSizeLimit = 12;

/// An order isomorphism p -> q as a map (index 1..n), if one exists. Throws
/// UnsupportedSize above kIsomorphismSizeLimit elements.
std::optional<std::vector<int>> find_isomorphism(const Poset& p, const Poset& q);
bool are_isomorphic(const Poset& p, const Poset& q);

}  // namespace lpa
