#include "lpa/poset.hpp"

#include <algorithm>
#include <functional>
#include <queue>
#include <string>

namespace lpa {

Poset::Poset(int n, std::vector<bool> lt, std::vector<int> relabel)
    : n_(n), lt_(std::move(lt)), relabel_(std::move(relabel)) {
  for (int p = 1; p <= n_; ++p)
    for (int q = 1; q <= n_; ++q)
      if (lt_[index(p, q)]) rels_.emplace_back(p, q);
}

Poset Poset::from_covers(int n, const std::vector<Relation>& covers) {
  if (n < 1) throw PosetError("poset must have at least one element");
  const auto sz = static_cast<std::size_t>(n + 1);
  std::vector<std::vector<int>> out(sz);
  std::vector<int> indeg(sz, 0);
  for (const auto& [p, q] : covers) {
    if (p < 1 || p > n || q < 1 || q > n) {
      throw PosetError("relation (" + std::to_string(p) + "," + std::to_string(q) +
                       ") references a label outside 1.." + std::to_string(n));
    }
    if (p == q) throw PosetError("self-relation on element " + std::to_string(p));
    out[p].push_back(q);
    ++indeg[q];
  }
  // Kahn's algorithm with a min-heap: the smallest available original label
  // receives the next new label, so conforming input keeps its labels.
  std::priority_queue<int, std::vector<int>, std::greater<>> ready;
  for (int v = 1; v <= n; ++v)
    if (indeg[v] == 0) ready.push(v);
  std::vector<int> relabel(sz, 0);
  int next = 1;
  while (!ready.empty()) {
    const int v = ready.top();
    ready.pop();
    relabel[v] = next++;
    for (int w : out[v])
      if (--indeg[w] == 0) ready.push(w);
  }
  if (next != n + 1) throw PosetError("cover relations contain a directed cycle");

  std::vector<bool> lt(sz * sz, false);
  for (const auto& [p, q] : covers) lt[relabel[p] * sz + relabel[q]] = true;
  // Transitive closure; relations only increase labels, so sweeping
  // intermediate elements in increasing order suffices for Warshall.
  for (std::size_t k = 1; k < sz; ++k)
    for (std::size_t i = 1; i < k; ++i)
      if (lt[i * sz + k])
        for (std::size_t j = k + 1; j < sz; ++j)
          if (lt[k * sz + j]) lt[i * sz + j] = true;
  return Poset(n, std::move(lt), std::move(relabel));
}

Poset Poset::chain(int n) {
  std::vector<Relation> covers;
  for (int i = 1; i < n; ++i) covers.emplace_back(i, i + 1);
  return from_covers(n, covers);
}

Poset Poset::antichain(int n) { return from_covers(n, {}); }

bool Poset::was_relabeled() const {
  for (int i = 1; i <= n_; ++i)
    if (relabel_[i] != i) return true;
  return false;
}

std::vector<int> Poset::successors(int p) const {
  std::vector<int> s;
  for (int q = p + 1; q <= n_; ++q)
    if (less(p, q)) s.push_back(q);
  return s;
}

std::vector<int> Poset::predecessors(int p) const {
  std::vector<int> s;
  for (int q = 1; q < p; ++q)
    if (less(q, p)) s.push_back(q);
  return s;
}

ExtremalData extremal_data(const Poset& p) {
  ExtremalData d;
  for (int v = 1; v <= p.size(); ++v) {
    if (p.predecessors(v).empty()) d.minimal.insert(v);
    if (p.successors(v).empty()) d.maximal.insert(v);
  }
  d.ext = d.minimal;
  d.ext.insert(d.maximal.begin(), d.maximal.end());
  for (const auto& r : p.relations())
    if (d.ext.count(r.first) && d.ext.count(r.second)) d.rel_e.push_back(r);
  return d;
}

std::vector<Relation> covering_relations(const Poset& p) {
  std::vector<Relation> covers;
  for (const auto& [a, b] : p.relations()) {
    bool cover = true;
    for (int z = a + 1; z < b && cover; ++z)
      if (p.less(a, z) && p.less(z, b)) cover = false;
    if (cover) covers.emplace_back(a, b);
  }
  return covers;
}

bool is_filter(const Poset& p, const std::set<int>& s) {
  for (int x : s)
    for (int y : p.successors(x))
      if (!s.count(y)) return false;
  return true;
}

bool is_ideal(const Poset& p, const std::set<int>& s) {
  for (int x : s)
    for (int y : p.predecessors(x))
      if (!s.count(y)) return false;
  return true;
}

std::vector<std::vector<int>> connected_components(const Poset& p) {
  const int n = p.size();
  std::vector<int> parent(static_cast<std::size_t>(n + 1));
  for (int i = 0; i <= n; ++i) parent[i] = i;
  std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
  for (const auto& [a, b] : p.relations()) parent[find(a)] = find(b);
  std::vector<std::vector<int>> comps;
  std::vector<int> comp_of(static_cast<std::size_t>(n + 1), -1);
  for (int v = 1; v <= n; ++v) {
    const int r = find(v);
    if (comp_of[r] < 0) {
      comp_of[r] = static_cast<int>(comps.size());
      comps.emplace_back();
    }
    comps[comp_of[r]].push_back(v);
  }
  return comps;
}

bool is_connected(const Poset& p) { return connected_components(p).size() == 1; }

int height(const Poset& p) {
  // Longest chain ending at v, by increasing label (a linear extension).
  std::vector<int> len(static_cast<std::size_t>(p.size() + 1), 1);
  int best = 1;
  for (int v = 1; v <= p.size(); ++v) {
    for (int u : p.predecessors(v)) len[v] = std::max(len[v], len[u] + 1);
    best = std::max(best, len[v]);
  }
  return best - 1;
}

Poset induced_subposet(const Poset& p, const std::set<int>& s) {
  if (s.empty()) throw PosetError("induced subposet on the empty set");
  std::vector<int> idx(static_cast<std::size_t>(p.size() + 1), 0);
  int k = 0;
  for (int v : s) {
    if (v < 1 || v > p.size()) throw PosetError("induced subposet: label out of range");
    idx[v] = ++k;
  }
  std::vector<Relation> rels;
  for (const auto& [a, b] : p.relations())
    if (idx[a] && idx[b]) rels.emplace_back(idx[a], idx[b]);
  return Poset::from_covers(k, rels);
}

std::vector<std::vector<int>> comparability_graph(const Poset& p) {
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(p.size() + 1));
  for (const auto& [a, b] : p.relations()) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  for (auto& l : adj) std::sort(l.begin(), l.end());
  return adj;
}

Poset disjoint_sum(const Poset& p, const Poset& q) {
  std::vector<Relation> rels = p.relations();
  for (const auto& [a, b] : q.relations()) rels.emplace_back(a + p.size(), b + p.size());
  return Poset::from_covers(p.size() + q.size(), rels);
}

Poset dual(const Poset& p) {
  const int n = p.size();
  std::vector<Relation> rels;
  for (const auto& [a, b] : p.relations()) rels.emplace_back(n + 1 - b, n + 1 - a);
  return Poset::from_covers(n, rels);
}

std::optional<std::vector<int>> find_isomorphism(const Poset& p, const Poset& q) {
  if (p.size() > kIsomorphismSizeLimit || q.size() > kIsomorphismSizeLimit) {
    throw UnsupportedSize("isomorphism search supports at most " + std::to_string(kIsomorphismSizeLimit) +
                          " elements");
  }
  if (p.size() != q.size() || p.relations().size() != q.relations().size()) return std::nullopt;
  const int n = p.size();
  auto degrees = [](const Poset& x, int v) {
    return std::make_pair(x.predecessors(v).size(), x.successors(v).size());
  };
  std::vector<int> map(static_cast<std::size_t>(n + 1), 0);
  std::vector<bool> used(static_cast<std::size_t>(n + 1), false);
  // Elements of p are assigned in label order, which is a linear extension;
  // the image of each must respect the order against earlier assignments.
  std::function<bool(int)> extend = [&](int v) -> bool {
    if (v > n) return true;
    const auto dv = degrees(p, v);
    for (int w = 1; w <= n; ++w) {
      if (used[w] || degrees(q, w) != dv) continue;
      bool ok = true;
      for (int u = 1; u < v && ok; ++u) {
        if (p.less(u, v) != q.less(map[u], w) || p.less(v, u) != q.less(w, map[u])) ok = false;
      }
      if (!ok) continue;
      map[v] = w;
      used[w] = true;
      if (extend(v + 1)) return true;
      used[w] = false;
    }
    return false;
  };
  if (extend(1)) return map;
  return std::nullopt;
}

bool are_isomorphic(const Poset& p, const Poset& q) { return find_isomorphism(p, q).has_value(); }

}  // namespace lpa
