#include <algorithm>
#include <array>
#include <map>
#include <sstream>

#include "lpa/checks.hpp"
#include "lpa/workbench.hpp"
#include "parallel.hpp"

namespace lpa::workbench {

using io::json;

namespace {

// Isomorphism-invariant fingerprint used to bucket posets before the exact
// isomorphism test.
std::string fingerprint(const Poset& p) {
  std::vector<std::array<int, 4>> rows;
  const auto covers = covering_relations(p);
  for (int x = 1; x <= p.size(); ++x) {
    int up = 0, down = 0;
    for (const auto& [a, b] : covers) {
      if (a == x) ++up;
      if (b == x) ++down;
    }
    rows.push_back({static_cast<int>(p.predecessors(x).size()), static_cast<int>(p.successors(x).size()), down, up});
  }
  std::sort(rows.begin(), rows.end());
  std::ostringstream out;
  out << p.size() << ':' << p.relations().size();
  for (const auto& r : rows) out << '|' << r[0] << ',' << r[1] << ',' << r[2] << ',' << r[3];
  return out.str();
}

// Posets up to isomorphism.
class IsoSet {
 public:
  bool insert(const Poset& p) {
    auto& bucket = buckets_[fingerprint(p)];
    for (const auto& q : bucket) {
      if (are_isomorphic(p, q)) return false;
    }
    bucket.push_back(p);
    items_.push_back(p);
    return true;
  }
  bool contains(const Poset& p) const {
    auto it = buckets_.find(fingerprint(p));
    if (it == buckets_.end()) return false;
    return std::any_of(it->second.begin(), it->second.end(), [&](const Poset& q) { return are_isomorphic(p, q); });
  }
  const std::vector<Poset>& items() const { return items_; }

 private:
  std::map<std::string, std::vector<Poset>> buckets_;
  std::vector<Poset> items_;
};

// Order ideals of p; since labels extend the order, an element may join
// only after all of its predecessors.
void ideals(const Poset& p, int x, std::vector<bool>& in, std::vector<std::vector<int>>& out) {
  if (x > p.size()) {
    std::vector<int> ideal;
    for (int y = 1; y <= p.size(); ++y)
      if (in[y]) ideal.push_back(y);
    out.push_back(ideal);
    return;
  }
  in[x] = false;
  ideals(p, x + 1, in, out);
  const auto preds = p.predecessors(x);
  if (std::all_of(preds.begin(), preds.end(), [&](int y) { return in[y]; })) {
    in[x] = true;
    ideals(p, x + 1, in, out);
    in[x] = false;
  }
}

// Catalog blocks with at most max_n elements, with both a1/a2 role choices.
std::vector<BuildingBlock> small_blocks(int max_n) {
  std::vector<BuildingBlock> out;
  auto add = [&](const std::string& id, std::optional<int> n) {
    const BuildingBlock b = make_block({id, n, std::nullopt, std::nullopt});
    out.push_back(b);
    if (b.roles.a2) out.push_back(make_block({id, n, *b.roles.a2, b.roles.a1}));
  };
  for (const auto& e : catalog()) {
    if (!e.parametric) {
      if (catalog_poset(e.id, std::nullopt).size() <= max_n) add(e.id, std::nullopt);
      continue;
    }
    for (int n = e.min_n; n <= e.max_n && catalog_poset(e.id, n).size() <= max_n; ++n) add(e.id, n);
  }
  return out;
}

bool sampled_contact(const Poset& p, IndexOptions options) {
  if (!is_connected(p) || ext_hasse_has_cycle(p)) return false;
  const LieAlgebra gA = build_gA(p);
  if (gA.dim() % 2 == 0) return false;
  for (int t = 0; t < options.trials; ++t) {
    const IndexSample s = sample_index(gA, {options.seed + static_cast<std::uint64_t>(t), 1});
    if (s.index != 1) return false;  // a corank above one on a generic form means index above one
    if (contact_verdict(gA, s.witness).contact) return true;
  }
  return false;
}

}  // namespace

std::vector<Poset> connected_posets(int n) {
  std::vector<Poset> level = {Poset::chain(1)};
  std::vector<Poset> result = level;
  for (int size = 2; size <= n; ++size) {
    IsoSet next;
    for (const auto& p : level) {
      std::vector<bool> in(static_cast<std::size_t>(p.size() + 1), false);
      std::vector<std::vector<int>> ids;
      ideals(p, 1, in, ids);
      for (const auto& ideal : ids) {
        std::vector<Relation> covers = covering_relations(p);
        for (int y : ideal) covers.push_back({y, size});
        next.insert(Poset::from_covers(size, covers));
      }
    }
    level = next.items();
    for (const auto& p : level)
      if (is_connected(p)) result.push_back(p);
  }
  return result;
}

std::vector<Poset> contact_reachable(int max_n) {
  const std::vector<BuildingBlock> blocks = small_blocks(max_n);
  // seen[k]: posets built with k contact blocks.
  IsoSet seen[2];
  std::vector<std::pair<Poset, int>> frontier;
  for (const auto& b : blocks) {
    const int k = b.kind == BlockKind::ContactToral ? 1 : 0;
    if (seen[k].insert(b.poset)) frontier.push_back({b.poset, k});
  }
  while (!frontier.empty()) {
    std::vector<std::pair<Poset, int>> next;
    for (const auto& [q, k] : frontier) {
      for (const auto& s : blocks) {
        const int ks = k + (s.kind == BlockKind::ContactToral ? 1 : 0);
        if (ks > 1 || q.size() + s.poset.size() - 3 > max_n) continue;
        for (Rule rule : kContactRules) {
          for (const auto& id : admissible_identifications(q, s, rule)) {
            const Poset p = glue(q, s, rule, id).poset;
            if (p.size() <= max_n && seen[ks].insert(p)) next.push_back({p, ks});
          }
        }
      }
    }
    frontier = std::move(next);
  }
  return seen[1].items();
}

CommandResult cmd_sweep(int max_n, IndexOptions options) {
  if (max_n < 1 || max_n > 8) throw std::invalid_argument("sweep supports 1 <= max_n <= 8");
  CommandResult out;
  out.log("empirical sweep over connected posets with at most " + std::to_string(max_n) +
          " elements (sampled contact decisions; evidence only, not a proof)");
  IsoSet reachable;
  for (const auto& p : contact_reachable(max_n)) reachable.insert(p);

  json per_size = json::array();
  json unreached = json::array();
  std::map<int, std::array<int, 2>> counts;
  const std::vector<Poset> posets = connected_posets(max_n);
  const std::vector<char> contact =
      parallel_map(posets, [&](const Poset& p) -> char { return sampled_contact(p, options); });
  for (std::size_t i = 0; i < posets.size(); ++i) {
    const Poset& p = posets[i];
    auto& c = counts[p.size()];
    ++c[0];
    if (!contact[i]) continue;
    ++c[1];
    if (!reachable.contains(p)) unreached.push_back(io::poset_to_json(p));
  }
  for (const auto& [n, c] : counts) {
    per_size.push_back({{"n", n}, {"connected", c[0]}, {"contact", c[1]}});
    out.log("n=" + std::to_string(n) + ": " + std::to_string(c[0]) + " connected, " + std::to_string(c[1]) + " contact");
  }
  out.report["empirical"] = true;
  out.report["max_n"] = max_n;
  out.report["sizes"] = per_size;
  out.report["contact_reachable"] = reachable.items().size();
  out.report["unreached_contact"] = unreached;
  out.log(std::to_string(unreached.size()) + " contact posets not produced by any contact sequence");
  return out;
}

}  // namespace lpa::workbench
