#include "lpa/catalog.hpp"

#include <map>
#include <mutex>

#include "lpa/toral_pairs.hpp"

namespace lpa {

std::string BlockRef::display() const {
  std::string s = id;
  if (n) s += "(n=" + std::to_string(*n) + ")";
  return s;
}

const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> entries = {
      {"known-a", BlockKind::Toral, false, 0, 0, "chain 1<2"},
      {"known-b", BlockKind::Toral, false, 0, 0, "1<2<{3,4}"},
      {"known-c", BlockKind::Toral, false, 0, 0, "{1,2}<3<4"},
      {"known-d", BlockKind::Toral, false, 0, 0, "1<2<3<5, 2<4<6"},
      {"known-e", BlockKind::Toral, false, 0, 0, "1<3<5<6, 2<4<5"},
      {"known-f", BlockKind::Toral, true, 3, 9, "chain 1<...<n-1 with floor(n/2) < n"},
      {"known-g", BlockKind::Toral, true, 3, 9, "chain on all but m=floor((n-1)/2)+1, with m-1 < m+1 and m < m+1"},
      {"known-h", BlockKind::Toral, true, 1, 3, "layers {1},{2,3},...,{2n,2n+1}, consecutive layers fully related"},
      {"known-i", BlockKind::Toral, true, 1, 3, "layers {1,2},...,{2n-1,2n},{2n+1}, consecutive layers fully related"},
      {"new-1", BlockKind::Toral, false, 0, 0, "1<{2,3}<4<{5,6}"},
      {"new-1*", BlockKind::Toral, false, 0, 0, "{1,2}<3<{4,5}<6"},
      {"new-2", BlockKind::Toral, false, 0, 0, "1<{2,3}<4<5, 3<6"},
      {"new-2*", BlockKind::Toral, false, 0, 0, "1<3<{4,5}<6, 2<5"},
      {"new-3", BlockKind::Toral, false, 0, 0, "1<2<{3,4}<5, 2<6"},
      {"new-3*", BlockKind::Toral, false, 0, 0, "1<{3,4}<5<6, 2<5"},
      {"new-4", BlockKind::Toral, false, 0, 0, "1<{2,3}<4, 2<5<6, 3<6"},
      {"new-4*", BlockKind::Toral, false, 0, 0, "1<2<4, 1<5, 3<{4,5}<6"},
      {"contact-1", BlockKind::ContactToral, false, 0, 0, "chain 1<2<3"},
      {"contact-2", BlockKind::ContactToral, false, 0, 0, "chain 1<2<3<4"},
      {"contact-3", BlockKind::ContactToral, false, 0, 0, "1<2<3<{4,5}"},
      {"contact-3*", BlockKind::ContactToral, false, 0, 0, "{1,2}<3<4<5"},
      {"contact-4", BlockKind::ContactToral, true, 5, kDefaultFamilyMax, "chain 1<...<n-1 with floor(n/2)+1 < n"},
      {"contact-4*", BlockKind::ContactToral, true, 5, kDefaultFamilyMax, "chain 2<...<n with 1 < ceil(n/2)"},
      {"contact-5", BlockKind::ContactToral, true, 5, kDefaultFamilyMax, "chain 1<...<n-1 with floor(n/2)-1 < n"},
      {"contact-5*", BlockKind::ContactToral, true, 5, kDefaultFamilyMax, "chain 2<...<n with 1 < ceil(n/2)+2"},
  };
  return entries;
}

const CatalogEntry& catalog_entry(const std::string& id) {
  for (const auto& e : catalog())
    if (e.id == id) return e;
  throw CatalogError("unknown catalog block '" + id + "'");
}

namespace {

std::vector<Relation> chain_covers(int from, int to) {
  std::vector<Relation> c;
  for (int i = from; i < to; ++i) c.emplace_back(i, i + 1);
  return c;
}

Poset layered(const std::vector<std::vector<int>>& layers, int n) {
  std::vector<Relation> covers;
  for (std::size_t k = 0; k + 1 < layers.size(); ++k)
    for (int a : layers[k])
      for (int b : layers[k + 1]) covers.emplace_back(a, b);
  return Poset::from_covers(n, covers);
}

std::vector<Relation> pairs(std::initializer_list<int> codes) {
  // Two-digit codes pq for single-digit labels, e.g. 15 -> (1,5).
  std::vector<Relation> r;
  for (int code : codes) r.emplace_back(code / 10, code % 10);
  return r;
}

int floor_half(int n) { return n / 2; }
int ceil_half(int n) { return (n + 1) / 2; }

OneForm contact_family_form(const std::string& id, int n) {
  OneForm f;
  f.add({1, 1}, 1);
  if (id == "contact-4") {
    for (int i = 1; i <= (n - 1) / 2; ++i) f.add({i, n - i}, 1);
    for (int i = 1; i <= floor_half(n); ++i) f.add({i, n}, 1);
  } else if (id == "contact-4*") {
    for (int i = 2; i <= ceil_half(n); ++i) f.add({i, n - i + 2}, 1);
    for (int i = ceil_half(n) + 1; i <= n; ++i) f.add({1, i}, 1);
  } else if (id == "contact-5") {
    for (int i = 1; i <= (n - 1) / 2; ++i) f.add({i, n - i}, 1);
    for (int i = 1; i <= floor_half(n) - 1; ++i) f.add({i, n}, 1);
    f.add({floor_half(n), n - 1}, 1);
  } else {  // contact-5*
    for (int i = 2; i <= ceil_half(n); ++i) f.add({i, n - i + 2}, 1);
    for (int i = ceil_half(n) + 2; i <= n; ++i) f.add({1, i}, 1);
    f.add({2, ceil_half(n) + 1}, 1);
  }
  return f;
}

OneForm fixed_form(const std::string& id) {
  static const std::map<std::string, std::vector<Relation>> forms = {
      {"new-1", pairs({15, 16, 24, 25, 36})},   {"new-1*", pairs({16, 26, 14, 34, 25})},
      {"new-2", pairs({15, 16, 24, 34, 36})},   {"new-2*", pairs({16, 26, 25, 34, 35})},
      {"new-3", pairs({15, 16, 23, 24, 25})},   {"new-3*", pairs({16, 26, 15, 35, 45})},
      {"new-4", pairs({14, 16, 24, 25, 36})},   {"new-4*", pairs({15, 16, 24, 34, 36})},
      {"contact-1", pairs({11, 13, 23})},       {"contact-2", pairs({11, 14, 23, 24})},
      {"contact-3", pairs({11, 14, 15, 23, 25})}, {"contact-3*", pairs({11, 14, 15, 25, 34})},
  };
  return OneForm::from_support(forms.at(id));
}

/// Searched forms are deterministic, so they are computed once per process.
OneForm searched_form(const std::string& id, std::optional<int> n, const Poset& p) {
  static std::mutex mu;
  static std::map<std::pair<std::string, int>, OneForm> cache;
  const std::pair<std::string, int> key{id, n.value_or(0)};
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  auto found = search_toral_form(p, SearchKind::Frobenius);
  if (!found) throw CatalogError("no toral form found for " + id);
  std::lock_guard<std::mutex> lock(mu);
  cache.emplace(key, *found);
  return *found;
}

}  // namespace

Poset catalog_poset(const std::string& id, std::optional<int> n_opt) {
  const CatalogEntry& e = catalog_entry(id);
  const int n = n_opt.value_or(0);
  if (id == "known-a") return Poset::chain(2);
  if (id == "known-b") return Poset::from_covers(4, pairs({12, 23, 24}));
  if (id == "known-c") return Poset::from_covers(4, pairs({13, 23, 34}));
  if (id == "known-d") return Poset::from_covers(6, pairs({12, 23, 35, 24, 46}));
  if (id == "known-e") return Poset::from_covers(6, pairs({13, 35, 56, 24, 45}));
  if (id == "known-f") {
    auto c = chain_covers(1, n - 1);
    c.emplace_back(floor_half(n), n);
    return Poset::from_covers(n, c);
  }
  if (id == "known-g") {
    const int m = (n - 1) / 2 + 1;
    std::vector<Relation> c;
    std::vector<int> spine;
    for (int i = 1; i <= n; ++i)
      if (i != m) spine.push_back(i);
    for (std::size_t i = 0; i + 1 < spine.size(); ++i) c.emplace_back(spine[i], spine[i + 1]);
    c.emplace_back(m, m + 1);
    return Poset::from_covers(n, c);
  }
  if (id == "known-h") {
    std::vector<std::vector<int>> layers = {{1}};
    for (int k = 1; k <= n; ++k) layers.push_back({2 * k, 2 * k + 1});
    return layered(layers, 2 * n + 1);
  }
  if (id == "known-i") {
    std::vector<std::vector<int>> layers;
    for (int k = 1; k <= n; ++k) layers.push_back({2 * k - 1, 2 * k});
    layers.push_back({2 * n + 1});
    return layered(layers, 2 * n + 1);
  }
  if (id == "new-1") return Poset::from_covers(6, pairs({12, 13, 24, 34, 45, 46}));
  if (id == "new-1*") return Poset::from_covers(6, pairs({13, 23, 34, 35, 46, 56}));
  if (id == "new-2") return Poset::from_covers(6, pairs({12, 13, 24, 34, 45, 36}));
  if (id == "new-2*") return Poset::from_covers(6, pairs({13, 34, 35, 46, 56, 25}));
  if (id == "new-3") return Poset::from_covers(6, pairs({12, 23, 24, 35, 45, 26}));
  if (id == "new-3*") return Poset::from_covers(6, pairs({13, 14, 35, 45, 56, 25}));
  if (id == "new-4") return Poset::from_covers(6, pairs({12, 13, 24, 34, 25, 56, 36}));
  if (id == "new-4*") return Poset::from_covers(6, pairs({12, 24, 15, 34, 35, 46, 56}));
  if (id == "contact-1") return Poset::chain(3);
  if (id == "contact-2") return Poset::chain(4);
  if (id == "contact-3") return Poset::from_covers(5, pairs({12, 23, 34, 35}));
  if (id == "contact-3*") return Poset::from_covers(5, pairs({13, 23, 34, 45}));
  if (id == "contact-4" || id == "contact-5") {
    auto c = chain_covers(1, n - 1);
    c.emplace_back(id == "contact-4" ? floor_half(n) + 1 : floor_half(n) - 1, n);
    return Poset::from_covers(n, c);
  }
  if (id == "contact-4*" || id == "contact-5*") {
    auto c = chain_covers(2, n);
    c.emplace_back(1, id == "contact-4*" ? ceil_half(n) : ceil_half(n) + 2);
    return Poset::from_covers(n, c);
  }
  throw CatalogError("catalog entry '" + e.id + "' has no poset");
}

Roles default_roles(const Poset& p) {
  const ExtremalData ext = extremal_data(p);
  Roles r;
  if (ext.ext.size() == 2 && ext.minimal.size() == 1 && ext.maximal.size() == 1) {
    r.c = *ext.minimal.begin();
    r.a1 = *ext.maximal.begin();
    r.c_minimal = true;
    return r;
  }
  if (ext.ext.size() == 3) {
    const bool one_min = ext.minimal.size() == 1 && ext.maximal.size() == 2;
    const bool one_max = ext.maximal.size() == 1 && ext.minimal.size() == 2;
    if (one_min || one_max) {
      const auto& single = one_min ? ext.minimal : ext.maximal;
      const auto& others = one_min ? ext.maximal : ext.minimal;
      r.c = *single.begin();
      r.a1 = *others.begin();
      r.a2 = *std::next(others.begin());
      r.c_minimal = one_min;
      return r;
    }
  }
  throw CatalogError("extremal elements do not admit roles c, a1, a2");
}

BuildingBlock make_block(const BlockRef& ref, std::optional<int> max_n) {
  const CatalogEntry& e = catalog_entry(ref.id);
  if (e.parametric) {
    if (!ref.n) throw CatalogError("block '" + ref.id + "' needs a parameter n");
    const int hi = (e.kind == BlockKind::ContactToral && max_n) ? *max_n : e.max_n;
    if (*ref.n < e.min_n || *ref.n > hi) {
      throw CatalogError("parameter n=" + std::to_string(*ref.n) + " outside the supported range [" +
                         std::to_string(e.min_n) + "," + std::to_string(hi) + "] of '" + ref.id + "'");
    }
  } else if (ref.n) {
    throw CatalogError("block '" + ref.id + "' takes no parameter");
  }
  BuildingBlock b{ref, catalog_poset(ref.id, ref.n), {}, e.kind, {}};
  if (!e.parametric || e.kind == BlockKind::Toral) {
    b.form = ref.id.rfind("known-", 0) == 0 ? searched_form(ref.id, ref.n, b.poset) : fixed_form(ref.id);
  } else {
    b.form = contact_family_form(ref.id, *ref.n);
  }
  b.roles = default_roles(b.poset);
  if (ref.a1 || ref.a2) {
    std::set<int> others = {b.roles.a1};
    if (b.roles.a2) others.insert(*b.roles.a2);
    const int a1 = ref.a1.value_or(0);
    if (!others.count(a1)) throw CatalogError("role a1=" + std::to_string(a1) + " is not an extremal element opposite c");
    others.erase(a1);
    if (ref.a2 && (!others.count(*ref.a2))) {
      throw CatalogError("role a2=" + std::to_string(*ref.a2) + " is not the remaining extremal element");
    }
    b.roles.a1 = a1;
    if (b.roles.a2) b.roles.a2 = *others.begin();
  }
  return b;
}

}  // namespace lpa
