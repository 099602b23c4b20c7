#include "lpa/toral_pairs.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

namespace lpa {

bool PairReport::passed() const {
  return std::all_of(conditions.begin(), conditions.end(), [](const auto& c) { return c.passed; });
}

std::string PairReport::first_failure() const {
  for (const auto& c : conditions)
    if (!c.passed) return c.name;
  return {};
}

const ConditionResult* PairReport::find(const std::string& name) const {
  for (const auto& c : conditions)
    if (c.name == name) return &c;
  return nullptr;
}

namespace {

std::string set_text(const std::set<int>& s) {
  std::ostringstream out;
  out << '{';
  bool first = true;
  for (int v : s) {
    out << (first ? "" : ",") << v;
    first = false;
  }
  out << '}';
  return out.str();
}

ConditionResult ext_size_condition(const char* name, const ExtremalData& ext) {
  const auto k = ext.ext.size();
  return {name, k == 2 || k == 3, "|Ext| = " + std::to_string(k)};
}

ConditionResult small_condition(const char* name, const Poset& p, const OneForm& strict) {
  const bool ok = is_small(p, strict);
  return {name, ok, ok ? "support is a spanning tree" : "support is not a spanning tree"};
}

ConditionResult udo_condition(const char* name, const Poset& p, const OneForm& strict) {
  const FormGraph fg = form_graph(p, strict);
  const bool ok = is_filter(p, fg.sinks) && is_ideal(p, fg.sources) && fg.interior.empty() && fg.isolated.empty();
  return {name, ok, "U=" + set_text(fg.sinks) + " D=" + set_text(fg.sources) + " O=" + set_text(fg.interior)};
}

ConditionResult ext_edges_condition(const char* name, const ExtremalData& ext, const OneForm& strict) {
  for (const auto& r : ext.rel_e) {
    if (!strict.contains(r)) {
      return {name, false, "missing extremal edge (" + std::to_string(r.first) + "," + std::to_string(r.second) + ")"};
    }
  }
  return {name, true, std::to_string(ext.rel_e.size()) + " extremal edges covered"};
}

}  // namespace

PairReport verify_toral_pair(const Poset& p, const OneForm& phi) {
  PairReport report;
  const ExtremalData ext = extremal_data(p);
  const LieAlgebra ga = build_gA(p);
  const RatVector fa = functional(ga, phi);
  report.conditions.push_back(ext_size_condition("P1", ext));
  const bool binary = is_binary_spectrum(ga, fa);
  report.conditions.push_back({"P2", binary, binary ? "binary spectrum" : "spectrum is not binary"});
  const OneForm strict = phi.strict_part();
  const bool diag_free = strict.terms().size() == phi.terms().size();
  report.conditions.push_back(small_condition("F1", p, strict));
  if (!diag_free) report.conditions.back() = {"F1", false, "form has diagonal terms"};
  report.conditions.push_back(udo_condition("F2", p, strict));
  report.conditions.push_back(ext_edges_condition("F3", ext, strict));
  const KernelReport kg = kernel(p, phi, false);
  const bool f4 = kg.dimension == 1;  // the identity always lies in the kernel
  report.conditions.push_back({"F4", f4, "dim ker in g(P) = " + std::to_string(kg.dimension)});
  const std::size_t corank = ga.dim() - rank(dphi_matrix(ga, fa));
  report.conditions.push_back({"Frobenius", corank == 0, "dim ker_A = " + std::to_string(corank)});
  return report;
}

PairReport verify_contact_toral_pair(const Poset& p, const OneForm& phi) {
  PairReport report;
  const ExtremalData ext = extremal_data(p);
  const bool connected = is_connected(p);
  report.conditions.push_back({"CP1", connected, connected ? "connected" : "disconnected"});
  report.conditions.push_back(ext_size_condition("CP2", ext));
  const auto diag = phi.diagonal_support();
  const bool cf1 = diag.size() == 1 && diag.front() == Relation{1, 1};
  report.conditions.push_back({"CF1", cf1, std::to_string(diag.size()) + " diagonal term(s)"});
  const OneForm strict = phi.strict_part();
  report.conditions.push_back(small_condition("CF2", p, strict));
  report.conditions.push_back(udo_condition("CF3", p, strict));
  report.conditions.push_back(ext_edges_condition("CF4", ext, strict));
  const LieAlgebra ga = build_gA(p);
  const ContactVerdict v = contact_verdict(ga, functional(ga, phi));
  report.conditions.push_back({"contact", v.contact, v.reason});
  return report;
}

std::optional<OneForm> search_toral_form(const Poset& p, SearchKind kind, SearchOptions options) {
  const int n = p.size();
  if (n < 2) return std::nullopt;
  const auto& rels = p.relations();
  const ExtremalData ext = extremal_data(p);
  const LieAlgebra ga = build_gA(p);
  const std::size_t need = static_cast<std::size_t>(n - 1);

  std::vector<Relation> chosen;
  std::vector<int> in(static_cast<std::size_t>(n + 1), 0), out(in);
  std::vector<int> parent(static_cast<std::size_t>(n + 1));
  std::size_t visited = 0;
  std::optional<OneForm> found;

  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x];
    return x;
  };
  auto leaf_form = [&]() -> std::optional<OneForm> {
    OneForm phi = OneForm::from_support(chosen);
    const FormGraph fg = form_graph(p, phi);
    if (!is_filter(p, fg.sinks) || !is_ideal(p, fg.sources)) return std::nullopt;
    for (const auto& r : ext.rel_e)
      if (!phi.contains(r)) return std::nullopt;
    if (kind == SearchKind::Contact) {
      phi.add({1, 1}, 1);
      if (!contact_verdict(ga, functional(ga, phi)).contact) return std::nullopt;
      return phi;
    }
    if (rank(dphi_matrix(ga, functional(ga, phi))) != ga.dim()) return std::nullopt;
    if (kernel(p, phi, false).dimension != 1) return std::nullopt;
    return phi;
  };

  // Union-find without path compression so choices can be undone.
  std::function<bool(std::size_t)> dfs = [&](std::size_t start) -> bool {
    if (++visited > options.node_limit) return true;  // abort
    if (chosen.size() == need) {
      found = leaf_form();
      return found.has_value();
    }
    if (rels.size() - start < need - chosen.size()) return false;
    for (std::size_t i = start; i < rels.size(); ++i) {
      const auto [a, b] = rels[i];
      // An edge a->b makes a a source side and b a sink side; O stays empty.
      if (in[a] > 0 || out[b] > 0) continue;
      const int ra = find(a), rb = find(b);
      if (ra == rb) continue;
      parent[ra] = rb;
      ++out[a];
      ++in[b];
      chosen.push_back(rels[i]);
      if (dfs(i + 1)) return true;
      chosen.pop_back();
      --out[a];
      --in[b];
      parent[ra] = ra;
    }
    return false;
  };
  std::iota(parent.begin(), parent.end(), 0);
  dfs(0);
  if (visited > options.node_limit) return std::nullopt;
  return found;
}

}  // namespace lpa
