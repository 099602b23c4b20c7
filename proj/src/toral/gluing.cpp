#include "lpa/gluing.hpp"

#include <algorithm>
#include <array>

namespace lpa {

namespace {

struct NamedRow {
  Rule rule;
  const char* name;
  RuleRow row;
};

constexpr Relatedness Any = Relatedness::Any;
constexpr Relatedness Rel = Relatedness::Related;
constexpr Relatedness Unr = Relatedness::Unrelated;

const std::array<NamedRow, 12>& table() {
  static const std::array<NamedRow, 12> rows = {{
      {Rule::A1, "A1", {false, true, false, Any, Any, 0}},
      {Rule::A2, "A2", {false, false, true, Any, Any, 0}},
      {Rule::B, "B", {false, true, true, Any, Any, 1}},
      {Rule::C, "C", {true, false, false, Any, Any, 0}},
      {Rule::D1, "D1", {true, true, false, Rel, Any, 0}},
      {Rule::D2, "D2", {true, false, true, Any, Rel, 0}},
      {Rule::E1, "E1", {true, true, false, Unr, Any, 1}},
      {Rule::E2, "E2", {true, false, true, Any, Unr, 1}},
      {Rule::F, "F", {true, true, true, Rel, Rel, 0}},
      {Rule::G1, "G1", {true, true, true, Rel, Unr, 1}},
      {Rule::G2, "G2", {true, true, true, Unr, Rel, 1}},
      {Rule::H, "H", {true, true, true, Unr, Unr, 2}},
  }};
  return rows;
}

}  // namespace

std::string to_string(Rule r) { return table()[static_cast<std::size_t>(r)].name; }

Rule parse_rule(const std::string& name) {
  for (const auto& row : table())
    if (name == row.name) return row.rule;
  throw std::invalid_argument("unknown gluing rule '" + name + "'");
}

bool is_contact_rule(Rule r) {
  return std::find(std::begin(kContactRules), std::end(kContactRules), r) != std::end(kContactRules);
}

const RuleRow& rule_row(Rule r) { return table()[static_cast<std::size_t>(r)].row; }

void validate_glue(const Poset& q, const BuildingBlock& s, Rule rule, const Identify& id) {
  const RuleRow& row = rule_row(rule);
  const std::string name = to_string(rule);
  const Roles& roles = s.roles;
  auto check_presence = [&](const char* role, bool wanted, const std::optional<int>& given) {
    if (wanted && !given) throw GlueError(name + "/" + role, std::string("rule identifies ") + role + " but no target was given");
    if (!wanted && given) throw GlueError(name + "/" + role, std::string("rule leaves ") + role + " unidentified");
  };
  check_presence("c", row.c, id.c);
  check_presence("a1", row.a1, id.a1);
  check_presence("a2", row.a2, id.a2);
  if (row.a2 && !roles.a2) throw GlueError(name + "/a2", "block has only two extremal elements");

  const ExtremalData qext = extremal_data(q);
  auto check_target = [&](const char* role, const std::optional<int>& target, bool role_minimal) {
    if (!target) return;
    const int t = *target;
    if (t < 1 || t > q.size()) throw GlueError(name + "/" + role, "target " + std::to_string(t) + " is not an element of Q");
    const bool ok = role_minimal ? qext.minimal.count(t) > 0 : qext.maximal.count(t) > 0;
    if (!ok) {
      throw GlueError(name + "/" + role, "target " + std::to_string(t) + " is not a " +
                                             (role_minimal ? "minimal" : "maximal") + " element of Q");
    }
  };
  check_target("c", id.c, roles.c_minimal);
  check_target("a1", id.a1, !roles.c_minimal);
  check_target("a2", id.a2, !roles.c_minimal);
  if (id.a1 && id.a2 && *id.a1 == *id.a2) throw GlueError(name + "/a2", "a1 and a2 share a target");
  if (id.c && id.a1 && *id.c == *id.a1) throw GlueError(name + "/a1", "c and a1 share a target");
  if (id.c && id.a2 && *id.c == *id.a2) throw GlueError(name + "/a2", "c and a2 share a target");

  auto check_relation = [&](const char* role, Relatedness want, const std::optional<int>& t) {
    if (want == Relatedness::Any || !t || !id.c) return;
    const bool related = q.related(*t, *id.c);
    if (want == Relatedness::Related && !related)
      throw GlueError(name + "/" + role, "target " + std::to_string(*t) + " must be related to the c target");
    if (want == Relatedness::Unrelated && related)
      throw GlueError(name + "/" + role, "target " + std::to_string(*t) + " must be unrelated to the c target");
  };
  check_relation("a1", row.y_to_x, id.a1);
  check_relation("a2", row.z_to_x, id.a2);
}

GlueResult glue(const Poset& q, const BuildingBlock& s, Rule rule, const Identify& id) {
  validate_glue(q, s, rule, id);
  const int nq = q.size();
  const int ns = s.poset.size();
  std::vector<int> s_pre(static_cast<std::size_t>(ns + 1), 0);  // S label -> pre-relabel label
  if (id.c) s_pre[s.roles.c] = *id.c;
  if (id.a1) s_pre[s.roles.a1] = *id.a1;
  if (id.a2) s_pre[*s.roles.a2] = *id.a2;
  int next = nq;
  for (int v = 1; v <= ns; ++v)
    if (!s_pre[v]) s_pre[v] = ++next;
  std::vector<Relation> rels = q.relations();
  for (const auto& [a, b] : s.poset.relations()) rels.emplace_back(s_pre[a], s_pre[b]);
  GlueResult out{Poset::from_covers(next, rels), {}, {}};
  const auto& relabel = out.poset.relabeling();
  out.q_map.assign(static_cast<std::size_t>(nq + 1), 0);
  for (int v = 1; v <= nq; ++v) out.q_map[v] = relabel[v];
  out.s_map.assign(static_cast<std::size_t>(ns + 1), 0);
  for (int v = 1; v <= ns; ++v) out.s_map[v] = relabel[s_pre[v]];
  return out;
}

std::vector<Identify> admissible_identifications(const Poset& q, const BuildingBlock& s, Rule rule) {
  const RuleRow& row = rule_row(rule);
  std::vector<Identify> out;
  if (row.a2 && !s.roles.a2) return out;
  const ExtremalData qext = extremal_data(q);
  const auto& c_side = s.roles.c_minimal ? qext.minimal : qext.maximal;
  const auto& a_side = s.roles.c_minimal ? qext.maximal : qext.minimal;
  std::vector<std::optional<int>> cs, a1s, a2s;
  auto options = [](bool wanted, const std::set<int>& side) {
    std::vector<std::optional<int>> v;
    if (!wanted) return std::vector<std::optional<int>>{std::nullopt};
    for (int x : side) v.emplace_back(x);
    return v;
  };
  cs = options(row.c, c_side);
  a1s = options(row.a1, a_side);
  a2s = options(row.a2, a_side);
  for (const auto& c : cs)
    for (const auto& a1 : a1s)
      for (const auto& a2 : a2s) {
        Identify id{c, a1, a2};
        try {
          validate_glue(q, s, rule, id);
          out.push_back(id);
        } catch (const GlueError&) {
        }
      }
  return out;
}

}  // namespace lpa
