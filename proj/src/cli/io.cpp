#include "lpa/io.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

namespace lpa::io {

namespace {

std::string where(const std::string& field) { return "field '" + field + "'"; }

const json& require(const json& j, const std::string& key, const std::string& ctx) {
  if (!j.is_object()) throw InputError(where(ctx) + ": expected an object");
  auto it = j.find(key);
  if (it == j.end()) throw InputError(where(ctx.empty() ? key : ctx + "." + key) + ": missing");
  return *it;
}

int as_int(const json& j, const std::string& ctx) {
  if (!j.is_number_integer()) throw InputError(where(ctx) + ": expected an integer");
  return j.get<int>();
}

std::optional<int> opt_int(const json& j, const std::string& key, const std::string& ctx) {
  auto it = j.find(key);
  if (it == j.end() || it->is_null()) return std::nullopt;
  return as_int(*it, ctx + "." + key);
}

Relation as_pair(const json& j, const std::string& ctx) {
  if (!j.is_array() || j.size() != 2) throw InputError(where(ctx) + ": expected [p, q]");
  return {as_int(j[0], ctx + "[0]"), as_int(j[1], ctx + "[1]")};
}

Rational as_rational(const json& j, const std::string& ctx) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (j.is_string()) {
    try {
      return parse_rational(j.get<std::string>());
    } catch (const std::exception&) {
    }
  }
  throw InputError(where(ctx) + ": expected an integer or a rational string like \"-3/2\"");
}

json pair_json(const Relation& r) { return json::array({r.first, r.second}); }

json terms_json(const std::vector<FormTerm>& terms) {
  json out = json::array();
  for (const auto& t : terms) out.push_back({{"pair", pair_json(t.pair)}, {"coeff", to_string(t.coeff)}});
  return out;
}

json relabel_json(const std::vector<int>& map) {
  json out = json::object();
  for (std::size_t i = 1; i < map.size(); ++i) out[std::to_string(i)] = map[i];
  return out;
}

}  // namespace

json parse_text(const std::string& text, const std::string& source) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw InputError(source + ":" + std::to_string(line) + ":" + std::to_string(col) + ": JSON syntax error");
  }
}

json read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError(path + ": cannot open file");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_text(buf.str(), path);
}

json poset_to_json(const Poset& p) {
  json covers = json::array();
  for (const auto& r : covering_relations(p)) covers.push_back(pair_json(r));
  return {{"n", p.size()}, {"covers", covers}};
}

Poset poset_from_json(const json& j) {
  const int n = as_int(require(j, "n", ""), "n");
  std::vector<Relation> covers;
  if (j.contains("covers")) {
    const json& c = j["covers"];
    if (!c.is_array()) throw InputError(where("covers") + ": expected an array");
    for (std::size_t i = 0; i < c.size(); ++i) covers.push_back(as_pair(c[i], "covers[" + std::to_string(i) + "]"));
  }
  try {
    return Poset::from_covers(n, covers);
  } catch (const PosetError& e) {
    throw InputError(where("covers") + ": " + e.what());
  }
}

json form_to_json(const OneForm& phi) {
  json support = json::array();
  json coeffs = json::object();
  for (const auto& [pair, c] : phi.terms()) {
    support.push_back(pair_json(pair));
    if (c != 1) coeffs[std::to_string(pair.first) + "," + std::to_string(pair.second)] = to_string(c);
  }
  json out = {{"support", support}};
  if (!coeffs.empty()) out["coeffs"] = coeffs;
  return out;
}

OneForm form_from_json(const json& j) {
  const json& s = require(j, "support", "");
  if (!s.is_array()) throw InputError(where("support") + ": expected an array");
  std::map<Relation, Rational> coeff;
  for (std::size_t i = 0; i < s.size(); ++i) coeff[as_pair(s[i], "support[" + std::to_string(i) + "]")] = 1;
  if (j.contains("coeffs")) {
    const json& c = j["coeffs"];
    if (!c.is_object()) throw InputError(where("coeffs") + ": expected an object");
    for (const auto& [key, value] : c.items()) {
      const std::string ctx = "coeffs." + key;
      const auto comma = key.find(',');
      Relation pair;
      try {
        if (comma == std::string::npos) throw std::invalid_argument("");
        std::size_t used1 = 0, used2 = 0;
        pair.first = std::stoi(key.substr(0, comma), &used1);
        pair.second = std::stoi(key.substr(comma + 1), &used2);
        if (used1 != comma || used2 != key.size() - comma - 1) throw std::invalid_argument("");
      } catch (const std::exception&) {
        throw InputError(where(ctx) + ": key must be \"p,q\"");
      }
      if (!coeff.count(pair)) throw InputError(where(ctx) + ": pair is not in the support");
      coeff[pair] = as_rational(value, ctx);
    }
  }
  OneForm phi;
  for (const auto& [pair, c] : coeff) phi.add(pair, c);
  return phi;
}

json script_to_json(const ConstructionScript& s) {
  json steps = json::array();
  for (const auto& step : s.steps) {
    json block = {{"id", step.block.id}};
    if (step.block.n) block["n"] = *step.block.n;
    if (step.block.a1) block["a1"] = *step.block.a1;
    if (step.block.a2) block["a2"] = *step.block.a2;
    json entry = {{"block", block}};
    if (step.rule) entry["rule"] = to_string(*step.rule);
    json id = json::object();
    if (step.identify.c) id["c"] = *step.identify.c;
    if (step.identify.a1) id["a1"] = *step.identify.a1;
    if (step.identify.a2) id["a2"] = *step.identify.a2;
    if (!id.empty()) entry["identify"] = id;
    steps.push_back(entry);
  }
  return {{"steps", steps}};
}

ConstructionScript script_from_json(const json& j) {
  const json& steps = require(j, "steps", "");
  if (!steps.is_array()) throw InputError(where("steps") + ": expected an array");
  ConstructionScript s;
  for (std::size_t i = 0; i < steps.size(); ++i) {
    const std::string ctx = "steps[" + std::to_string(i) + "]";
    const json& step = steps[i];
    ScriptStep out;
    const json& block = require(step, "block", ctx);
    const json& id = require(block, "id", ctx + ".block");
    if (!id.is_string()) throw InputError(where(ctx + ".block.id") + ": expected a string");
    out.block.id = id.get<std::string>();
    out.block.n = opt_int(block, "n", ctx + ".block");
    out.block.a1 = opt_int(block, "a1", ctx + ".block");
    out.block.a2 = opt_int(block, "a2", ctx + ".block");
    if (step.contains("rule") && !step["rule"].is_null()) {
      const json& rule = step["rule"];
      if (!rule.is_string()) throw InputError(where(ctx + ".rule") + ": expected a string");
      try {
        out.rule = parse_rule(rule.get<std::string>());
      } catch (const std::invalid_argument& e) {
        throw InputError(where(ctx + ".rule") + ": " + e.what());
      }
    }
    if (step.contains("identify")) {
      const json& ident = step["identify"];
      if (!ident.is_object()) throw InputError(where(ctx + ".identify") + ": expected an object");
      out.identify.c = opt_int(ident, "c", ctx + ".identify");
      out.identify.a1 = opt_int(ident, "a1", ctx + ".identify");
      out.identify.a2 = opt_int(ident, "a2", ctx + ".identify");
    }
    s.steps.push_back(out);
  }
  return s;
}

json coords_to_json(const MatrixCoords& coords) {
  json out = json::array();
  for (const auto& [pair, c] : coords) {
    if (c != 0) out.push_back({{"pair", pair_json(pair)}, {"coeff", to_string(c)}});
  }
  return out;
}

json kernel_to_json(const KernelReport& k) {
  json basis = json::array();
  if (!k.coords.empty()) {
    for (const auto& c : k.coords) basis.push_back(coords_to_json(c));
  } else {
    for (const auto& v : k.basis) {
      json vec = json::array();
      for (const auto& x : v) vec.push_back(to_string(x));
      basis.push_back(vec);
    }
  }
  return {{"dimension", k.dimension}, {"trace_zero", k.trace_zero}, {"basis", basis}};
}

json pair_report_to_json(const PairReport& r) {
  json conds = json::array();
  for (const auto& c : r.conditions) conds.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
  json out = {{"passed", r.passed()}, {"conditions", conds}};
  if (!r.passed()) out["first_failure"] = r.first_failure();
  return out;
}

json audit_to_json(const BuildResult& result) {
  json steps = json::array();
  for (const auto& a : result.audit) {
    json step = {{"step", a.step + 1},
                 {"block", a.block},
                 {"poset", poset_to_json(a.poset)},
                 {"q_map", relabel_json(a.q_map)},
                 {"s_map", relabel_json(a.s_map)},
                 {"added", terms_json(a.added)},
                 {"subtracted", terms_json(a.subtracted)},
                 {"within_recipe", a.within_recipe}};
    step["rule"] = a.rule ? json(to_string(*a.rule)) : json(nullptr);
    steps.push_back(step);
  }
  return {{"steps", steps},
          {"contact_sequence", result.contact_sequence},
          {"poset", poset_to_json(result.assembly.poset)},
          {"form", form_to_json(result.form)}};
}

std::string to_dot(const Poset& p, const std::vector<Relation>& highlight) {
  // Rank of an element: length of the longest chain ending at it.
  std::vector<int> rank(static_cast<std::size_t>(p.size() + 1), 0);
  for (int q = 1; q <= p.size(); ++q) {
    for (int r : p.predecessors(q)) rank[q] = std::max(rank[q], rank[r] + 1);
  }
  std::map<int, std::vector<int>> by_rank;
  for (int q = 1; q <= p.size(); ++q) by_rank[rank[q]].push_back(q);

  std::ostringstream out;
  out << "digraph poset {\n  rankdir=BT;\n  node [shape=circle];\n";
  for (const auto& [r, elems] : by_rank) {
    out << "  { rank=same;";
    for (int e : elems) out << ' ' << e << ';';
    out << " }\n";
  }
  const std::set<Relation> bold(highlight.begin(), highlight.end());
  const auto covers = covering_relations(p);
  for (const auto& [a, b] : covers) {
    out << "  " << a << " -> " << b;
    if (bold.count({a, b})) out << " [penwidth=2.5]";
    out << ";\n";
  }
  // Highlighted non-cover relations are drawn as extra dashed arcs.
  for (const auto& r : bold) {
    if (r.first == r.second || std::find(covers.begin(), covers.end(), r) != covers.end()) continue;
    out << "  " << r.first << " -> " << r.second << " [style=dashed, penwidth=2.5, constraint=false];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace lpa::io
