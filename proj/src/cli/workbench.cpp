#include "lpa/workbench.hpp"

#include <sstream>

#include "lpa/checks.hpp"
#include "parallel.hpp"
#include "lpa/toral_pairs.hpp"

namespace lpa::workbench {

using io::json;

void CommandResult::log(const std::string& line) {
  if (!report.contains("log")) report["log"] = json::array();
  report["log"].push_back(line);
}

namespace {

std::string join(const std::set<int>& s) {
  std::ostringstream out;
  out << '{';
  bool first = true;
  for (int x : s) {
    out << (first ? "" : ",") << x;
    first = false;
  }
  out << '}';
  return out.str();
}

std::string pairs_text(const std::vector<Relation>& rels) {
  std::ostringstream out;
  out << '{';
  for (std::size_t i = 0; i < rels.size(); ++i) out << (i ? "," : "") << rels[i].first << "<" << rels[i].second;
  out << '}';
  return out.str();
}

std::string coords_text(const MatrixCoords& m) {
  std::ostringstream out;
  bool first = true;
  for (const auto& [pair, c] : m) {
    if (c == 0) continue;
    const Rational mag = c < 0 ? Rational(-c) : c;
    out << (first ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + "));
    if (mag != 1) out << to_string(mag) << '*';
    out << 'E' << pair.first << ',' << pair.second;
    first = false;
  }
  return first ? "0" : out.str();
}

std::string form_text(const OneForm& phi) {
  MatrixCoords m(phi.terms().begin(), phi.terms().end());
  std::string s = coords_text(m);
  // Dual basis vectors are written E*p,q.
  for (std::size_t pos = 0; (pos = s.find('E', pos)) != std::string::npos; pos += 2) s.insert(pos + 1, "*");
  return s;
}

json poset_summary(const Poset& p, CommandResult& out) {
  const ExtremalData ext = extremal_data(p);
  const auto comps = connected_components(p);
  json j = {{"n", p.size()},
            {"height", height(p)},
            {"relations", p.relations().size()},
            {"ext", ext.ext},
            {"minimal", ext.minimal},
            {"maximal", ext.maximal},
            {"rel_e", json::array()},
            {"connected", comps.size() == 1},
            {"components", comps.size()},
            {"covers", io::poset_to_json(p)["covers"]}};
  for (const auto& r : ext.rel_e) j["rel_e"].push_back(json::array({r.first, r.second}));
  out.log("poset: n=" + std::to_string(p.size()) + " height=" + std::to_string(height(p)) +
          " |Rel|=" + std::to_string(p.relations().size()) + " components=" + std::to_string(comps.size()));
  out.log("Ext=" + join(ext.ext) + " Rel_E=" + pairs_text(ext.rel_e));
  if (p.was_relabeled()) {
    json map = json::object();
    for (std::size_t i = 1; i < p.relabeling().size(); ++i) map[std::to_string(i)] = p.relabeling()[i];
    j["relabeling"] = map;
    out.log("warning: input labels violate the order convention; relabeled along a linear extension");
  }
  return j;
}

json report_checklist(const std::string& title, const PairReport& r, CommandResult& out) {
  std::string line = title + ":";
  for (const auto& c : r.conditions) line += " " + c.name + "=" + (c.passed ? "ok" : "FAIL");
  out.log(line);
  return io::pair_report_to_json(r);
}

json spectrum_json(const LieAlgebra& g, const RatVector& phi, CommandResult& out) {
  const auto poly = principal_char_poly(g, phi);
  json coeffs = json::array();
  for (const auto& c : poly) coeffs.push_back(to_string(c));
  const bool binary = is_binary_spectrum(g, phi);
  out.log(std::string("spectrum: ") + (binary ? "binary" : "not binary") + " (characteristic polynomial of ad x)");
  return {{"char_poly_low_to_high", coeffs}, {"binary", binary}};
}

// Contact decision for a single form on g_A(P), with Reeb vector and the
// volume-oracle cross-check on odd dimension.
json form_contact_json(const LieAlgebra& gA, const RatVector& phi) {
  const ContactVerdict v = contact_verdict(gA, phi);
  json j = {{"contact", v.contact}, {"reason", v.reason}, {"kernel_dimension", v.kernel_dimension}};
  if (v.kernel_generator) j["kernel_generator"] = io::coords_to_json(gA.to_matrix_coords(*v.kernel_generator));
  if (v.reeb) j["reeb"] = io::coords_to_json(gA.to_matrix_coords(*v.reeb));
  if (gA.dim() % 2 == 1) j["volume_oracle"] = is_contact_form_volume(gA, phi);
  return j;
}

void analyze_form(const Poset& p, const OneForm& phi, const LieAlgebra& gA, CommandResult& out) {
  phi.check_host(p);
  json f = {{"form", io::form_to_json(phi)}};
  out.log("form: " + form_text(phi));
  const RatVector values = functional(gA, phi);

  const KernelReport kg = kernel(p, phi, false);
  const KernelReport ka = kernel(p, phi, true);
  f["kernel_g"] = io::kernel_to_json(kg);
  f["kernel_gA"] = io::kernel_to_json(ka);
  out.log("dim ker in g(P) = " + std::to_string(kg.dimension) + ", in g_A(P) = " + std::to_string(ka.dimension));

  if (ka.dimension == 0 && gA.dim() > 0) {
    const RatVector x = principal_element(gA, values);
    f["frobenius"] = {{"verdict", true}, {"certificate", {{"principal_element", io::coords_to_json(gA.to_matrix_coords(x))}}}};
    out.log("Frobenius: yes; principal element " + coords_text(gA.to_matrix_coords(x)));
    f["spectrum"] = spectrum_json(gA, values, out);
  } else {
    f["frobenius"] = {{"verdict", ka.dimension == 0},
                      {"certificate", ka.dimension == 0 ? json{{"reason", "zero-dimensional"}}
                                                         : json{{"kernel", f["kernel_gA"]["basis"]}}}};
    out.log(std::string("Frobenius: ") + (ka.dimension == 0 ? "yes (zero-dimensional)" : "no; kernel certificate above"));
  }

  json c = form_contact_json(gA, values);
  out.log(std::string("contact: ") + (c["contact"].get<bool>() ? "yes" : "no") + " (" + c["reason"].get<std::string>() + ")");
  if (c.contains("reeb")) out.log("Reeb vector: " + coords_text(gA.to_matrix_coords(*contact_verdict(gA, values).reeb)));
  if (c.contains("volume_oracle") && c["volume_oracle"] != c["contact"]) {
    out.log("error: the volume oracle disagrees with the kernel criterion");
    out.exit_code = kVerificationFailure;
  }
  f["contact"] = c;
  const FormGraph fg = form_graph(p, phi.strict_part());
  f["small"] = is_small(p, phi);
  f["udo"] = {{"U", fg.sinks}, {"D", fg.sources}, {"O", fg.interior}};
  if (gA.dim() % 2 == 0) {
    f["toral_pair"] = report_checklist("toral-pair checklist", verify_toral_pair(p, phi), out);
  } else {
    f["contact_toral_pair"] = report_checklist("contact toral-pair checklist", verify_contact_toral_pair(p, phi), out);
  }
  out.report["form_analysis"] = f;
}

// Contact verdict for the poset itself (existence of a contact form).
json poset_contact(const Poset& p, const LieAlgebra& gA, const IndexSample& idx, IndexOptions options,
                   CommandResult& out) {
  auto verdict = [&](bool contact, const std::string& reason, json certificate) {
    out.log(std::string("contact: ") + (contact ? "yes" : "no") + " (" + reason + ")");
    return json{{"verdict", contact}, {"reason", reason}, {"certificate", certificate}};
  };
  if (!is_connected(p)) {
    const auto comps = connected_components(p);
    json indices = json::array();
    for (const auto& c : comps) {
      indices.push_back(index(build_gA(induced_subposet(p, std::set<int>(c.begin(), c.end()))), options));
    }
    const bool ok = disconnected_contact_check(p, options);
    json cert = {{"components", comps.size()}, {"component_indices", indices}};
    if (ok && idx.index == 1) {
      const ContactVerdict v = contact_verdict(gA, idx.witness);
      if (v.contact) cert["form"] = io::form_to_json(form_from_functional(gA, idx.witness));
    }
    return verdict(ok, ok ? "two Frobenius components" : "not exactly two Frobenius components", cert);
  }
  if (ext_hasse_has_cycle(p)) {
    const Poset sub = induced_subposet(p, extremal_data(p).ext);
    return verdict(false, "Ext-Hasse cycle", {{"ext_hasse", io::poset_to_json(sub)}});
  }
  if (gA.dim() % 2 == 0) return verdict(false, "even dimension", {{"dim_gA", gA.dim()}});
  if (idx.index != 1) return verdict(false, "index " + std::to_string(idx.index), {{"index", idx.index}});
  if (p.size() <= kSearchSizeLimit) {
    if (auto phi = search_toral_form(p, SearchKind::Contact)) {
      const RatVector values = functional(gA, *phi);
      json cert = {{"form", io::form_to_json(*phi)}, {"contact_toral_form", true}};
      if (auto v = contact_verdict(gA, values); v.reeb) cert["reeb"] = io::coords_to_json(gA.to_matrix_coords(*v.reeb));
      out.report["contact_toral_pair"] = report_checklist("contact toral-pair checklist", verify_contact_toral_pair(p, *phi), out);
      return verdict(true, "contact toral form found", cert);
    }
  }
  const ContactVerdict v = contact_verdict(gA, idx.witness);
  if (v.contact) {
    return verdict(true, "sampled form is contact",
                   {{"form", io::form_to_json(form_from_functional(gA, idx.witness))},
                    {"reeb", io::coords_to_json(gA.to_matrix_coords(*v.reeb))}});
  }
  return verdict(false, "no sampled form is contact (empirical)", {{"form_reason", v.reason}});
}

}  // namespace

CommandResult cmd_analyze(const Poset& p, const std::optional<OneForm>& phi, IndexOptions options) {
  CommandResult out;
  out.report["poset"] = poset_summary(p, out);
  const LieAlgebra gA = build_gA(p);
  out.report["algebra"] = {{"dim_g", gA.dim() + 1}, {"dim_gA", gA.dim()}};
  out.log("dim g(P)=" + std::to_string(gA.dim() + 1) + " dim g_A(P)=" + std::to_string(gA.dim()));
  if (p.size() > kSearchSizeLimit) out.log("warning: " + std::to_string(p.size()) +
                                           " elements exceed the form-search limit; search skipped");

  const IndexSample idx = sample_index(gA, options);
  const OneForm witness = gA.dim() ? form_from_functional(gA, idx.witness) : OneForm();
  out.report["index"] = {{"value", idx.index}, {"method", "sampled"}, {"seed", options.seed},
                         {"trials", options.trials}, {"witness", io::form_to_json(witness)}};
  out.log("index: " + std::to_string(idx.index) + " (sampled, seed " + std::to_string(options.seed) + ", " +
          std::to_string(options.trials) + " trials)");

  if (idx.index == 0) {
    json cert = {{"form", io::form_to_json(witness)}};
    if (p.size() <= kSearchSizeLimit && gA.dim() > 0) {
      if (auto tf = search_toral_form(p, SearchKind::Frobenius)) {
        cert["toral_form"] = io::form_to_json(*tf);
        out.report["toral_pair"] = report_checklist("toral-pair checklist", verify_toral_pair(p, *tf), out);
      }
    }
    out.report["frobenius"] = {{"verdict", true}, {"certificate", cert}};
    out.log(gA.dim() ? "Frobenius: yes; regular form " + form_text(witness) : "Frobenius: yes (zero-dimensional)");
    if (gA.dim() > 0) out.report["spectrum"] = spectrum_json(gA, idx.witness, out);
  } else {
    out.report["frobenius"] = {{"verdict", false}, {"certificate", {{"failed", "index"}, {"index", idx.index}}}};
    out.log("Frobenius: no (index " + std::to_string(idx.index) + ")");
  }
  out.report["contact"] = poset_contact(p, gA, idx, options, out);
  if (phi) analyze_form(p, *phi, gA, out);
  return out;
}

std::vector<BuildingBlock> catalog_blocks(const CatalogOptions& options) {
  std::vector<BuildingBlock> blocks;
  for (const auto& e : catalog()) {
    const bool known = e.id.rfind("known-", 0) == 0;
    if (known && !options.known) continue;
    if (!e.parametric) {
      blocks.push_back(make_block({e.id, std::nullopt, std::nullopt, std::nullopt}));
      continue;
    }
    const int lo = known ? e.min_n : std::max(e.min_n, options.min_n);
    const int hi = known ? e.max_n : options.max_n;
    for (int n = lo; n <= hi; ++n) blocks.push_back(make_block({e.id, n, std::nullopt, std::nullopt}, hi));
  }
  return blocks;
}

CommandResult verify_blocks(const std::vector<BuildingBlock>& blocks) {
  CommandResult out;
  out.report["blocks"] = json::array();
  std::size_t failures = 0;
  const std::vector<PairReport> reports = parallel_map(blocks, [](const BuildingBlock& b) {
    return b.kind == BlockKind::Toral ? verify_toral_pair(b.poset, b.form) : verify_contact_toral_pair(b.poset, b.form);
  });
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    const BuildingBlock& b = blocks[i];
    const PairReport& r = reports[i];
    json entry = {{"block", b.ref.display()}, {"report", io::pair_report_to_json(r)}};
    out.report["blocks"].push_back(entry);
    if (r.passed()) {
      out.log("[ok]   " + b.ref.display());
    } else {
      ++failures;
      const ConditionResult* c = r.find(r.first_failure());
      out.log("[FAIL] " + b.ref.display() + ": " + r.first_failure() + (c && !c->detail.empty() ? " (" + c->detail + ")" : ""));
    }
  }
  out.report["checked"] = blocks.size();
  out.report["failures"] = failures;
  out.log(std::to_string(blocks.size() - failures) + "/" + std::to_string(blocks.size()) + " blocks verified");
  if (failures) out.exit_code = kVerificationFailure;
  return out;
}

CommandResult cmd_verify_catalog(const CatalogOptions& options) {
  if (options.min_n > options.max_n) throw std::invalid_argument("empty parameter range");
  return verify_blocks(catalog_blocks(options));
}

CommandResult cmd_build(const ConstructionScript& script, bool check_contact, IndexOptions options) {
  CommandResult out;
  const ScriptValidation v = validate_script(script);
  out.report["validation"] = {{"valid", v.valid}, {"contact_sequence", v.contact_sequence},
                              {"contact_block_first", v.contact_block_first}, {"contact_blocks", v.contact_blocks},
                              {"message", v.message}};
  if (!v.valid) throw std::invalid_argument(v.message);
  const BuildResult r = run_script(script);
  const Poset& p = r.assembly.poset;
  out.report["poset"] = io::poset_to_json(p);
  out.report["form"] = io::form_to_json(r.form);
  out.report["audit"] = io::audit_to_json(r);
  out.log("built poset: n=" + std::to_string(p.size()) + " covers=" + pairs_text(covering_relations(p)));
  out.log("built form: " + form_text(r.form));
  for (const auto& a : r.audit) {
    if (!a.within_recipe) out.log("warning: step " + std::to_string(a.step + 1) + " uses rule " +
                                  to_string(*a.rule) + " outside the contact recipe; block form added unchanged");
  }
  if (!check_contact) return out;

  const LieAlgebra gA = build_gA(p);
  const RatVector values = functional(gA, r.form);
  json c = form_contact_json(gA, values);
  if (!r.contact_sequence) {
    out.log("warning: not a contact sequence; the built form carries no contact guarantee");
    const std::size_t ind = index(gA, options);
    c["index"] = ind;
    c["index_formula"] = index_formula(p, script);
    out.log("index: " + std::to_string(ind) + " (sampled), formula " + std::to_string(index_formula(p, script)));
  }
  out.report["contact"] = c;
  out.log(std::string("contact: ") + (c["contact"].get<bool>() ? "yes" : "no") + " (" + c["reason"].get<std::string>() + ")");
  if (c.contains("reeb")) {
    out.log("Reeb-normalized kernel generator: " + coords_text(gA.to_matrix_coords(*contact_verdict(gA, values).reeb)));
  }
  const bool oracles_agree = !c.contains("volume_oracle") || c["volume_oracle"] == c["contact"];
  if (!oracles_agree) out.log("error: the volume oracle disagrees with the kernel criterion");
  if (!oracles_agree || (r.contact_sequence && !c["contact"].get<bool>())) out.exit_code = kVerificationFailure;
  return out;
}

CommandResult cmd_glue(const Poset& q, const BlockRef& ref, Rule rule, const Identify& identify, IndexOptions options) {
  CommandResult out;
  const BuildingBlock s = make_block(ref);
  const GlueResult g = glue(q, s, rule, identify);
  out.report["poset"] = io::poset_to_json(g.poset);
  json qm = json::object(), sm = json::object();
  for (std::size_t i = 1; i < g.q_map.size(); ++i) qm[std::to_string(i)] = g.q_map[i];
  for (std::size_t i = 1; i < g.s_map.size(); ++i) sm[std::to_string(i)] = g.s_map[i];
  out.report["q_map"] = qm;
  out.report["s_map"] = sm;
  out.log("glued poset: n=" + std::to_string(g.poset.size()) + " covers=" + pairs_text(covering_relations(g.poset)));
  const IndexDelta d = index_delta_check(q, s, rule, identify, options);
  out.report["index_delta"] = {{"expected", d.expected}, {"computed", d.computed}, {"index_q", d.index_q},
                               {"index_s", d.index_s}, {"index_p", d.index_p}};
  out.log("index delta: expected " + std::to_string(d.expected) + ", computed " + std::to_string(d.computed));
  if (d.expected != d.computed) out.exit_code = kVerificationFailure;
  return out;
}

}  // namespace lpa::workbench
