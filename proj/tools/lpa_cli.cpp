// lpa: command-line workbench for Lie poset algebras.

#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "lpa/io.hpp"
#include "lpa/workbench.hpp"

using namespace lpa;
using workbench::CommandResult;

namespace {

struct Common {
  std::uint64_t seed = IndexOptions{}.seed;
  int trials = IndexOptions{}.trials;
  std::string json_out;
  std::string dot_out;

  IndexOptions index() const { return {seed, trials}; }
};

void add_common(CLI::App* cmd, Common& c) {
  cmd->add_option("--seed", c.seed, "Seed for index sampling");
  cmd->add_option("--trials", c.trials, "Random forms tried by index sampling")->check(CLI::PositiveNumber);
  cmd->add_option("--json-out", c.json_out, "Write the JSON report to this path");
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw io::InputError(path + ": cannot write file");
  out << text;
}

int emit(const CommandResult& r, const Common& c) {
  for (const auto& line : r.lines()) std::cout << line.get<std::string>() << '\n';
  if (!c.json_out.empty()) write_file(c.json_out, r.report.dump(2) + "\n");
  return r.exit_code;
}

std::pair<int, int> parse_range(const std::string& s) {
  const auto colon = s.find(':');
  try {
    if (colon == std::string::npos) {
      const int n = std::stoi(s);
      return {n, n};
    }
    return {std::stoi(s.substr(0, colon)), std::stoi(s.substr(colon + 1))};
  } catch (const std::exception&) {
    throw io::InputError("--n-range: expected LO:HI, got '" + s + "'");
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact analysis of Lie poset algebras, toral building blocks and contact constructions"};
  app.require_subcommand(1);

  Common common;
  std::string poset_file, form_file, script_file, n_range, block_id, rule_name;
  std::optional<int> block_n, id_c, id_a1, id_a2;
  bool check_contact = false, audit = false, dot = false, known = false;
  int max_n = 4;

  auto* analyze = app.add_subcommand("analyze", "Index, Frobenius and contact analysis of a poset (and a form)");
  analyze->add_option("poset", poset_file, "Poset JSON file")->required();
  analyze->add_option("form", form_file, "One-form JSON file");
  add_common(analyze, common);

  auto* verify = app.add_subcommand("verify-catalog", "Run every catalog block through its verifier");
  verify->add_option("--n-range", n_range, "Parameter range LO:HI for the contact families (default 5:14)");
  verify->add_flag("--known", known, "Also verify the known blocks and their families");
  add_common(verify, common);

  auto* build = app.add_subcommand("build", "Run a construction script and build its one-form");
  build->add_option("script", script_file, "Script JSON file")->required();
  build->add_flag("--check-contact", check_contact, "Run the contact decision on the built form");
  build->add_flag("--audit", audit, "Print the per-step audit JSON");
  build->add_flag("--dot", dot, "Print the final poset as DOT");
  build->add_option("--dot-out", common.dot_out, "Write the final poset as DOT to this path");
  add_common(build, common);

  auto* gluecmd = app.add_subcommand("glue", "Glue a catalog block onto a poset and check the index change");
  gluecmd->add_option("poset", poset_file, "Poset JSON file (Q)")->required();
  gluecmd->add_option("--block", block_id, "Catalog block id (S)")->required();
  gluecmd->add_option("--n", block_n, "Parameter of a parametric block");
  gluecmd->add_option("--rule", rule_name, "Gluing rule, e.g. D1")->required();
  gluecmd->add_option("--c", id_c, "Target in Q for c");
  gluecmd->add_option("--a1", id_a1, "Target in Q for a1");
  gluecmd->add_option("--a2", id_a2, "Target in Q for a2");
  add_common(gluecmd, common);

  auto* sweep = app.add_subcommand("sweep", "Empirical sweep of connected posets for contact reachability");
  sweep->add_option("--max-n", max_n, "Largest poset size (at most 8)")->check(CLI::Range(1, 8));
  add_common(sweep, common);

  auto* export_dot = app.add_subcommand("export-dot", "Hasse diagram of a poset as Graphviz DOT");
  export_dot->add_option("poset", poset_file, "Poset JSON file")->required();
  export_dot->add_option("form", form_file, "Highlight the support of this one-form");
  export_dot->add_option("--dot-out", common.dot_out, "Write DOT to this path instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : workbench::kInputError;
  }

  try {
    if (*analyze) {
      const Poset p = io::poset_from_json(io::read_file(poset_file));
      std::optional<OneForm> phi;
      if (!form_file.empty()) phi = io::form_from_json(io::read_file(form_file));
      return emit(workbench::cmd_analyze(p, phi, common.index()), common);
    }
    if (*verify) {
      workbench::CatalogOptions opts;
      opts.known = known;
      if (!n_range.empty()) std::tie(opts.min_n, opts.max_n) = parse_range(n_range);
      return emit(workbench::cmd_verify_catalog(opts), common);
    }
    if (*build) {
      const ConstructionScript s = io::script_from_json(io::read_file(script_file));
      CommandResult r = workbench::cmd_build(s, check_contact, common.index());
      const Poset p = io::poset_from_json(r.report["poset"]);
      const OneForm phi = io::form_from_json(r.report["form"]);
      const std::string dot_text = io::to_dot(p, phi.strict_support());
      const int code = emit(r, common);
      std::cout << "poset: " << r.report["poset"].dump() << '\n' << "form: " << r.report["form"].dump() << '\n';
      if (audit) std::cout << r.report["audit"].dump(2) << '\n';
      if (dot) std::cout << dot_text;
      if (!common.dot_out.empty()) write_file(common.dot_out, dot_text);
      return code;
    }
    if (*gluecmd) {
      const Poset q = io::poset_from_json(io::read_file(poset_file));
      const BlockRef ref{block_id, block_n, std::nullopt, std::nullopt};
      Rule rule;
      try {
        rule = parse_rule(rule_name);
      } catch (const std::invalid_argument& e) {
        throw io::InputError(std::string("--rule: ") + e.what());
      }
      CommandResult r = workbench::cmd_glue(q, ref, rule, {id_c, id_a1, id_a2}, common.index());
      const int code = emit(r, common);
      std::cout << "poset: " << r.report["poset"].dump() << '\n';
      return code;
    }
    if (*sweep) return emit(workbench::cmd_sweep(max_n, common.index()), common);
    if (*export_dot) {
      const Poset p = io::poset_from_json(io::read_file(poset_file));
      std::vector<Relation> highlight;
      if (!form_file.empty()) highlight = io::form_from_json(io::read_file(form_file)).strict_support();
      const std::string text = io::to_dot(p, highlight);
      if (common.dot_out.empty()) {
        std::cout << text;
      } else {
        write_file(common.dot_out, text);
      }
      return workbench::kOk;
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return workbench::kInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return workbench::kVerificationFailure;
  }
  return workbench::kOk;
}
