#include <gtest/gtest.h>

#include <random>

#include "lpa/io.hpp"
#include "lpa/workbench.hpp"
#include "oracles.hpp"

using namespace lpa;
using namespace lpa::workbench;

namespace {

Poset fork_poset() { return Poset::from_covers(4, {{1, 2}, {2, 3}, {2, 4}}); }

bool logged(const CommandResult& r, const std::string& needle) {
  for (const auto& line : r.lines())
    if (line.get<std::string>().find(needle) != std::string::npos) return true;
  return false;
}

}  // namespace

TEST(Io, PosetRoundTrip) {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 30; ++t) {
    const int n = 1 + t % 7;
    const Poset p = Poset::from_covers(n, oracle::random_covers(rng, n, 0.4));
    EXPECT_EQ(io::poset_from_json(io::poset_to_json(p)), p);
    EXPECT_EQ(io::poset_from_json(io::parse_text(io::poset_to_json(p).dump())), p);
  }
}

TEST(Io, FormRoundTripKeepsCoefficients) {
  OneForm phi = OneForm::from_support({{1, 1}, {1, 3}, {2, 3}});
  phi.add({2, 3}, Rational(-4, 3));
  phi.add({1, 2}, Rational(5, 7));
  const io::json j = io::form_to_json(phi);
  EXPECT_EQ(io::form_from_json(j), phi);
  EXPECT_EQ(io::form_from_json(io::parse_text(R"({"support": [[1, 2]]})")), OneForm::from_support({{1, 2}}));
}

TEST(Io, ScriptRoundTrip) {
  const ConstructionScript s = io::script_from_json(io::read_file(LPA_DATA_DIR "/contact_script.json"));
  const ConstructionScript back = io::script_from_json(io::script_to_json(s));
  ASSERT_EQ(back.steps.size(), s.steps.size());
  for (std::size_t i = 0; i < s.steps.size(); ++i) {
    EXPECT_EQ(back.steps[i].block.display(), s.steps[i].block.display());
    EXPECT_EQ(back.steps[i].rule, s.steps[i].rule);
    EXPECT_EQ(back.steps[i].identify.c, s.steps[i].identify.c);
    EXPECT_EQ(back.steps[i].identify.a1, s.steps[i].identify.a1);
    EXPECT_EQ(back.steps[i].identify.a2, s.steps[i].identify.a2);
  }
  EXPECT_EQ(io::script_to_json(back), io::script_to_json(s));
}

TEST(Io, SyntaxErrorsNameTheLine) {
  try {
    io::parse_text("{\n  \"n\": 3,\n  \"covers\": [[1, 2],\n}", "broken.json");
    FAIL();
  } catch (const io::InputError& e) {
    const std::string msg = e.what();
    EXPECT_NE(msg.find("broken.json"), std::string::npos) << msg;
    EXPECT_NE(msg.find(":4:"), std::string::npos) << msg;
  }
  EXPECT_THROW(io::read_file("/nonexistent/poset.json"), io::InputError);
}

TEST(Io, FieldErrors) {
  EXPECT_THROW(io::poset_from_json(io::parse_text(R"({"covers": []})")), io::InputError);
  EXPECT_THROW(io::poset_from_json(io::parse_text(R"({"n": "three", "covers": []})")), io::InputError);
  EXPECT_THROW(io::poset_from_json(io::parse_text(R"({"n": 3, "covers": [[1]]})")), io::InputError);
  EXPECT_THROW(io::form_from_json(io::parse_text(R"({"support": [[1, 2]], "coeffs": {"1,2": "x"}})")),
               io::InputError);
  EXPECT_THROW(io::script_from_json(io::parse_text(R"({"steps": [{"block": "known-a", "rule": "Q"}]})")),
               std::invalid_argument);
}

TEST(Io, DotOutput) {
  const std::string dot = io::to_dot(fork_poset(), {{2, 3}});
  EXPECT_EQ(dot.rfind("digraph", 0), 0u);
  EXPECT_NE(dot.find("1 -> 2"), std::string::npos);
  EXPECT_NE(dot.find("2 -> 4"), std::string::npos);
  EXPECT_EQ(dot.find("1 -> 3"), std::string::npos);
  EXPECT_NE(dot.find("2 -> 3 [penwidth"), std::string::npos);
}

TEST(Analyze, Fork) {
  const CommandResult r = cmd_analyze(fork_poset(), std::nullopt);
  EXPECT_EQ(r.exit_code, kOk);
  EXPECT_EQ(r.report["algebra"]["dim_gA"], 8);
  EXPECT_EQ(r.report["index"]["value"], 0);
  EXPECT_TRUE(r.report["frobenius"]["verdict"].get<bool>());
  EXPECT_FALSE(r.report["contact"]["verdict"].get<bool>());
  EXPECT_TRUE(logged(r, "dim g_A(P)=8"));
}

TEST(Analyze, CycleAndComponents) {
  const CommandResult e8 = cmd_analyze(io::poset_from_json(io::read_file(LPA_DATA_DIR "/ext_cycle_poset.json")), std::nullopt);
  EXPECT_FALSE(e8.report["contact"]["verdict"].get<bool>());
  EXPECT_EQ(e8.report["contact"]["reason"], "Ext-Hasse cycle");
  const CommandResult f6 = cmd_analyze(io::poset_from_json(io::read_file(LPA_DATA_DIR "/two_component_poset.json")), std::nullopt);
  EXPECT_TRUE(f6.report["contact"]["verdict"].get<bool>());
  EXPECT_EQ(f6.report["contact"]["reason"], "two Frobenius components");
}

TEST(Analyze, SingletonAndExplicitForm) {
  const CommandResult one = cmd_analyze(Poset::chain(1), std::nullopt);
  EXPECT_EQ(one.report["algebra"]["dim_gA"], 0);
  EXPECT_TRUE(logged(one, "zero-dimensional"));
  const CommandResult c3 = cmd_analyze(Poset::chain(3), OneForm::from_support({{1, 1}, {1, 3}, {2, 3}}));
  EXPECT_TRUE(c3.report["contact"]["verdict"].get<bool>());
  EXPECT_TRUE(c3.report["form_analysis"]["contact"]["contact"].get<bool>());
  EXPECT_TRUE(logged(c3, "Reeb vector"));
}

TEST(VerifyCatalog, DefaultRangeAndCorruption) {
  const CommandResult ok = cmd_verify_catalog({5, 6, false});
  EXPECT_EQ(ok.exit_code, kOk);
  EXPECT_EQ(ok.report["failures"], 0);
  EXPECT_TRUE(logged(ok, "20/20 blocks verified"));

  std::vector<BuildingBlock> blocks = catalog_blocks({5, 5, false});
  blocks[0].form.add({1, 1}, 1);  // toral forms carry no diagonal terms
  blocks[1].form.add({1, 4}, -1);  // drops a summand
  const CommandResult bad = verify_blocks(blocks);
  EXPECT_EQ(bad.exit_code, kVerificationFailure);
  EXPECT_EQ(bad.report["failures"], 2);
  const io::json& first = bad.report["blocks"][0]["report"];
  bool named = false;
  for (const auto& c : first["conditions"])
    if (!c["passed"].get<bool>()) named = true;
  EXPECT_TRUE(named);
  EXPECT_TRUE(logged(bad, "[FAIL] " + blocks[0].ref.display()));
  EXPECT_THROW(cmd_verify_catalog({7, 6, false}), std::invalid_argument);
}

TEST(Build, WorkedExample) {
  const ConstructionScript s = io::script_from_json(io::read_file(LPA_DATA_DIR "/contact_script.json"));
  const CommandResult r = cmd_build(s, true);
  EXPECT_EQ(r.exit_code, kOk);
  EXPECT_TRUE(r.report["contact"]["contact"].get<bool>());
  EXPECT_TRUE(r.report["validation"]["contact_sequence"].get<bool>());
  EXPECT_EQ(r.report["poset"]["n"], 20);
  EXPECT_TRUE(logged(r, "Reeb-normalized kernel generator"));
}

TEST(Build, RuleOutsideTheRecipeWarns) {
  // Chain contact block, a fork hung from its top, then a second fork by G1.
  const BlockRef fork{"known-b", std::nullopt, std::nullopt, std::nullopt};
  ConstructionScript s{{{{"contact-1", std::nullopt, std::nullopt, std::nullopt}, std::nullopt, {}},
                        {fork, Rule::A1, {std::nullopt, 3, std::nullopt}}}};
  const auto ids = admissible_identifications(assemble(s).poset, make_block(fork), Rule::G1);
  ASSERT_FALSE(ids.empty());
  s.steps.push_back({fork, Rule::G1, ids.front()});
  const CommandResult r = cmd_build(s, true);
  EXPECT_TRUE(logged(r, "outside the contact recipe"));
  EXPECT_TRUE(logged(r, "not a contact sequence"));
  EXPECT_EQ(r.report["contact"]["index"], 2);
  EXPECT_EQ(r.report["contact"]["index_formula"], 2);
  EXPECT_FALSE(r.report["contact"]["contact"].get<bool>());
}

TEST(Glue, ReportsMapsAndDelta) {
  const CommandResult r =
      cmd_glue(fork_poset(), {"known-a", std::nullopt, std::nullopt, std::nullopt}, Rule::A1, {std::nullopt, 3, std::nullopt});
  EXPECT_EQ(r.exit_code, kOk);
  EXPECT_EQ(r.report["index_delta"]["expected"], 0);
  EXPECT_EQ(r.report["index_delta"]["computed"], 0);
  EXPECT_EQ(r.report["poset"]["n"], 5);
  EXPECT_EQ(r.report["s_map"]["2"], r.report["q_map"]["3"]);
  EXPECT_THROW(cmd_glue(fork_poset(), {"known-a", std::nullopt, std::nullopt, std::nullopt}, Rule::A1,
                        {std::nullopt, 1, std::nullopt}),
               GlueError);
}

TEST(Sweep, SmallSizes) {
  const CommandResult one = cmd_sweep(1);
  EXPECT_EQ(one.report["sizes"][0]["contact"], 0);
  EXPECT_TRUE(one.report["empirical"].get<bool>());
  const CommandResult three = cmd_sweep(3);
  // Connected posets on three elements: chain, V and its dual.
  EXPECT_EQ(three.report["sizes"][2]["connected"], 3);
  EXPECT_EQ(three.report["sizes"][2]["contact"], 1);
  const CommandResult four = cmd_sweep(4);
  EXPECT_TRUE(four.report["unreached_contact"].empty());
  EXPECT_TRUE(logged(four, "0 contact posets not produced"));
  EXPECT_THROW(cmd_sweep(9), std::invalid_argument);
}

TEST(Sweep, ConnectedPosetCounts) {
  // Connected unlabeled posets on 1..5 elements.
  std::map<int, int> counts;
  for (const auto& p : connected_posets(5)) ++counts[p.size()];
  EXPECT_EQ(counts, (std::map<int, int>{{1, 1}, {2, 1}, {3, 3}, {4, 10}, {5, 44}}));
}
