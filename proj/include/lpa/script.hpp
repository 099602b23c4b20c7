#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "lpa/catalog.hpp"
#include "lpa/forms.hpp"
#include "lpa/gluing.hpp"

namespace lpa {

struct ScriptStep {
  BlockRef block;
  std::optional<Rule> rule;  ///< absent on the first step
  Identify identify;
};

struct ConstructionScript {
  std::vector<ScriptStep> steps;
};

class ScriptError : public std::invalid_argument {
 public:
  ScriptError(std::size_t step, const std::string& what)
      : std::invalid_argument("step " + std::to_string(step + 1) + ": " + what), step_(step) {}
  std::size_t step() const { return step_; }

 private:
  std::size_t step_;
};

struct FormTerm {
  Relation pair;
  Rational coeff;
};

/// What one step did, reported in the labels of the poset after that step.
struct StepAudit {
  std::size_t step = 0;
  std::string block;
  std::optional<Rule> rule;
  Poset poset = Poset::chain(1);
  std::vector<int> q_map;  ///< previous labels -> labels after this step
  std::vector<int> s_map;  ///< block labels -> labels after this step
  std::vector<FormTerm> added;
  std::vector<FormTerm> subtracted;
  bool within_recipe = true;  ///< rule is one of A1, A2, C, D1, D2, F
};

/// The accumulated posets of a script, with block-to-final label maps.
struct Assembly {
  Poset poset = Poset::chain(1);
  std::vector<BuildingBlock> blocks;
  std::vector<std::vector<int>> block_maps;  ///< block label -> final label
  std::vector<GlueResult> glues;             ///< per step after the first
  std::size_t contact_blocks = 0;
};

/// Glues all steps (contact blocks may sit anywhere). Throws ScriptError
/// wrapping catalog and gluing validation failures.
Assembly assemble(const ConstructionScript& script);

struct BuildResult {
  Assembly assembly;
  OneForm form;
  std::vector<StepAudit> audit;
  std::vector<OneForm> prefix_forms;  ///< built form after each step, in that step's labels
  bool contact_sequence = false;
};

/// Builds the final poset and one-form: the first block's form, then per
/// step the block's form added and the duplicated extremal-edge terms
/// removed (D1: the c-a1 edge, D2: the c-a2 edge, F: both; A1, A2, C: none).
/// Rules outside {A1, A2, C, D1, D2, F} add the block form unchanged and are
/// flagged in the audit. Throws ScriptError if a contact block appears after
/// the first step.
BuildResult run_script(const ConstructionScript& script);

/// Exactly one contact block and every rule in {A1, A2, C, D1, D2, F}.
bool is_contact_sequence(const ConstructionScript& script);

struct ScriptValidation {
  bool valid = false;
  bool contact_sequence = false;
  bool contact_block_first = false;
  std::size_t contact_blocks = 0;
  std::string message;
};

ScriptValidation validate_script(const ConstructionScript& script);

/// |Rel_E(P)| - |Ext(P)| + (number of contact blocks) + 1.
long index_formula(const Poset& p, const ConstructionScript& script);

struct RandomScriptOptions {
  std::uint64_t seed = 1;
  std::size_t length = 3;
  bool allow_contact = false;
  std::vector<Rule> rule_pool = {std::begin(kContactRules), std::end(kContactRules)};
  std::size_t max_dim = 60;  ///< cap on dim g_A of the final poset
};

/// Reproducible random script over small catalog blocks. With
/// allow_contact, the first block is a contact block and every later block
/// is toral. Steps that cannot be placed within the dimension cap are
/// dropped, so the script may be shorter than requested.
ConstructionScript random_toral_script(const RandomScriptOptions& options);

/// Block references used by the random generator.
const std::vector<BlockRef>& random_toral_pool();
const std::vector<BlockRef>& random_contact_pool();

}  // namespace lpa
