#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "lpa/catalog.hpp"
#include "lpa/poset.hpp"

namespace lpa {

enum class Rule { A1, A2, B, C, D1, D2, E1, E2, F, G1, G2, H };

inline constexpr Rule kAllRules[] = {Rule::A1, Rule::A2, Rule::B,  Rule::C,  Rule::D1, Rule::D2,
                                     Rule::E1, Rule::E2, Rule::F,  Rule::G1, Rule::G2, Rule::H};
/// Rules that keep the index additive and never create a cycle among
/// extremal elements.
inline constexpr Rule kContactRules[] = {Rule::A1, Rule::A2, Rule::C, Rule::D1, Rule::D2, Rule::F};

std::string to_string(Rule r);
/// Throws std::invalid_argument for unknown names.
Rule parse_rule(const std::string& name);
bool is_contact_rule(Rule r);

enum class Relatedness { Any, Related, Unrelated };

/// One row of the gluing table: which roles are identified, and the
/// relatedness required between the a1 (resp. a2) target and the c target.
struct RuleRow {
  bool c = false;
  bool a1 = false;
  bool a2 = false;
  Relatedness y_to_x = Relatedness::Any;
  Relatedness z_to_x = Relatedness::Any;
  int index_offset = 0;  ///< extra index over ind(g_A(S))
};

const RuleRow& rule_row(Rule r);

/// Targets in Q for the identified roles of S.
struct Identify {
  std::optional<int> c;
  std::optional<int> a1;
  std::optional<int> a2;
};

/// Validation failure naming the offending gluing-table cell, e.g. "D1/a1".
class GlueError : public std::invalid_argument {
 public:
  GlueError(const std::string& cell, const std::string& what)
      : std::invalid_argument(cell + ": " + what), cell_(cell) {}
  const std::string& cell() const { return cell_; }

 private:
  std::string cell_;
};

struct GlueResult {
  Poset poset;
  std::vector<int> q_map;  ///< Q label -> label in the glued poset
  std::vector<int> s_map;  ///< S label -> label in the glued poset
};

/// Throws GlueError when (rule, identify) is not admissible for Q and S.
void validate_glue(const Poset& q, const BuildingBlock& s, Rule rule, const Identify& identify);

/// Q and S with identified vertices merged; fresh S elements get new labels
/// and the result is relabeled to the label convention.
GlueResult glue(const Poset& q, const BuildingBlock& s, Rule rule, const Identify& identify);

/// Every admissible identification for (Q, S, rule), in lexicographic order
/// of (c, a1, a2) targets.
std::vector<Identify> admissible_identifications(const Poset& q, const BuildingBlock& s, Rule rule);

}  // namespace lpa
