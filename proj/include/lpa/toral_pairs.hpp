#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lpa/forms.hpp"
#include "lpa/poset.hpp"

namespace lpa {

struct ConditionResult {
  std::string name;  ///< e.g. "P1", "F3", "CF2", "contact"
  bool passed = false;
  std::string detail;
};

/// Per-condition checklist produced by the pair verifiers.
struct PairReport {
  std::vector<ConditionResult> conditions;

  bool passed() const;
  /// Name of the first failing condition, or empty when all pass.
  std::string first_failure() const;
  const ConditionResult* find(const std::string& name) const;
};

/// Checks a candidate toral-pair: P1 (|Ext| is 2 or 3), P2 (binary
/// spectrum), F1 (small), F2 (U filter, D ideal, O empty), F3 (support
/// covers every relation between extremal elements), F4 (the g(P)-kernel is
/// spanned by the identity) and Frobenius-ness on g_A(P).
PairReport verify_toral_pair(const Poset& p, const OneForm& phi);

/// Checks a candidate contact toral-pair: CP1 (connected), CP2 (|Ext| is 2
/// or 3), CF1 (the only diagonal term is at element 1), CF2-CF4 (the F1-F3
/// analogues for phi - E*_{1,1}) and contactness on g_A(P).
PairReport verify_contact_toral_pair(const Poset& p, const OneForm& phi);

enum class SearchKind { Frobenius, Contact };

struct SearchOptions {
  /// Upper bound on visited partial supports; the search reports failure
  /// when exceeded.
  std::size_t node_limit = 2'000'000;
};

/// Lexicographically first spanning-tree support S (edges listed in
/// increasing order) for which phi_S (plus E*_{1,1} for SearchKind::Contact)
/// passes the corresponding pair verifier, skipping the spectrum condition
/// P2 which depends on the poset only. Empty when no such support exists or
/// the node limit is hit.
std::optional<OneForm> search_toral_form(const Poset& p, SearchKind kind, SearchOptions options = {});

}  // namespace lpa
