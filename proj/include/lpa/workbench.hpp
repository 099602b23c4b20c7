#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lpa/catalog.hpp"
#include "lpa/forms.hpp"
#include "lpa/io.hpp"
#include "lpa/script.hpp"

namespace lpa::workbench {

enum ExitCode { kOk = 0, kVerificationFailure = 1, kInputError = 2 };

/// Outcome of a command: a JSON report whose "log" array holds every
/// human-readable line, and the process exit code.
struct CommandResult {
  int exit_code = kOk;
  io::json report = io::json::object();

  void log(const std::string& line);
  const io::json& lines() const { return report["log"]; }
};

/// Largest poset for which analyze runs the spanning-tree form search.
inline constexpr int kSearchSizeLimit = 9;

CommandResult cmd_analyze(const Poset& p, const std::optional<OneForm>& phi, IndexOptions options = {});

struct CatalogOptions {
  int min_n = 5;  ///< parameter range for the contact families
  int max_n = kDefaultFamilyMax;
  bool known = false;  ///< also verify the known blocks and their families
};

/// The blocks verify-catalog checks, in catalog order.
std::vector<BuildingBlock> catalog_blocks(const CatalogOptions& options);
/// Runs each block through its pair verifier.
CommandResult verify_blocks(const std::vector<BuildingBlock>& blocks);
CommandResult cmd_verify_catalog(const CatalogOptions& options = {});

CommandResult cmd_build(const ConstructionScript& script, bool check_contact, IndexOptions options = {});

CommandResult cmd_glue(const Poset& q, const BlockRef& block, Rule rule, const Identify& identify,
                       IndexOptions options = {});

/// Connected posets with 1..n elements, one per isomorphism class, in order
/// of size. Intended for n <= 8.
std::vector<Poset> connected_posets(int n);

/// Every poset with at most max_n elements produced by a contact sequence
/// whose contact block may sit at any position, up to isomorphism.
std::vector<Poset> contact_reachable(int max_n);

/// Empirical sweep: enumerate connected posets up to max_n, flag the
/// contact ones (by sampled contact forms) and list those no contact
/// sequence produces. Throws std::invalid_argument for max_n > 8.
CommandResult cmd_sweep(int max_n, IndexOptions options = {});

}  // namespace lpa::workbench
