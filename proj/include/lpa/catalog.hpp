#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "lpa/forms.hpp"
#include "lpa/poset.hpp"

namespace lpa {

enum class BlockKind { Toral, ContactToral };

/// Extremal roles of a building block: c is the unique extremal element on
/// its side (the unique minimum of a two-element Ext), a1 and a2 the others.
struct Roles {
  int c = 0;
  int a1 = 0;
  std::optional<int> a2;
  bool c_minimal = true;  ///< c is minimal (the others maximal), or dually
};

/// Reference to a catalog entry, as it appears in construction scripts.
struct BlockRef {
  std::string id;
  std::optional<int> n;  ///< parameter of parametric families
  /// Optional explicit choice of which non-c extremal element plays a1
  /// (and a2); must be consistent with the block's extremal structure.
  std::optional<int> a1;
  std::optional<int> a2;

  std::string display() const;
};

struct BuildingBlock {
  BlockRef ref;
  Poset poset;
  OneForm form;
  BlockKind kind = BlockKind::Toral;
  Roles roles;
};

class CatalogError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct CatalogEntry {
  std::string id;
  BlockKind kind;
  bool parametric;
  int min_n;  ///< supported parameter range (parametric entries only)
  int max_n;
  std::string description;
};

/// Every catalog entry in a fixed order: the known toral blocks, the eight
/// six-element toral blocks, then the contact blocks.
const std::vector<CatalogEntry>& catalog();
const CatalogEntry& catalog_entry(const std::string& id);

/// Largest parameter accepted for the contact families unless a caller asks
/// for more.
inline constexpr int kDefaultFamilyMax = 14;

/// Instantiates a block. Throws CatalogError for an unknown id, a missing or
/// out-of-range parameter, or an inconsistent role override. `max_n`
/// overrides the upper parameter bound of contact families.
BuildingBlock make_block(const BlockRef& ref, std::optional<int> max_n = std::nullopt);

/// Roles derived from the extremal structure; throws CatalogError unless
/// |Ext| is 2 or 3 with a unique element on one side.
Roles default_roles(const Poset& p);

/// Poset of a catalog entry without building its form (cheap).
Poset catalog_poset(const std::string& id, std::optional<int> n);

}  // namespace lpa
