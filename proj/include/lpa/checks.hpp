#pragma once

#include <stdexcept>

#include "lpa/catalog.hpp"
#include "lpa/forms.hpp"
#include "lpa/gluing.hpp"
#include "lpa/poset.hpp"

namespace lpa {

/// True when the Hasse diagram of the subposet induced on Ext(P) contains
/// an undirected cycle; such posets are never contact.
bool ext_hasse_has_cycle(const Poset& p);

class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// For a disconnected poset: exactly two components, each with Frobenius
/// g_A. Throws PreconditionError on connected input.
bool disconnected_contact_check(const Poset& p, IndexOptions options = {});

struct IndexDelta {
  long expected = 0;  ///< ind(g_A(S)) plus the rule's offset
  long computed = 0;  ///< ind(g_A(P)) - ind(g_A(Q)), sampled
  long index_q = 0;
  long index_s = 0;
  long index_p = 0;
};

IndexDelta index_delta_check(const Poset& q, const BuildingBlock& s, Rule rule, const Identify& identify,
                             IndexOptions options = {});

}  // namespace lpa
