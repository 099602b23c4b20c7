#include "lpa/checks.hpp"

namespace lpa {

bool ext_hasse_has_cycle(const Poset& p) {
  const ExtremalData ext = extremal_data(p);
  const Poset sub = induced_subposet(p, ext.ext);
  // A graph has a cycle iff |E| > |V| - (number of components).
  const auto edges = covering_relations(sub).size();
  const auto comps = connected_components(sub).size();
  return edges + comps > static_cast<std::size_t>(sub.size());
}

bool disconnected_contact_check(const Poset& p, IndexOptions options) {
  const auto comps = connected_components(p);
  if (comps.size() < 2) throw PreconditionError("poset is connected");
  if (comps.size() != 2) return false;
  for (const auto& c : comps) {
    const Poset sub = induced_subposet(p, std::set<int>(c.begin(), c.end()));
    if (index(build_gA(sub), options) != 0) return false;
  }
  return true;
}

IndexDelta index_delta_check(const Poset& q, const BuildingBlock& s, Rule rule, const Identify& identify,
                             IndexOptions options) {
  const GlueResult g = glue(q, s, rule, identify);
  IndexDelta d;
  d.index_q = static_cast<long>(index(build_gA(q), options));
  d.index_s = static_cast<long>(index(build_gA(s.poset), options));
  d.index_p = static_cast<long>(index(build_gA(g.poset), options));
  d.expected = d.index_s + rule_row(rule).index_offset;
  d.computed = d.index_p - d.index_q;
  return d;
}

}  // namespace lpa
