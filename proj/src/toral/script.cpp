#include "lpa/script.hpp"

#include <algorithm>
#include <random>

namespace lpa {

Assembly assemble(const ConstructionScript& script) {
  if (script.steps.empty()) throw ScriptError(0, "script has no steps");
  Assembly a;
  for (std::size_t i = 0; i < script.steps.size(); ++i) {
    const ScriptStep& step = script.steps[i];
    BuildingBlock block = [&] {
      try {
        return make_block(step.block);
      } catch (const CatalogError& e) {
        throw ScriptError(i, e.what());
      }
    }();
    if (block.kind == BlockKind::ContactToral) ++a.contact_blocks;
    if (i == 0) {
      if (step.rule) throw ScriptError(i, "the first step is a bare block and takes no rule");
      a.poset = block.poset;
      std::vector<int> id(static_cast<std::size_t>(block.poset.size() + 1));
      for (int v = 0; v <= block.poset.size(); ++v) id[v] = v;
      a.block_maps.push_back(id);
    } else {
      if (!step.rule) throw ScriptError(i, "missing gluing rule");
      GlueResult g = [&] {
        try {
          return glue(a.poset, block, *step.rule, step.identify);
        } catch (const GlueError& e) {
          throw ScriptError(i, e.what());
        }
      }();
      for (auto& m : a.block_maps)
        for (auto& v : m) v = v ? g.q_map[v] : 0;
      a.block_maps.push_back(g.s_map);
      a.poset = g.poset;
      a.glues.push_back(std::move(g));
    }
    a.blocks.push_back(std::move(block));
  }
  return a;
}

BuildResult run_script(const ConstructionScript& script) {
  BuildResult r;
  r.assembly = assemble(script);
  const Assembly& a = r.assembly;
  for (std::size_t i = 1; i < a.blocks.size(); ++i)
    if (a.blocks[i].kind == BlockKind::ContactToral)
      throw ScriptError(i, "the form builder requires the contact block to be the first block");

  OneForm form = a.blocks[0].form;
  {
    StepAudit s;
    s.block = a.blocks[0].ref.display();
    s.poset = a.blocks[0].poset;
    for (const auto& [pair, c] : form.terms()) s.added.push_back({pair, c});
    r.audit.push_back(std::move(s));
    r.prefix_forms.push_back(form);
  }
  for (std::size_t i = 1; i < a.blocks.size(); ++i) {
    const BuildingBlock& b = a.blocks[i];
    const GlueResult& g = a.glues[i - 1];
    const Rule rule = *script.steps[i].rule;
    StepAudit s;
    s.step = i;
    s.block = b.ref.display();
    s.rule = rule;
    s.poset = g.poset;
    s.q_map = g.q_map;
    s.s_map = g.s_map;
    s.within_recipe = is_contact_rule(rule);
    form = form.relabeled(g.q_map);
    const OneForm added = b.form.relabeled(g.s_map);
    for (const auto& [pair, c] : added.terms()) s.added.push_back({pair, c});
    form = form + added;
    auto subtract_edge = [&](int role) {
      int lo = g.s_map[b.roles.c], hi = g.s_map[role];
      if (lo > hi) std::swap(lo, hi);
      form.add({lo, hi}, -1);
      s.subtracted.push_back({{lo, hi}, Rational(1)});
    };
    if (rule == Rule::D1 || rule == Rule::F) subtract_edge(b.roles.a1);
    if (rule == Rule::D2 || rule == Rule::F) subtract_edge(*b.roles.a2);
    r.prefix_forms.push_back(form);
    r.audit.push_back(std::move(s));
  }
  r.form = form;
  r.contact_sequence = is_contact_sequence(script);
  return r;
}

bool is_contact_sequence(const ConstructionScript& script) {
  std::size_t contact = 0;
  for (std::size_t i = 0; i < script.steps.size(); ++i) {
    const auto& step = script.steps[i];
    if (catalog_entry(step.block.id).kind == BlockKind::ContactToral) ++contact;
    if (i > 0 && (!step.rule || !is_contact_rule(*step.rule))) return false;
  }
  return contact == 1;
}

ScriptValidation validate_script(const ConstructionScript& script) {
  ScriptValidation v;
  try {
    const Assembly a = assemble(script);
    v.valid = true;
    v.contact_blocks = a.contact_blocks;
    v.contact_block_first = !a.blocks.empty() && a.blocks[0].kind == BlockKind::ContactToral;
    v.contact_sequence = is_contact_sequence(script);
    v.message = v.contact_sequence
                    ? (v.contact_block_first ? "contact sequence (contact block first)"
                                             : "contact sequence (contact block not first)")
                    : "construction sequence";
  } catch (const std::exception& e) {
    v.message = e.what();
  }
  return v;
}

long index_formula(const Poset& p, const ConstructionScript& script) {
  const ExtremalData ext = extremal_data(p);
  long contact = 0;
  for (const auto& step : script.steps)
    if (catalog_entry(step.block.id).kind == BlockKind::ContactToral) ++contact;
  return static_cast<long>(ext.rel_e.size()) - static_cast<long>(ext.ext.size()) + contact + 1;
}

const std::vector<BlockRef>& random_toral_pool() {
  static const std::vector<BlockRef> pool = [] {
    std::vector<BlockRef> v;
    for (const char* id : {"known-a", "known-b", "known-c", "known-d", "known-e", "new-1", "new-1*", "new-2",
                           "new-2*", "new-3", "new-3*", "new-4", "new-4*"})
      v.push_back({id, std::nullopt, std::nullopt, std::nullopt});
    for (int n : {3, 4, 5, 6}) {
      v.push_back({"known-f", n, std::nullopt, std::nullopt});
      v.push_back({"known-g", n, std::nullopt, std::nullopt});
    }
    for (int n : {1, 2}) {
      v.push_back({"known-h", n, std::nullopt, std::nullopt});
      v.push_back({"known-i", n, std::nullopt, std::nullopt});
    }
    return v;
  }();
  return pool;
}

const std::vector<BlockRef>& random_contact_pool() {
  static const std::vector<BlockRef> pool = [] {
    std::vector<BlockRef> v;
    for (const char* id : {"contact-1", "contact-2", "contact-3", "contact-3*"})
      v.push_back({id, std::nullopt, std::nullopt, std::nullopt});
    for (const char* id : {"contact-4", "contact-4*", "contact-5", "contact-5*"})
      for (int n : {5, 6, 7}) v.push_back({id, n, std::nullopt, std::nullopt});
    return v;
  }();
  return pool;
}

namespace {

std::size_t ga_dim(const Poset& p) { return static_cast<std::size_t>(p.size() - 1) + p.relations().size(); }

/// Randomly permutes which non-c extremal element plays a1 when there are two.
BlockRef with_random_roles(const BlockRef& ref, const BuildingBlock& b, std::mt19937_64& rng) {
  BlockRef r = ref;
  if (b.roles.a2 && std::uniform_int_distribution<int>(0, 1)(rng) == 1) {
    r.a1 = *b.roles.a2;
    r.a2 = b.roles.a1;
  }
  return r;
}

}  // namespace

ConstructionScript random_toral_script(const RandomScriptOptions& opt) {
  std::mt19937_64 rng(opt.seed);
  auto pick = [&](std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng); };
  const auto& toral = random_toral_pool();
  const auto& contact = random_contact_pool();
  ConstructionScript script;
  const BlockRef first = opt.allow_contact ? contact[pick(contact.size())] : toral[pick(toral.size())];
  script.steps.push_back({first, std::nullopt, {}});
  Poset q = make_block(first).poset;
  constexpr int kAttempts = 40;
  while (script.steps.size() < opt.length) {
    bool placed = false;
    for (int attempt = 0; attempt < kAttempts && !placed; ++attempt) {
      const Rule rule = opt.rule_pool[pick(opt.rule_pool.size())];
      const BlockRef base = toral[pick(toral.size())];
      const BuildingBlock b0 = make_block(base);
      const BlockRef ref = with_random_roles(base, b0, rng);
      const BuildingBlock b = make_block(ref);
      const auto ids = admissible_identifications(q, b, rule);
      if (ids.empty()) continue;
      const Identify id = ids[pick(ids.size())];
      GlueResult g = glue(q, b, rule, id);
      if (ga_dim(g.poset) > opt.max_dim) continue;
      script.steps.push_back({ref, rule, id});
      q = g.poset;
      placed = true;
    }
    if (!placed) break;
  }
  return script;
}

}  // namespace lpa
