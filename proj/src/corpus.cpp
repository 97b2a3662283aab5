#include "deltasup/corpus.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <tuple>

#include "deltasup/lattice.hpp"

namespace deltasup {

namespace {

RingPtr cyclic_ring(std::int64_t n, const Bounds& bounds) {
  return RingTable::create({"Z" + std::to_string(n), {n}, {1}, {{{1}}}}, bounds);
}

std::string ideal_label(const SubmoduleLattice& lat, NodeId id) {
  const auto& node = lat.node(id);
  std::string s = "<";
  for (std::size_t i = 0; i < node.generators.size(); ++i) {
    if (i) s += ",";
    s += format_coeffs(lat.module()->decode(node.generators[i]));
  }
  return s + ">";
}

std::vector<ModulePtr> simple_classes(const SubmoduleLattice& lat, const Bounds& bounds) {
  const auto& regular = lat.module();
  std::vector<ModulePtr> out;
  for (NodeId k : lat.maximal_submodules()) {
    auto q = section_module(regular, lat.members(lat.top()), lat.members(k), "", bounds).module;
    const bool known = std::any_of(out.begin(), out.end(),
                                   [&](const ModulePtr& s) { return cyclic_modules_isomorphic(*s, *q); });
    if (!known)
      out.push_back(ModuleRep::create(regular->ring(), q->spec_with_name("S" + std::to_string(out.size() + 1)),
                                      bounds));
  }
  return out;
}

}  // namespace

std::vector<RingPtr> builtin_rings(const Bounds& bounds) {
  std::vector<RingPtr> rings;
  for (std::int64_t n : {2, 3, 4, 6, 8, 9, 12, 16}) rings.push_back(cyclic_ring(n, bounds));
  rings.push_back(RingTable::create(
      {"F2xF2", {2, 2}, {1, 1}, {{{1, 0}, {0, 0}}, {{0, 0}, {0, 1}}}}, bounds));
  rings.push_back(RingTable::create(
      {"Z4xF2", {4, 2}, {1, 1}, {{{1, 0}, {0, 0}}, {{0, 0}, {0, 1}}}}, bounds));
  // Basis e11, e12, e22 of upper-triangular 2x2 matrices over F2.
  rings.push_back(RingTable::create({"UT2(F2)",
                                     {2, 2, 2},
                                     {1, 0, 1},
                                     {{{1, 0, 0}, {0, 1, 0}, {0, 0, 0}},
                                      {{0, 0, 0}, {0, 0, 0}, {0, 1, 0}},
                                      {{0, 0, 0}, {0, 0, 0}, {0, 0, 1}}}},
                                    bounds));
  // Basis 1, x with x^2 = 0.
  rings.push_back(RingTable::create(
      {"F2[x]/(x^2)", {2, 2}, {1, 0}, {{{1, 0}, {0, 1}}, {{0, 1}, {0, 0}}}}, bounds));
  return rings;
}

std::vector<ModulePtr> simple_modules(const RingPtr& ring, const Bounds& bounds) {
  const SubmoduleLattice lat(regular_module(ring, bounds), bounds);
  return simple_classes(lat, bounds);
}

std::vector<CorpusEntry> builtin_corpus(const CorpusOptions& options) {
  const Bounds& bounds = options.bounds;
  std::vector<CorpusEntry> corpus;
  for (const auto& ring : builtin_rings(bounds)) {
    CorpusEntry entry;
    entry.ring = ring;
    entry.tags.push_back("builtin");
    const auto regular = regular_module(ring, bounds);
    entry.modules.push_back(regular);

    const SubmoduleLattice lat(regular, bounds);
    for (NodeId i = 1; i < lat.size(); ++i) {
      auto q = section_module(regular, lat.members(lat.top()), lat.members(i),
                              "R/" + ideal_label(lat, i), bounds);
      entry.modules.push_back(q.module);
    }

    const auto simples = simple_classes(lat, bounds);
    for (const auto& s : simples) {
      const auto& gen = s->spec();
      entry.tags.push_back(s->name() + ": simple of order " + std::to_string(s->size()) +
                           " with additive orders " + format_coeffs(gen.additive_orders));
    }
    for (std::size_t i = 0; i < simples.size(); ++i)
      for (std::size_t j = i; j < simples.size(); ++j)
        entry.modules.push_back(
            direct_sum(simples[i], simples[j], simples[i]->name() + "(+)" + simples[j]->name(), bounds).module);
    for (const auto& s : simples)
      if (regular->size() * s->size() <= 64)
        entry.modules.push_back(direct_sum(regular, s, "R(+)" + s->name(), bounds).module);

    if (options.generated_per_ring > 0) {
      auto gen = enumerate_small_modules(ring, options.generated_size_bound, options.seed, bounds,
                                         options.generated_per_ring + 1);
      std::size_t added = 0;
      for (const auto& g : gen) {
        if (g->name() == "R") continue;
        if (added++ >= options.generated_per_ring) break;
        entry.modules.push_back(g);
      }
    }
    corpus.push_back(std::move(entry));
  }
  return corpus;
}

ModuleSpec canonical_tables(const ModuleSpec& spec) {
  const std::size_t l = spec.additive_orders.size();
  ModuleSpec best = spec;
  if (l > 7) return best;
  std::vector<std::size_t> perm(l);
  std::iota(perm.begin(), perm.end(), 0);
  const auto key = [](const ModuleSpec& s) { return std::tie(s.additive_orders, s.actions); };
  do {
    ModuleSpec p = spec;
    for (std::size_t a = 0; a < l; ++a) {
      p.additive_orders[a] = spec.additive_orders[perm[a]];
      for (std::size_t i = 0; i < spec.actions.size(); ++i)
        for (std::size_t b = 0; b < l; ++b) p.actions[i][a][b] = spec.actions[i][perm[a]][perm[b]];
    }
    if (key(p) < key(best)) best = std::move(p);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

std::vector<ModulePtr> enumerate_small_modules(const RingPtr& ring, std::size_t size_bound,
                                               std::uint64_t seed, const Bounds& bounds,
                                               std::size_t max_count) {
  std::vector<ModulePtr> out;
  std::set<std::pair<std::vector<std::int64_t>, std::vector<std::vector<std::vector<std::int64_t>>>>> seen;
  const auto admit = [&](const ModulePtr& m) {
    const auto c = canonical_tables(m->spec());
    if (!seen.emplace(c.additive_orders, c.actions).second) return;
    out.push_back(m);
  };

  const auto regular = regular_module(ring, bounds);
  if (ring->size() <= size_bound) admit(regular);

  std::vector<ModulePtr> free_modules{regular};
  if (ring->size() * ring->size() <= std::min<std::size_t>(bounds.max_module_size, 4096))
    free_modules.push_back(direct_sum(regular, regular, "R^2", bounds).module);

  std::mt19937_64 engine(seed);
  const auto draw = [&](std::uint64_t n) { return engine() % n; };
  std::size_t generated = 0;
  for (std::size_t attempt = 0; attempt < 32 * max_count && out.size() < max_count; ++attempt) {
    const auto& free = free_modules[draw(free_modules.size())];
    const std::size_t gen_count = draw(3);
    std::vector<ElemId> gens;
    for (std::size_t g = 0; g < gen_count; ++g) gens.push_back(static_cast<ElemId>(draw(free->size())));
    const Submodule n = generate(free, gens);
    const bool take_quotient = draw(2) == 0;
    const std::size_t size = take_quotient ? free->size() / n.size() : n.size();
    if (size <= 1 || size > size_bound) continue;
    ElementSet zero(free->size());
    zero.insert(0);
    const std::string name = "G" + std::to_string(generated + 1);
    auto sec = take_quotient ? section_module(free, ElementSet::full(free->size()), n.members, name, bounds)
                             : section_module(free, n.members, zero, name, bounds);
    const std::size_t before = out.size();
    admit(sec.module);
    if (out.size() > before) ++generated;
  }
  return out;
}

}  // namespace deltasup
