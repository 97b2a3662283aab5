// Seeded property tests: modules drawn by enumerate_small_modules over every
// builtin ring, checked against the brute-force reference and the suite.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "deltasup/structure.hpp"
#include "deltasup/suite.hpp"
#include "fixtures.hpp"

using namespace deltasup;

namespace {
constexpr std::uint64_t kSeeds = 6;

std::vector<CorpusEntry> generated_corpus(std::uint64_t seed) {
  std::vector<CorpusEntry> out;
  for (const auto& r : builtin_rings()) {
    CorpusEntry e{r, enumerate_small_modules(r, 32, seed, {}, 6), {"seed " + std::to_string(seed)}};
    out.push_back(std::move(e));
  }
  return out;
}
}  // namespace

TEST_CASE("generated modules: lattice and predicates match the reference") {
  for (std::uint64_t seed = 1; seed <= kSeeds; ++seed)
    for (const auto& e : generated_corpus(seed))
      for (const auto& m : e.modules) {
        CAPTURE(seed);
        CAPTURE(e.name());
        CAPTURE(m->name());
        const ModuleAnalysis a(m);
        const oracle::Reference ref(m);
        const auto& lat = a.lattice();
        std::set<oracle::Set> nodes;
        for (NodeId i = 0; i < lat.size(); ++i) nodes.insert(fx::as_set(lat, i));
        REQUIRE(nodes == ref.submodules());
        for (NodeId n : a.nodes(a.whole())) {
          const auto set = fx::as_set(lat, n);
          REQUIRE(a.is_small(n, a.whole()) == ref.small(set));
          REQUIRE(a.is_delta_small(n, a.whole()) == ref.delta_small(set));
          REQUIRE(a.is_essential(n, a.whole()) == ref.essential(set));
        }
        CHECK(fx::as_set(lat, a.radical(a.whole())) == ref.radical());
        CHECK(fx::as_set(lat, a.socle(a.whole())) == ref.socle());
        CHECK(fx::as_set(lat, a.delta(a.whole())) == ref.delta());
      }
}

TEST_CASE("generated corpora pass the theorem suite") {
  for (std::uint64_t seed = 1; seed <= kSeeds; ++seed) {
    CAPTURE(seed);
    const auto r = run_suite(generated_corpus(seed));
    for (const auto& c : r.checks) {
      CAPTURE(c.name);
      CHECK(c.failed == 0);
    }
  }
}

TEST_CASE("random generator sets: generate is idempotent and monotone") {
  std::mt19937_64 rng(42);
  for (const auto& m : fx::corpus_modules()) {
    if (m->size() < 2) continue;
    for (int trial = 0; trial < 8; ++trial) {
      std::vector<ElemId> gens;
      const auto count = 1 + rng() % 3;
      for (std::size_t i = 0; i < count; ++i) gens.push_back(static_cast<ElemId>(rng() % m->size()));
      const auto s = generate(m, gens);
      CHECK(generate(m, s.generators).members == s.members);
      CHECK(s.generators.size() <= gens.size());
      CHECK(s.members.members() == oracle::closure(*m, gens));
      auto more = gens;
      more.push_back(static_cast<ElemId>(rng() % m->size()));
      CHECK(s.members.is_subset_of(generate(m, more).members));
    }
  }
}

TEST_CASE("section modules have the expected size and lattice") {
  for (const auto& m : fx::corpus_modules()) {
    const SubmoduleLattice lat(m);
    for (NodeId lo = 0; lo < lat.size(); ++lo)
      for (NodeId hi : lat.upper_covers(lo)) {
        const auto sec = section_module(m, lat.members(hi), lat.members(lo), "sec");
        REQUIRE(sec.module->size() * lat.node_size(lo) == lat.node_size(hi));
        // A cover is a simple section.
        REQUIRE(SubmoduleLattice(sec.module).size() == 2);
      }
  }
}
