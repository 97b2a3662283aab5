#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <filesystem>

#include "deltasup/instance_io.hpp"
#include "deltasup/structure.hpp"
#include "fixtures.hpp"

using namespace deltasup;

TEST_CASE("builtin ring list") {
  std::vector<std::string> names;
  for (const auto& r : builtin_rings()) names.push_back(r->name());
  for (const char* n : {"Z2", "Z3", "Z4", "Z6", "Z8", "Z9", "Z12", "Z16", "F2xF2", "Z4xF2", "UT2(F2)", "F2[x]/(x^2)"})
    CHECK(std::find(names.begin(), names.end(), n) != names.end());
}

TEST_CASE("each entry holds R, all quotients of R and all sums of two simples") {
  for (const auto& e : builtin_corpus()) {
    CAPTURE(e.name());
    const auto reg = regular_module(e.ring);
    const SubmoduleLattice lat(reg);
    REQUIRE(e.modules.front()->name() == "R");
    std::size_t quotients = 0, pairs = 0;
    for (const auto& m : e.modules) {
      if (m->name().rfind("R/", 0) == 0) ++quotients;
      if (m->name().find("(+)") != std::string::npos && m->name()[0] == 'S') ++pairs;
    }
    CHECK(quotients == lat.size() - 1);
    const auto k = simple_modules(e.ring).size();
    CHECK(pairs == k * (k + 1) / 2);
  }
}

TEST_CASE("Z4xF2 has a singular and a nonsingular simple") {
  const auto sims = simple_modules(fx::ring("Z4xF2"));
  REQUIRE(sims.size() == 2);
  const ModuleAnalysis a(sims[0]), b(sims[1]);
  CHECK(a.is_singular(a.whole()) != b.is_singular(b.whole()));
}

TEST_CASE("over F2xF2 delta(M) = M for every corpus module") {
  for (const auto& e : builtin_corpus())
    if (e.name() == "F2xF2")
      for (const auto& m : e.modules) {
        const ModuleAnalysis a(m);
        CHECK(a.delta(a.whole()) == a.lattice().top());
      }
}

TEST_CASE("coverage of separating instances") {
  bool singular_simple = false, nonsingular_simple = false, local_not_semisimple = false,
       delta_local_not_local = false, delta_ne_rad = false;
  for (const auto& m : fx::corpus_modules()) {
    const ModuleAnalysis a(m);
    const auto c = classify_module(a, a.whole());
    if (a.is_simple(a.whole())) (c.singular ? singular_simple : nonsingular_simple) = true;
    if (c.local && !c.semisimple) local_not_semisimple = true;
    if (c.delta_local && !c.local) delta_local_not_local = true;
    if (a.delta(a.whole()) != a.radical(a.whole())) delta_ne_rad = true;
  }
  CHECK(singular_simple);
  CHECK(nonsingular_simple);
  CHECK(local_not_semisimple);
  CHECK(delta_local_not_local);
  CHECK(delta_ne_rad);
}

TEST_CASE("corpus is deterministic and round-trips") {
  const auto a = builtin_corpus(), b = builtin_corpus();
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    const auto text = serialize_entry(a[i]);
    CHECK(text == serialize_entry(b[i]));
    const auto back = load_instance_text(text);
    CHECK(*back.ring == *a[i].ring);
    REQUIRE(back.modules.size() == a[i].modules.size());
    for (std::size_t j = 0; j < back.modules.size(); ++j) {
      CHECK(back.modules[j]->name() == a[i].modules[j]->name());
      CHECK(back.modules[j]->spec().actions == a[i].modules[j]->spec().actions);
      CHECK(back.modules[j]->spec().additive_orders == a[i].modules[j]->spec().additive_orders);
    }
    CHECK(serialize_entry(back) == text);
  }
}

TEST_CASE("malformed text reports a byte position") {
  const std::string text = "{\"ring\": {\"name\": \"Z2\", \"additive_orders\": [2,, }";
  try {
    load_instance_text(text);
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.position() > 0);
    CHECK(e.position() <= text.size());
  }
}

TEST_CASE("unknown fields and bad references are rejected") {
  CHECK_THROWS_AS(load_instance_text(R"({"ring": {"name": "Z2", "additive_orders": [2], "one": [1],
                                              "mul": [[[1]]], "colour": "red"}})"),
                  ParseError);
  CHECK_THROWS_AS(load_instance_text(R"({"ring": {"name": "Z2", "additive_orders": [2], "one": [1], "mul": [[[1]]]},
                                        "modules": [{"name": "M", "ring": "Z3", "additive_orders": [2],
                                                     "actions": [[[1]]]}]})"),
                  ParseError);
  CHECK_THROWS_AS(load_instance_text(R"({"modules": []})"), ParseError);
}

TEST_CASE("non-associative ring file names the failing triple") {
  const auto text = R"({"ring": {"name": "bad", "additive_orders": [2, 2, 2], "one": [1, 0, 0],
     "mul": [[[1,0,0],[0,1,0],[0,0,1]], [[0,1,0],[0,0,1],[0,0,0]], [[0,0,1],[0,1,0],[0,0,0]]]}})";
  try {
    load_instance_text(text);
    FAIL("expected AxiomViolation");
  } catch (const AxiomViolation& e) {
    CHECK(e.axiom() == "associativity");
    CHECK(e.witness().size() == 3);
  }
}

TEST_CASE("ring-only instance holds the regular module; inline rings are accepted") {
  const auto e = load_instance_text(R"({"ring": {"name": "Z4", "additive_orders": [4], "one": [1], "mul": [[[1]]]}})");
  REQUIRE(e.modules.size() == 1);
  CHECK(e.modules[0]->size() == 4);
  const auto f = load_instance_text(R"({"modules": [{"name": "Z2", "additive_orders": [2], "actions": [[[1]]],
      "ring": {"name": "Z4", "additive_orders": [4], "one": [1], "mul": [[[1]]]}}]})");
  CHECK(f.name() == "Z4");
  CHECK(f.modules[0]->size() == 2);
}

TEST_CASE("size bounds apply to files") {
  Bounds b;
  b.max_module_size = 2;
  CHECK_THROWS_AS(load_instance_text(R"({"ring": {"name": "Z4", "additive_orders": [4], "one": [1], "mul": [[[1]]]}})", b),
                  SizeBoundExceeded);
}

TEST_CASE("instance files in tests/data") {
  const std::filesystem::path dir = DELTASUP_TEST_DATA;
  CHECK(load_instance(dir / "z4xf2.json").modules.size() == 3);
  CHECK_THROWS_AS(load_instance(dir / "nonassoc.json"), AxiomViolation);
  CHECK_THROWS_AS(load_instance(dir / "malformed.json"), ParseError);
}

TEST_CASE("enumerate_small_modules") {
  for (const auto& r : builtin_rings()) {
    CAPTURE(r->name());
    const auto a = enumerate_small_modules(r, r->size(), 7);
    REQUIRE(!a.empty());
    CHECK(a.front()->name() == "R");
    const auto b = enumerate_small_modules(r, r->size(), 7);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) CHECK(a[i]->spec().actions == b[i]->spec().actions);
    for (const auto& m : enumerate_small_modules(r, 32, 11)) {
      CHECK(m->size() <= 32);
      CHECK(m->exhaustively_validated());
    }
  }
}

TEST_CASE("canonical tables identify coordinate permutations") {
  const auto r = fx::ring("Z4");
  const ModuleSpec a{"a", {4, 2}, {{{1, 0}, {0, 1}}}};
  const ModuleSpec b{"b", {2, 4}, {{{1, 0}, {0, 1}}}};
  CHECK(canonical_tables(a).additive_orders == canonical_tables(b).additive_orders);
  CHECK(canonical_tables(a).actions == canonical_tables(b).actions);
}
