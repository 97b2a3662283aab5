#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "deltasup/predicates.hpp"
#include "fixtures.hpp"

using namespace deltasup;

TEST_CASE("essential") {
  const ModuleAnalysis z4(regular_module(fx::ring("Z4")));
  CHECK(z4.is_essential(z4.lattice().top(), z4.whole()));
  CHECK(z4.is_essential(fx::node_of(z4.lattice(), {{2}}), z4.whole()));
  const ModuleAnalysis f(regular_module(fx::ring("F2xF2")));
  CHECK(!f.is_essential(fx::node_of(f.lattice(), {{1, 0}}), f.whole()));
}

TEST_CASE("small") {
  const ModuleAnalysis z4(regular_module(fx::ring("Z4")));
  CHECK(z4.is_small(0, z4.whole()));
  CHECK(z4.is_small(fx::node_of(z4.lattice(), {{2}}), z4.whole()));
  const ModuleAnalysis f(regular_module(fx::ring("F2xF2")));
  CHECK(!f.is_small(fx::node_of(f.lattice(), {{1, 0}}), f.whole()));
}

TEST_CASE("singular") {
  const auto zero = ModuleRep::create(fx::ring("Z4"), {"0", {}, {{}}});
  CHECK(is_singular(ModuleAnalysis(zero)));
  CHECK(is_singular(ModuleAnalysis(ModuleRep::create(fx::ring("Z4"), {"Z2", {2}, {{{1}}}}))));
  CHECK(!is_singular(ModuleAnalysis(fx::z4xf2_simple(false))));
  CHECK(is_singular(ModuleAnalysis(fx::z4xf2_simple(true))));
  const ModuleAnalysis z4(regular_module(fx::ring("Z4")));
  CHECK(singular_submodule(z4).size() == 2);
}

TEST_CASE("delta-small") {
  const ModuleAnalysis f(regular_module(fx::ring("F2xF2")));
  CHECK(f.is_delta_small(f.lattice().top(), f.whole()));
  const ModuleAnalysis z4(regular_module(fx::ring("Z4")));
  CHECK(z4.is_delta_small(fx::node_of(z4.lattice(), {{2}}), z4.whole()));
}

TEST_CASE("delta-small witnesses") {
  const ModuleAnalysis f(regular_module(fx::ring("F2xF2")));
  const auto& lat = f.lattice();
  const auto w0 = f.delta_small_witness(0, f.whole());
  CHECK(w0.confirmed);
  REQUIRE(w0.complements.size() == 1);
  CHECK(w0.complements[0] == std::pair<NodeId, NodeId>{lat.top(), 0});

  const auto w = delta_small_witness(lat.node(lat.top()), f);
  CHECK(w.confirmed);
  const NodeId s1 = fx::node_of(lat, {{1, 0}}), s2 = fx::node_of(lat, {{0, 1}});
  bool found = false;
  for (const auto& [x, y] : w.complements)
    if (x == s1) found = y == s2;
  CHECK(found);

  const ModuleAnalysis z4(regular_module(fx::ring("Z4")));
  const auto wz = z4.delta_small_witness(fx::node_of(z4.lattice(), {{2}}), z4.whole());
  CHECK(wz.confirmed);
  REQUIRE(wz.complements.size() == 1);
  CHECK(wz.complements[0] == std::pair<NodeId, NodeId>{z4.lattice().top(), 0});
}

TEST_CASE("fundamental submodules") {
  SUBCASE("nonsingular simple: delta(S) = S") {
    const ModuleAnalysis s(fx::z4xf2_simple(false));
    CHECK(s.delta(s.whole()) == s.lattice().top());
    CHECK(s.radical(s.whole()) == 0);
  }
  SUBCASE("S (+) S' over Z4xF2: delta = S") {
    const auto d = direct_sum(fx::z4xf2_simple(false), fx::z4xf2_simple(true), "S+S'");
    const ModuleAnalysis a(d.module);
    const NodeId delta = a.delta(a.whole());
    CHECK(a.lattice().members(delta) == generate(d.module, d.embed_left).members);
  }
  SUBCASE("F2xF2: Rad = 0, delta = R") {
    const ModuleAnalysis f(regular_module(fx::ring("F2xF2")));
    CHECK(f.radical(f.whole()) == 0);
    CHECK(f.delta(f.whole()) == f.lattice().top());
  }
  SUBCASE("Z/4: Rad = delta = (2)") {
    const ModuleAnalysis z4(regular_module(fx::ring("Z4")));
    const NodeId two = fx::node_of(z4.lattice(), {{2}});
    CHECK(z4.radical(z4.whole()) == two);
    CHECK(z4.delta(z4.whole()) == two);
    CHECK(z4.socle(z4.whole()) == two);
  }
}

TEST_CASE("projective semisimple") {
  const ModuleAnalysis f(regular_module(fx::ring("F2xF2")));
  CHECK(is_projective_semisimple(f.lattice().node(0), f));
  CHECK(is_projective_semisimple(f.lattice().node(fx::node_of(f.lattice(), {{1, 0}})), f));
  const ModuleAnalysis z4(regular_module(fx::ring("Z4")));
  CHECK(!is_projective_semisimple(z4.lattice().node(fx::node_of(z4.lattice(), {{2}})), z4));
}

TEST_CASE("coclosed") {
  const ModuleAnalysis z4(regular_module(fx::ring("Z4")));
  CHECK(z4.is_coclosed(z4.lattice().top(), z4.whole()));
  CHECK(!z4.is_coclosed(fx::node_of(z4.lattice(), {{2}}), z4.whole()));
  CHECK(z4.is_delta_coclosed(0, z4.whole()));
  // Direct summands are coclosed.
  for (const auto& m : fx::corpus_modules()) {
    const ModuleAnalysis a(m);
    for (NodeId x : a.nodes(a.whole()))
      for (NodeId y : a.nodes(a.whole()))
        if (a.is_direct_sum(x, y, a.whole())) REQUIRE(a.is_coclosed(x, a.whole()));
  }
}

TEST_CASE("is_projective") {
  const ModuleAnalysis z4(regular_module(fx::ring("Z4")));
  CHECK(is_projective(z4, 1));
  CHECK_THROWS_AS(is_projective(z4, 0), PreconditionViolation);
  const ModuleAnalysis z2(ModuleRep::create(fx::ring("Z4"), {"Z2", {2}, {{{1}}}}));
  CHECK(!is_projective(z2, 1));
  const ModuleAnalysis s1(fx::module_of("F2xF2", "R/<[0,1]>"));
  CHECK(is_projective(s1, 1));
  Bounds tiny;
  tiny.max_hom_candidates = 1;
  const ModuleAnalysis big(fx::module_of("Z4", "R(+)S1"), tiny);
  CHECK_THROWS_AS(is_projective(big, 2), SearchBoundExceeded);
}

TEST_CASE("predicates agree with the brute-force reference on every corpus module") {
  for (const auto& m : fx::corpus_modules()) {
    CAPTURE(m->ring()->name());
    CAPTURE(m->name());
    const ModuleAnalysis a(m);
    const oracle::Reference ref(m);
    const auto& lat = a.lattice();
    const Section s = a.whole();
    for (NodeId n : a.nodes(s)) {
      const auto set = fx::as_set(lat, n);
      REQUIRE(a.is_small(n, s) == ref.small(set));
      REQUIRE(a.is_delta_small(n, s) == ref.delta_small(set));
      REQUIRE(a.is_essential(n, s) == ref.essential(set));
      REQUIRE(a.is_singular(a.over(n)) == ref.singular(set, ref.whole()));
      REQUIRE(a.is_singular(a.sub(n)) == ref.singular(ref.zero(), set));
      REQUIRE(a.is_delta_small(n, s) == a.delta_small_witness(n, s).confirmed);
    }
    const auto f = a.fundamental(s);
    CHECK(fx::as_set(lat, f.rad) == ref.radical());
    CHECK(fx::as_set(lat, f.soc) == ref.socle());
    CHECK(fx::as_set(lat, f.delta) == ref.delta());
    CHECK(lat.leq(f.rad, f.delta));
  }
}

TEST_CASE("predicates on an interval [X, M] match the explicit quotient M/X") {
  for (const auto& m : fx::corpus_modules()) {
    if (m->size() > 32) continue;
    CAPTURE(m->ring()->name());
    CAPTURE(m->name());
    const ModuleAnalysis a(m);
    const auto& lat = a.lattice();
    for (NodeId x = 0; x < lat.size(); ++x) {
      CAPTURE(x);
      const auto q = quotient_module(lat.node(x));
      const ModuleAnalysis qa(q.module);
      const auto& qlat = qa.lattice();
      const Section s = a.over(x), qs = qa.whole();
      const auto interval = a.nodes(s);
      REQUIRE(interval.size() == qlat.size());
      const auto image = [&](NodeId n) {
        ElementSet img(q.module->size());
        for (ElemId e : lat.members(n).members()) img.insert(q.projection[e]);
        const auto id = qlat.find(img);
        REQUIRE(id.has_value());
        return *id;
      };
      REQUIRE(a.is_singular(s) == qa.is_singular(qs));
      const auto f = a.fundamental(s), qf = qa.fundamental(qs);
      CHECK(image(f.rad) == qf.rad);
      CHECK(image(f.soc) == qf.soc);
      CHECK(image(f.delta) == qf.delta);
      for (NodeId n : interval) {
        const NodeId qn = image(n);
        REQUIRE(a.is_small(n, s) == qa.is_small(qn, qs));
        REQUIRE(a.is_delta_small(n, s) == qa.is_delta_small(qn, qs));
        REQUIRE(a.is_essential(n, s) == qa.is_essential(qn, qs));
        REQUIRE(a.is_coclosed(n, s) == qa.is_coclosed(qn, qs));
        REQUIRE(a.is_delta_coclosed(n, s) == qa.is_delta_coclosed(qn, qs));
      }
    }
  }
}

TEST_CASE("projective semisimple dichotomy agrees with the split-surjection search") {
  for (const auto& m : fx::corpus_modules()) {
    const ModuleAnalysis a(m);
    if (!a.is_semisimple(a.whole())) continue;
    CAPTURE(m->name());
    const auto gens = minimal_generators(a.lattice()).generators.size();
    CHECK(a.is_projective_semisimple(a.whole()) == is_projective(a, gens));
  }
}

TEST_CASE("fault injection flips exactly one predicate") {
  const auto m = regular_module(fx::ring("Z4"));
  const ModuleAnalysis clean(m), faulty(m, {}, Fault::invert_small);
  for (NodeId n : clean.nodes(clean.whole())) {
    CHECK(clean.is_small(n, clean.whole()) != faulty.is_small(n, faulty.whole()));
    CHECK(clean.is_essential(n, clean.whole()) == faulty.is_essential(n, faulty.whole()));
  }
  for (Fault f : all_faults()) CHECK(parse_fault(fault_name(f)) == f);
  CHECK(!parse_fault("invert-everything"));
}
