#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "deltasup/structure.hpp"
#include "fixtures.hpp"

using namespace deltasup;

namespace {
std::vector<NodeId> witnesses(const std::vector<SupplementCertificate>& certs) {
  std::vector<NodeId> out;
  for (const auto& c : certs) out.push_back(c.witness);
  return out;
}
bool has(const std::vector<NodeId>& v, NodeId n) { return std::find(v.begin(), v.end(), n) != v.end(); }
}  // namespace

TEST_CASE("find_supplements on small cases") {
  const ModuleAnalysis f(regular_module(fx::ring("F2xF2")));
  const auto& lat = f.lattice();
  const Section s = f.whole();
  CHECK(witnesses(find_supplements(f, 0, s)) == std::vector<NodeId>{lat.top()});
  CHECK(witnesses(find_supplements(f, lat.top(), s)) == std::vector<NodeId>{0});
  const NodeId s1 = fx::node_of(lat, {{1, 0}}), s2 = fx::node_of(lat, {{0, 1}});
  CHECK(has(witnesses(find_supplements(f, s1, s)), s2));
  // R is a δ-supplement of S1 but not a supplement.
  CHECK(has(witnesses(find_delta_supplements(f, s1, s, SupplementKind::delta_supplement)), lat.top()));
  CHECK(!has(witnesses(find_supplements(f, s1, s)), lat.top()));
}

TEST_CASE("supplement kinds are nested on every corpus module") {
  for (const auto& m : fx::corpus_modules()) {
    const ModuleAnalysis a(m);
    const Section s = a.whole();
    for (NodeId k : a.nodes(s)) {
      const auto sup = witnesses(find_supplements(a, k, s));
      const auto del = witnesses(find_delta_supplements(a, k, s, SupplementKind::delta_supplement));
      const auto weak = witnesses(find_delta_supplements(a, k, s, SupplementKind::weak_delta_supplement));
      for (NodeId l : sup) REQUIRE(has(del, l));
      for (NodeId l : del) REQUIRE(has(weak, l));
      const auto scan = scan_supplements(a, k, s);
      REQUIRE(scan.minimal == scan.small_intersection);
    }
  }
}

TEST_CASE("classification of simple modules") {
  const ModuleAnalysis s(fx::z4xf2_simple(false));
  const auto cs = classify_module(s, s.whole());
  CHECK(cs.local);
  CHECK(!cs.delta_local);
  const ModuleAnalysis z2(ModuleRep::create(fx::ring("Z4"), {"Z2", {2}, {{{1}}}}));
  CHECK(classify_module(z2, z2.whole()).delta_local);
  CHECK(classify_module(z2, z2.whole()).singular);
}

TEST_CASE("S (+) S' over Z4xF2 is delta-local and not local") {
  const auto d = direct_sum(fx::z4xf2_simple(false), fx::z4xf2_simple(true), "S+S'");
  CHECK(d.module->size() == 4);
  const ModuleAnalysis a(d.module);
  const auto c = classify_module(a, a.whole());
  CHECK(!c.local);
  CHECK(c.delta_local);
  const auto maxs = a.maximal(a.whole());
  CHECK(has(maxs, a.delta(a.whole())));
  CHECK(is_delta_supplemented(a, a.whole()));
  const auto dec = decompose_simple_delta_local(a, a.whole());
  CHECK(a.sum(0, dec.parts) == a.lattice().top());
}

TEST_CASE("supplemented and delta-supplemented over the corpus") {
  for (const auto& m : fx::corpus_modules()) {
    const ModuleAnalysis a(m);
    CAPTURE(m->name());
    CHECK(is_supplemented(a, a.whole()));
    CHECK(is_delta_supplemented(a, a.whole()));
    if (classify_module(a, a.whole()).delta_local) CHECK(is_delta_supplemented(a, a.whole()));
  }
}

TEST_CASE("delta-lifting") {
  const ModuleAnalysis z4(regular_module(fx::ring("Z4")));
  CHECK(is_delta_lifting(z4, z4.whole()));
  const auto dl = delta_lifting_decomposition(z4, fx::node_of(z4.lattice(), {{2}}), z4.whole());
  REQUIRE(dl);
  CHECK(dl->first == 0);
  CHECK(dl->second == z4.lattice().top());
  for (const auto& m : fx::corpus_modules()) {
    const ModuleAnalysis a(m);
    if (a.is_semisimple(a.whole())) CHECK(is_delta_lifting(a, a.whole()));
  }
}

TEST_CASE("extract_supplement") {
  SUBCASE("delta(H) = H branch over F2xF2") {
    const ModuleAnalysis f(regular_module(fx::ring("F2xF2")));
    const auto& lat = f.lattice();
    const NodeId s1 = fx::node_of(lat, {{1, 0}}), s2 = fx::node_of(lat, {{0, 1}});
    const auto r = extract_supplement(f, lat.top(), s1, f.whole());
    CHECK(r.semisimple_branch);
    CHECK(r.certificate.witness == s2);
    CHECK(r.certificate.intersection_condition);
  }
  SUBCASE("H already a supplement is returned at step 0") {
    const ModuleAnalysis z4(regular_module(fx::ring("Z4")));
    const NodeId k = fx::node_of(z4.lattice(), {{2}});
    const auto r = extract_supplement(z4, z4.lattice().top(), k, z4.whole());
    CHECK(r.iterations == 0);
    CHECK(r.certificate.witness == z4.lattice().top());
  }
  SUBCASE("preconditions") {
    const ModuleAnalysis z4(regular_module(fx::ring("Z4")));
    CHECK_THROWS_AS(extract_supplement(z4, z4.lattice().top(), 0, z4.whole()), PreconditionViolation);
    const NodeId k = fx::node_of(z4.lattice(), {{2}});
    CHECK_THROWS_AS(extract_supplement(z4, 0, k, z4.whole()), PreconditionViolation);
  }
  SUBCASE("every corpus output appears in the supplement list and lies in H") {
    for (const auto& m : fx::corpus_modules()) {
      const ModuleAnalysis a(m);
      const Section s = a.whole();
      for (NodeId k : a.maximal(s)) {
        const auto sups = witnesses(find_supplements(a, k, s));
        for (const auto& c : find_delta_supplements(a, k, s, SupplementKind::delta_supplement)) {
          const auto r = extract_supplement(a, c.witness, k, s);
          REQUIRE(has(sups, r.certificate.witness));
          REQUIRE(a.lattice().leq(r.certificate.witness, c.witness));
          REQUIRE(r.iterations <= r.iteration_bound);
        }
      }
    }
  }
}

TEST_CASE("a descent step is actually exercised somewhere in the corpus") {
  std::size_t longest = 0;
  for (const auto& m : fx::corpus_modules()) {
    const ModuleAnalysis a(m);
    const Section s = a.whole();
    for (NodeId k : a.maximal(s))
      for (const auto& c : find_delta_supplements(a, k, s, SupplementKind::delta_supplement))
        longest = std::max(longest, extract_supplement(a, c.witness, k, s).iterations);
  }
  CHECK(longest >= 1);
}

TEST_CASE("decompositions") {
  SUBCASE("semisimple: all parts simple") {
    const ModuleAnalysis f(regular_module(fx::ring("F2xF2")));
    const auto d = decompose_simple_delta_local(f, f.whole());
    for (auto l : d.labels) CHECK(l == PartLabel::simple);
  }
  SUBCASE("Z/4: one delta-local part") {
    const ModuleAnalysis z4(regular_module(fx::ring("Z4")));
    const auto d = decompose_simple_delta_local(z4, z4.whole());
    REQUIRE(d.parts.size() == 1);
    CHECK(d.labels[0] == PartLabel::delta_local);
    CHECK(d.parts[0] == z4.lattice().top());
  }
}

TEST_CASE("semilocal via socle") {
  SUBCASE("F2xF2: X = M of length 2") {
    const ModuleAnalysis f(regular_module(fx::ring("F2xF2")));
    const auto r = semilocal_via_socle(f, f.whole());
    CHECK(r.semilocal);
    CHECK(r.x_length == 2);
    CHECK(r.x_module->size() == 4);
    CHECK(!r.rad_equals_delta);
  }
  SUBCASE("zero module") {
    const ModuleAnalysis z(ModuleRep::create(fx::ring("Z4"), {"0", {}, {{}}}));
    const auto r = semilocal_via_socle(z, z.whole());
    CHECK(r.x_length == 0);
    CHECK(r.semilocal);
  }
  SUBCASE("all simples singular: X = 0 and Rad = delta") {
    const ModuleAnalysis z8(regular_module(fx::ring("Z8")));
    const auto r = semilocal_via_socle(z8, z8.whole());
    CHECK(r.x_length == 0);
    REQUIRE(r.rad_equals_delta);
    CHECK(*r.rad_equals_delta);
  }
}

TEST_CASE("ring classification") {
  for (const auto& r : builtin_rings()) {
    CAPTURE(r->name());
    const auto c = ring_classification(r);
    CHECK(c.semiperfect);
    CHECK(c.delta_semiperfect);
    CHECK(c.semilocal);
    CHECK(c.corollary_consistent);
  }
  const ModuleAnalysis z4(regular_module(fx::ring("Z4")));
  CHECK(z4.radical(z4.whole()) == z4.delta(z4.whole()));
}
