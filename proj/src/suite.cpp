#include "deltasup/suite.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <future>
#include <initializer_list>
#include <sstream>

#include "deltasup/structure.hpp"

namespace deltasup {

namespace {

class Recorder {
 public:
  Recorder(const ModuleAnalysis& a, std::string instance, std::size_t cap)
      : a_(a), instance_(std::move(instance)), cap_(cap) {}

  void pair() {
    applicable_ = true;
    ++pairs_;
  }

  void expect(bool ok, const std::string& detail,
              std::initializer_list<std::pair<const char*, NodeId>> subs = {}) {
    if (ok) return;
    failed_ = true;
    if (witnesses_.size() >= cap_) return;
    Witness w{instance_, a_.module()->name(), {}, detail};
    for (const auto& [role, id] : subs) {
      std::vector<Coeffs> gens;
      for (ElemId g : a_.lattice().node(id).generators) gens.push_back(a_.module()->decode(g));
      w.submodules.emplace_back(role, std::move(gens));
    }
    witnesses_.push_back(std::move(w));
  }

  bool applicable() const { return applicable_; }
  bool failed() const { return failed_; }
  std::size_t pairs() const { return pairs_; }
  std::vector<Witness>& witnesses() { return witnesses_; }

 private:
  const ModuleAnalysis& a_;
  std::string instance_;
  std::size_t cap_;
  bool applicable_ = false;
  bool failed_ = false;
  std::size_t pairs_ = 0;
  std::vector<Witness> witnesses_;
};

using CheckFn = std::function<void(const ModuleAnalysis&, Recorder&)>;

struct CheckDef {
  CheckInfo info;
  CheckFn run;
};

bool contains(const std::vector<NodeId>& v, NodeId n) {
  return std::find(v.begin(), v.end(), n) != v.end();
}

std::vector<NodeId> witnesses_of(const std::vector<SupplementCertificate>& certs) {
  std::vector<NodeId> out;
  for (const auto& c : certs) out.push_back(c.witness);
  std::sort(out.begin(), out.end());
  return out;
}

/// Every submodule H regarded as a module: the sections [0, H].
std::vector<Section> submodule_sections(const ModuleAnalysis& a) {
  std::vector<Section> out;
  for (NodeId h = 0; h < a.lattice().size(); ++h) out.push_back(a.sub(h));
  return out;
}

bool has_delta_supplement_partner(const ModuleAnalysis& a, NodeId n, Section s) {
  for (NodeId k : a.nodes(s))
    if (is_delta_supplement_of(a, n, k, s)) return true;
  return false;
}

// ---------------------------------------------------------------------------
// Module-level checks

void zhou_l12(const ModuleAnalysis& a, Recorder& r) {
  const auto& lat = a.lattice();
  for (Section s : submodule_sections(a)) {
    for (NodeId n : a.nodes(s)) {
      r.pair();
      const bool definitional = a.is_delta_small(n, s);
      const auto w = a.delta_small_witness(n, s);
      r.expect(definitional == w.confirmed,
               definitional ? "delta-small by definition but some X has no projective semisimple complement"
                            : "not delta-small by definition but every X has a complement",
               {{"N", n}, {"M", s.top}, {"X", w.counterexample.value_or(s.top)}});
      for (const auto& [x, y] : w.complements) {
        const bool ok = lat.leq(y, n) && lat.sums_to(x, n, s.top) && a.is_direct_sum(x, y, s) &&
                        a.is_projective_semisimple({s.bottom, y});
        r.expect(ok, "complement Y fails M = X (+) Y with Y <= N projective semisimple",
                 {{"N", n}, {"M", s.top}, {"X", x}, {"Y", y}});
      }
    }
  }
}

void rad_eq(const ModuleAnalysis& a, Recorder& r) {
  for (Section s : submodule_sections(a)) {
    r.pair();
    const auto d = a.radical_routes(s);
    r.expect(d.agree(), "intersection of maximals != sum of smalls",
             {{"M", s.top}, {"by_maximals", d.first}, {"by_smalls", d.second}});
  }
}

void soc_eq(const ModuleAnalysis& a, Recorder& r) {
  for (Section s : submodule_sections(a)) {
    r.pair();
    const auto d = a.socle_routes(s);
    r.expect(d.agree(), "sum of minimals != intersection of essentials",
             {{"M", s.top}, {"by_minimals", d.first}, {"by_essentials", d.second}});
  }
}

void delta_eq(const ModuleAnalysis& a, Recorder& r) {
  const auto& lat = a.lattice();
  for (Section s : submodule_sections(a)) {
    r.pair();
    const auto d = a.delta_routes(s);
    r.expect(d.agree(), "reject of singular simples != sum of delta-smalls",
             {{"M", s.top}, {"reject", d.first}, {"by_delta_smalls", d.second}});
    r.expect(lat.leq(a.radical(s), a.delta(s)), "Rad not contained in delta", {{"M", s.top}});
  }
}

void remark_essmax(const ModuleAnalysis& a, Recorder& r) {
  const Section s = a.whole();
  for (NodeId k : a.maximal(s)) {
    if (!a.is_essential(k, s)) continue;
    r.pair();
    r.expect(a.is_singular({k, s.top}), "essential maximal K with nonsingular M/K", {{"K", k}});
    r.expect(a.lattice().leq(a.delta(s), k), "essential maximal K not containing delta(M)", {{"K", k}});
  }
}

void lem_2_3(const ModuleAnalysis& a, Recorder& r) {
  const Section s = a.whole();
  for (NodeId k : a.nodes(s))
    for (const auto& c : find_delta_supplements(a, k, s, SupplementKind::delta_supplement)) {
      r.pair();
      r.expect(a.is_delta_coclosed(c.witness, s), "delta-supplement N of K is not delta-coclosed",
               {{"K", k}, {"N", c.witness}});
    }
}

void prop_2_5_1(const ModuleAnalysis& a, Recorder& r) {
  const auto& lat = a.lattice();
  const Section s = a.whole();
  const NodeId dm = a.delta(s);
  for (NodeId n : a.nodes(s)) {
    if (!a.is_delta_coclosed(n, s)) continue;
    r.pair();
    for (NodeId k : lat.interval(s.bottom, n))
      if (a.is_delta_small(k, s))
        r.expect(a.is_delta_small(k, a.sub(n)), "K delta-small in M but not in delta-coclosed N",
                 {{"N", n}, {"K", k}});
    r.expect(a.delta(a.sub(n)) == lat.meet(n, dm), "delta(N) != N meet delta(M)", {{"N", n}});
  }
}

void prop_2_5_2(const ModuleAnalysis& a, Recorder& r) {
  const auto& lat = a.lattice();
  const Section s = a.whole();
  for (NodeId n : a.nodes(s)) {
    if (!a.is_delta_coclosed(n, s)) continue;
    for (NodeId x : lat.interval(s.bottom, n)) {
      if (x == n || !a.is_delta_small(n, {x, s.top})) continue;
      r.pair();
      bool split = false;
      for (NodeId x2 : lat.interval(s.bottom, n))
        if (a.is_direct_sum(x, x2, a.sub(n))) {
          split = true;
          break;
        }
      r.expect(split, "N/X delta-small in M/X but X is not a summand of N", {{"N", n}, {"X", x}});
    }
  }
}

void prop_2_5_3(const ModuleAnalysis& a, Recorder& r) {
  const Section s = a.whole();
  for (NodeId n : a.nodes(s)) {
    if (!a.is_delta_coclosed(n, s) || !a.is_singular(a.sub(n))) continue;
    r.pair();
    r.expect(a.is_coclosed(n, s), "singular delta-coclosed N is not coclosed", {{"N", n}});
  }
}

void cor_2_6(const ModuleAnalysis& a, Recorder& r) {
  const auto& lat = a.lattice();
  const Section s = a.whole();
  const NodeId dm = a.delta(s);
  for (NodeId n : a.nodes(s)) {
    if (!has_delta_supplement_partner(a, n, s)) continue;
    r.pair();
    r.expect(a.delta(a.sub(n)) == lat.meet(n, dm), "delta-supplement N with delta(N) != N meet delta(M)",
             {{"N", n}});
  }
}

void cor_2_7_chain(const ModuleAnalysis& a, Recorder& r) {
  const auto& lat = a.lattice();
  const Section s = a.whole();
  for (NodeId n : a.nodes(s)) {
    r.pair();
    const bool is_dsupp = has_delta_supplement_partner(a, n, s);
    const bool coclosed = a.is_delta_coclosed(n, s);
    bool hereditary = true;
    for (NodeId x : lat.interval(s.bottom, n))
      if (a.is_delta_small(x, s) && !a.is_delta_small(x, a.sub(n))) {
        hereditary = false;
        break;
      }
    bool has_weak = false;
    for (NodeId k : a.nodes(s))
      if (lat.sums_to(n, k, s.top) && a.is_delta_small(lat.meet(n, k), s)) {
        has_weak = true;
        break;
      }
    r.expect(!is_dsupp || coclosed, "delta-supplement that is not delta-coclosed", {{"N", n}});
    r.expect(!coclosed || hereditary, "delta-coclosed N without the hereditary delta-small property",
             {{"N", n}});
    r.expect(!(hereditary && has_weak) || is_dsupp,
             "hereditary N with a weak delta-supplement is not a delta-supplement", {{"N", n}});
  }
}

void lem_3_3(const ModuleAnalysis& a, Recorder& r) {
  const auto& lat = a.lattice();
  const Section s = a.whole();
  for (NodeId h : a.nodes(s)) {
    if (!classify_module(a, a.sub(h)).local) continue;
    for (NodeId k : a.nodes(s)) {
      if (k == s.top || !lat.sums_to(h, k, s.top)) continue;
      r.pair();
      const auto scan = scan_supplements(a, k, s);
      r.expect(contains(scan.minimal, h) && contains(scan.small_intersection, h),
               "local H with H + K = M is not a supplement of K", {{"H", h}, {"K", k}});
    }
  }
}

void lem_3_4(const ModuleAnalysis& a, Recorder& r) {
  for (Section s : submodule_sections(a)) {
    if (!classify_module(a, s).delta_local) continue;
    r.pair();
    r.expect(is_delta_supplemented(a, s), "delta-local module is not delta-supplemented", {{"M", s.top}});
  }
}

void lem_3_6(const ModuleAnalysis& a, Recorder& r) {
  const auto& lat = a.lattice();
  const Section s = a.whole();
  const NodeId soc = a.socle(s);
  for (NodeId k : a.maximal(s)) {
    if (!lat.leq(soc, k)) continue;
    for (const auto& c : find_delta_supplements(a, k, s, SupplementKind::delta_supplement)) {
      r.pair();
      const NodeId l = c.witness;
      r.expect(classify_module(a, a.sub(l)).delta_local,
               "delta-supplement L of maximal K >= Soc(M) is not delta-local", {{"K", k}, {"L", l}});
      r.expect(a.delta(a.sub(l)) == lat.meet(k, l), "delta(L) != K meet L", {{"K", k}, {"L", l}});
    }
  }
}

void prop_3_7_equiv(const ModuleAnalysis& a, Recorder& r) {
  const auto& lat = a.lattice();
  for (Section s : submodule_sections(a)) {
    r.pair();
    const bool one = is_delta_supplemented(a, s);
    const bool two = every_maximal_has_delta_supplement(a, s);
    const auto d = try_decompose_simple_delta_local(a, s);
    r.expect(one == two && two == d.has_value(), "the three characterisations disagree", {{"M", s.top}});
    if (!d) continue;
    r.expect(a.sum(s.bottom, d->parts) == s.top, "decomposition parts do not sum to M", {{"M", s.top}});
    r.expect(lat.join(a.socle(s), d->lambda) == s.top, "Soc(M) + Lambda(M) != M",
             {{"M", s.top}, {"Lambda", d->lambda}});
    for (std::size_t i = 0; i < d->parts.size(); ++i) {
      const Section part{s.bottom, d->parts[i]};
      const bool ok = d->labels[i] == PartLabel::simple ? a.is_simple(part)
                                                        : classify_module(a, part).delta_local;
      r.expect(ok, "decomposition part fails its label", {{"M", s.top}, {"part", d->parts[i]}});
    }
  }
}

void lem_4_1(const ModuleAnalysis& a, Recorder& r) {
  const Section s = a.whole();
  if (!is_delta_supplemented(a, s)) return;
  r.pair();
  const auto rep = semilocal_via_socle(a, s);
  const auto f = a.fundamental(s);
  r.expect(rep.equivalence_holds, "semilocal and X(M) finitely generated disagree");
  r.expect(rep.semilocal == a.is_semisimple({f.rad, s.top}), "semilocal flag differs from M/Rad(M) test");
  const ModuleAnalysis x(rep.x_module, a.bounds());
  r.expect(x.is_semisimple(x.whole()), "X(M) is not semisimple");
  r.expect(x.composition_length(x.whole()) == rep.x_length,
           "length of X(M) differs between section and standalone module");
  if (rep.x_length == 0)
    r.expect(rep.rad_equals_delta.value_or(false), "Soc(M) <= Rad(M) but Rad(M) != delta(M)",
             {{"Rad", f.rad}, {"delta", f.delta}});
}

void prop_4_2(const ModuleAnalysis& a, Recorder& r) {
  const auto& lat = a.lattice();
  const Section s = a.whole();
  const auto f = a.fundamental(s);
  if (!a.is_semisimple({f.rad, s.top}) || !a.is_small(f.rad, s) || !is_delta_supplemented(a, s)) return;
  bool projective = false;
  try {
    projective = is_projective(a, minimal_generators(lat).generators.size());
  } catch (const SearchBoundExceeded&) {
    return;
  }
  if (!projective) return;
  r.pair();
  r.expect(is_delta_lifting(a, s), "projective delta-supplemented module is not delta-lifting");
  r.expect(is_supplemented(a, s), "premises hold but the module is not supplemented");

  // Soc(M) = D (+) (Soc(M) ∩ Rad(M)), then M = D (+) N.
  const NodeId soc_rad = lat.meet(f.soc, f.rad);
  std::optional<NodeId> d, n;
  for (NodeId c : lat.interval(s.bottom, f.soc))
    if (a.is_direct_sum(c, soc_rad, a.sub(f.soc)) && (!d || lat.members(c).lex_less(lat.members(*d)))) d = c;
  r.expect(d.has_value(), "Soc(M) ∩ Rad(M) has no complement in Soc(M)");
  if (!d) return;
  for (NodeId c : a.nodes(s))
    if (a.is_direct_sum(*d, c, s) && (!n || lat.members(c).lex_less(lat.members(*n)))) n = c;
  r.expect(n.has_value(), "D is not a direct summand of M", {{"D", *d}});
  if (!n) return;
  const Section ns = a.sub(*n);
  const NodeId rad_n = a.radical(ns);
  r.expect(rad_n == f.rad, "Rad(N) != Rad(M)", {{"D", *d}, {"N", *n}});
  r.expect(lat.leq(a.socle(ns), rad_n), "Soc(N) not inside Rad(N)", {{"D", *d}, {"N", *n}});
  r.expect(a.delta(ns) == rad_n, "Rad(N) != delta(N)", {{"D", *d}, {"N", *n}});
  r.expect(is_delta_lifting(a, ns), "N is not delta-lifting", {{"D", *d}, {"N", *n}});
  r.expect(is_supplemented(a, ns), "N is not supplemented", {{"D", *d}, {"N", *n}});
}

void lem_4_4_algo(const ModuleAnalysis& a, Recorder& r) {
  const auto& lat = a.lattice();
  const Section s = a.whole();
  const std::size_t socle_length = a.composition_length(a.sub(a.socle(s)));
  for (NodeId k : a.maximal(s)) {
    const auto sups = witnesses_of(find_supplements(a, k, s));
    for (const auto& c : find_delta_supplements(a, k, s, SupplementKind::delta_supplement)) {
      r.pair();
      const NodeId h = c.witness;
      const auto res = extract_supplement(a, h, k, s);
      const NodeId l = res.certificate.witness;
      r.expect(res.iteration_bound == socle_length && res.iterations <= res.iteration_bound,
               "descent exceeded the socle length", {{"K", k}, {"H", h}});
      r.expect(lat.leq(l, h), "extracted supplement not inside H", {{"K", k}, {"H", h}, {"L", l}});
      r.expect(contains(sups, l) && res.certificate.sum_is_whole && res.certificate.intersection_condition,
               "extracted submodule is not in the exhaustive supplement list", {{"K", k}, {"H", h}, {"L", l}});
    }
  }
}

void cor_4_5(const ModuleAnalysis& a, Recorder& r) {
  for (Section s : submodule_sections(a)) {
    r.pair();
    r.expect(is_supplemented(a, s) == is_delta_supplemented(a, s),
             "supplemented and delta-supplemented disagree", {{"M", s.top}});
  }
}

void cor_4_6(const ModuleAnalysis& a, Recorder& r) {
  const auto& lat = a.lattice();
  const Section s = a.whole();
  const NodeId soc = a.socle(s);
  for (NodeId k : a.maximal(s)) {
    r.pair();
    const auto sups = witnesses_of(find_supplements(a, k, s));
    if (!lat.leq(soc, k)) {
      r.expect(lat.join(k, soc) == s.top, "maximal K with K + Soc(M) != M", {{"K", k}});
      bool found = false;
      for (NodeId atom : a.minimal(s))
        if (lat.leq(atom, soc) && a.is_direct_sum(k, atom, s) && contains(sups, atom)) found = true;
      r.expect(found, "no simple supplement S with K (+) S = M", {{"K", k}});
    } else if (!find_delta_supplements(a, k, s, SupplementKind::delta_supplement).empty()) {
      r.expect(!sups.empty(), "maximal K >= Soc(M) with a delta-supplement but no supplement", {{"K", k}});
    }
  }
  // Every submodule of a finite module is cofinite, so the cofinite variants
  // quantify over the same set as the plain ones.
  r.expect(is_supplemented(a, s) == is_delta_supplemented(a, s),
           "cofinitely supplemented and cofinitely delta-supplemented disagree");
}

void small_dsmall(const ModuleAnalysis& a, Recorder& r) {
  const Section s = a.whole();
  for (NodeId n : a.nodes(s)) {
    if (!a.is_small(n, s)) continue;
    r.pair();
    r.expect(a.is_delta_small(n, s), "small but not delta-small", {{"N", n}});
  }
}

void proj_dichotomy(const ModuleAnalysis& a, Recorder& r) {
  const Section s = a.whole();
  for (NodeId atom : a.minimal(s)) {
    r.pair();
    const auto sm = submodule_as_module(a.lattice().node(atom), a.bounds());
    const ModuleAnalysis sa(sm.module, a.bounds());
    bool projective = false;
    try {
      projective = is_projective(sa, minimal_generators(sa.lattice()).generators.size());
    } catch (const SearchBoundExceeded&) {
      continue;
    }
    r.expect(a.is_projective_semisimple(a.sub(atom)) == projective,
             "nonsingular-simple test disagrees with the split-surjection search", {{"S", atom}});
  }
}

void dsupp_weak(const ModuleAnalysis& a, Recorder& r) {
  const Section s = a.whole();
  for (NodeId k : a.nodes(s)) {
    r.pair();
    const auto sup = witnesses_of(find_supplements(a, k, s));
    const auto del = witnesses_of(find_delta_supplements(a, k, s, SupplementKind::delta_supplement));
    const auto weak = witnesses_of(find_delta_supplements(a, k, s, SupplementKind::weak_delta_supplement));
    r.expect(std::includes(del.begin(), del.end(), sup.begin(), sup.end()),
             "a supplement of K is not a delta-supplement", {{"K", k}});
    r.expect(std::includes(weak.begin(), weak.end(), del.begin(), del.end()),
             "a delta-supplement of K is not a weak delta-supplement", {{"K", k}});
  }
}

void essential_cyclic(const ModuleAnalysis& a, Recorder& r) {
  for (Section s : submodule_sections(a))
    for (NodeId n : a.nodes(s)) {
      r.pair();
      r.expect(a.is_essential(n, s) == a.is_essential_via_cyclics(n, s),
               "essential over all submodules != essential over cyclic submodules", {{"M", s.top}, {"N", n}});
    }
}

void lattice_modular(const ModuleAnalysis& a, Recorder& r) {
  const auto& lat = a.lattice();
  const NodeId size = static_cast<NodeId>(lat.size());
  for (NodeId x = 0; x < size; ++x)
    for (NodeId z = 0; z < size; ++z) {
      if (!lat.leq(x, z)) continue;
      for (NodeId y = 0; y < size; ++y) {
        r.pair();
        r.expect(lat.join(x, lat.meet(y, z)) == lat.meet(lat.join(x, y), z), "modular law fails",
                 {{"A", x}, {"B", y}, {"C", z}});
      }
    }
}

// ---------------------------------------------------------------------------
// Ring-level check

void cor_4_3(const ModuleAnalysis& a, Recorder& r) {
  r.pair();
  const auto c = ring_classification(a);
  r.expect(c.corollary_consistent, "semiperfect differs from delta-semiperfect and semilocal");
  const auto rep = semilocal_via_socle(a, a.whole());
  // X(R) of finite length is always finitely generated.
  r.expect(c.semiperfect == (c.delta_semiperfect && rep.equivalence_holds && rep.semilocal),
           "semiperfect differs from delta-semiperfect with S/(S ∩ J) finitely generated");
}

const std::vector<CheckDef>& registry() {
  static const std::vector<CheckDef> checks = [] {
    std::vector<CheckDef> v{
        {{"ZHOU-L12", "delta-small iff every X with X + N = M has a projective semisimple complement inside N"},
         zhou_l12},
        {{"RAD-EQ", "intersection of maximal submodules equals the sum of small submodules"}, rad_eq},
        {{"SOC-EQ", "sum of minimal submodules equals the intersection of essential submodules"}, soc_eq},
        {{"DELTA-EQ", "reject of the singular simples equals the sum of delta-small submodules"}, delta_eq},
        {{"REMARK-ESSMAX", "an essential maximal K has singular quotient and contains delta(M)"}, remark_essmax},
        {{"LEM-2.3", "a delta-supplement is delta-coclosed"}, lem_2_3},
        {{"PROP-2.5-1", "inside a delta-coclosed N, delta-small in M implies delta-small in N; delta(N) = N meet delta(M)"},
         prop_2_5_1},
        {{"PROP-2.5-2", "N/X delta-small in M/X for delta-coclosed N makes X a direct summand of N"}, prop_2_5_2},
        {{"PROP-2.5-3", "a singular delta-coclosed submodule is coclosed"}, prop_2_5_3},
        {{"COR-2.6", "a delta-supplement N satisfies delta(N) = N meet delta(M)"}, cor_2_6},
        {{"COR-2.7-CHAIN", "delta-supplement, delta-coclosed, hereditary delta-smallness, closed by a weak delta-supplement"},
         cor_2_7_chain},
        {{"LEM-3.3", "a local submodule H is a supplement of every proper K with H + K = M"}, lem_3_3},
        {{"LEM-3.4", "a delta-local module is delta-supplemented"}, lem_3_4},
        {{"LEM-3.6", "a delta-supplement of a maximal K containing the socle is delta-local"}, lem_3_6},
        {{"PROP-3.7-EQUIV", "delta-supplemented iff every maximal has a delta-supplement iff a sum of simple and delta-local parts"},
         prop_3_7_equiv},
        {{"LEM-4.1", "a delta-supplemented module is semilocal iff Soc/(Soc meet Rad) is finitely generated"}, lem_4_1},
        {{"PROP-4.2", "projective semilocal delta-supplemented with small radical implies supplemented"}, prop_4_2},
        {{"COR-4.3", "a ring is semiperfect iff delta-semiperfect and semilocal", true}, cor_4_3},
        {{"LEM-4.4-ALGO", "a delta-supplement H of a maximal K contains a supplement of K"}, lem_4_4_algo},
        {{"COR-4.5", "with finitely generated socle, supplemented iff delta-supplemented"}, cor_4_5},
        {{"COR-4.6-CONSISTENCY", "cofinitely supplemented iff cofinitely delta-supplemented", false, true}, cor_4_6},
        {{"SMALL-DSMALL", "small implies delta-small"}, small_dsmall},
        {{"PROJ-DICHOTOMY", "a simple module is projective iff nonsingular"}, proj_dichotomy},
        {{"DSUPP-WEAK", "supplement implies delta-supplement implies weak delta-supplement"}, dsupp_weak},
        {{"ESSENTIAL-CYCLIC", "essential iff meeting every nonzero cyclic submodule"}, essential_cyclic},
        {{"LATTICE-MODULAR", "the submodule lattice satisfies the modular law"}, lattice_modular},
    };
    std::sort(v.begin(), v.end(), [](const CheckDef& x, const CheckDef& y) { return x.info.name < y.info.name; });
    return v;
  }();
  return checks;
}

struct EntryOutcome {
  std::vector<CheckResult> results;
  std::vector<SkippedModule> skipped;
};

void run_check(const CheckDef& def, const ModuleAnalysis& a, const std::string& instance,
               std::size_t cap, CheckResult& out) {
  Recorder r(a, instance, cap);
  try {
    def.run(a, r);
  } catch (const std::exception& e) {
    r.expect(false, std::string("exception: ") + e.what());
  }
  ++out.instances_run;
  out.pairs_checked += r.pairs();
  if (r.failed())
    ++out.failed;
  else if (r.applicable())
    ++out.passed;
  else
    ++out.vacuous_count;
  for (auto& w : r.witnesses())
    if (out.witnesses.size() < cap) out.witnesses.push_back(std::move(w));
}

EntryOutcome run_entry(const CorpusEntry& entry, const SuiteConfig& config) {
  const auto& defs = registry();
  EntryOutcome out;
  for (const auto& d : defs) out.results.push_back({d.info.name, d.info.anchor, 0, 0, 0, 0, 0, d.info.vacuous_by_design, {}});

  for (const auto& m : entry.modules) {
    std::unique_ptr<ModuleAnalysis> a;
    try {
      a = std::make_unique<ModuleAnalysis>(m, config.bounds, config.fault);
    } catch (const Error& e) {
      out.skipped.push_back({entry.name(), m->name(), e.what()});
      continue;
    }
    for (std::size_t i = 0; i < defs.size(); ++i)
      if (!defs[i].info.ring_level) run_check(defs[i], *a, entry.name(), config.max_witnesses, out.results[i]);
  }

  std::unique_ptr<ModuleAnalysis> regular;
  try {
    regular = std::make_unique<ModuleAnalysis>(regular_module(entry.ring, config.bounds), config.bounds, config.fault);
  } catch (const Error& e) {
    out.skipped.push_back({entry.name(), "R (ring-level)", e.what()});
  }
  if (regular)
    for (std::size_t i = 0; i < defs.size(); ++i)
      if (defs[i].info.ring_level) run_check(defs[i], *regular, entry.name(), config.max_witnesses, out.results[i]);
  return out;
}

nlohmann::json witness_to_json(const Witness& w) {
  nlohmann::json subs = nlohmann::json::array();
  for (const auto& [role, gens] : w.submodules) subs.push_back({{"role", role}, {"generators", gens}});
  return {{"instance", w.instance}, {"module", w.module}, {"submodules", subs}, {"detail", w.detail}};
}

}  // namespace

bool SuiteReport::all_passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.failed == 0; });
}

const CheckResult* SuiteReport::find(const std::string& name) const {
  for (const auto& c : checks)
    if (c.name == name) return &c;
  return nullptr;
}

std::vector<CheckInfo> suite_checks() {
  std::vector<CheckInfo> out;
  for (const auto& d : registry()) out.push_back(d.info);
  return out;
}

SuiteReport run_suite(const std::vector<CorpusEntry>& corpus, const SuiteConfig& config) {
  const auto start = std::chrono::steady_clock::now();
  std::vector<EntryOutcome> outcomes;
  if (config.parallel) {
    std::vector<std::future<EntryOutcome>> futures;
    for (const auto& e : corpus)
      futures.push_back(std::async(std::launch::async, [&e, &config] { return run_entry(e, config); }));
    for (auto& f : futures) outcomes.push_back(f.get());
  } else {
    for (const auto& e : corpus) outcomes.push_back(run_entry(e, config));
  }

  SuiteReport report;
  report.config = config;
  for (const auto& d : registry())
    report.checks.push_back({d.info.name, d.info.anchor, 0, 0, 0, 0, 0, d.info.vacuous_by_design, {}});
  for (auto& o : outcomes) {
    for (std::size_t i = 0; i < report.checks.size(); ++i) {
      auto& dst = report.checks[i];
      auto& src = o.results[i];
      dst.instances_run += src.instances_run;
      dst.passed += src.passed;
      dst.failed += src.failed;
      dst.vacuous_count += src.vacuous_count;
      dst.pairs_checked += src.pairs_checked;
      for (auto& w : src.witnesses)
        if (dst.witnesses.size() < config.max_witnesses) dst.witnesses.push_back(std::move(w));
    }
    for (auto& s : o.skipped) report.skipped.push_back(std::move(s));
  }
  report.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

nlohmann::json report_to_json(const SuiteReport& report) {
  nlohmann::json checks = nlohmann::json::array();
  for (const auto& c : report.checks) {
    nlohmann::json w = nlohmann::json::array();
    for (const auto& x : c.witnesses) w.push_back(witness_to_json(x));
    checks.push_back({{"name", c.name},
                      {"anchor", c.anchor},
                      {"instances_run", c.instances_run},
                      {"passed", c.passed},
                      {"failed", c.failed},
                      {"vacuous_count", c.vacuous_count},
                      {"vacuous_by_design", c.vacuous_by_design},
                      {"pairs_checked", c.pairs_checked},
                      {"witnesses", w}});
  }
  nlohmann::json skipped = nlohmann::json::array();
  for (const auto& s : report.skipped)
    skipped.push_back({{"instance", s.instance}, {"module", s.module}, {"reason", s.reason}});
  const auto& b = report.config.bounds;
  return {{"config",
           {{"max_ring_size", b.max_ring_size},
            {"max_module_size", b.max_module_size},
            {"max_lattice_nodes", b.max_lattice_nodes},
            {"max_hom_candidates", b.max_hom_candidates},
            {"seed", report.config.seed},
            {"fault", std::string(fault_name(report.config.fault))}}},
          {"wall_time", report.wall_time},
          {"all_passed", report.all_passed()},
          {"checks", checks},
          {"skipped", skipped}};
}

std::string report_to_text(const SuiteReport& report) {
  std::ostringstream os;
  for (const auto& c : report.checks) {
    const char* status = c.failed ? "FAIL" : (c.passed == 0 ? "VACUOUS" : "PASS");
    os << status << "  " << c.name << "  instances=" << c.instances_run << " passed=" << c.passed
       << " failed=" << c.failed << " vacuous=" << c.vacuous_count << " pairs=" << c.pairs_checked;
    if (c.vacuous_by_design) os << " (vacuous by design)";
    os << "\n      " << c.anchor << "\n";
    for (const auto& w : c.witnesses) {
      os << "      witness: " << w.instance << " / " << w.module << ": " << w.detail;
      for (const auto& [role, gens] : w.submodules) {
        os << "  " << role << "=<";
        for (std::size_t i = 0; i < gens.size(); ++i) os << (i ? "," : "") << format_coeffs(gens[i]);
        os << ">";
      }
      os << "\n";
    }
  }
  for (const auto& s : report.skipped)
    os << "SKIPPED  " << s.instance << " / " << s.module << ": " << s.reason << "\n";
  os << (report.all_passed() ? "all checks passed" : "some checks failed") << " in " << report.wall_time
     << " s (seed " << report.config.seed << ", fault " << fault_name(report.config.fault) << ")\n";
  return os.str();
}

}  // namespace deltasup
