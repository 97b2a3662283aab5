#include "deltasup/structure.hpp"

#include <algorithm>

namespace deltasup {

namespace {

void sort_lex(const SubmoduleLattice& lat, std::vector<NodeId>& ids) {
  std::sort(ids.begin(), ids.end(),
            [&](NodeId a, NodeId b) { return lat.members(a).lex_less(lat.members(b)); });
}

}  // namespace

std::string_view kind_name(SupplementKind k) {
  switch (k) {
    case SupplementKind::supplement: return "supplement";
    case SupplementKind::delta_supplement: return "delta";
    case SupplementKind::weak_delta_supplement: return "weak";
  }
  return "unknown";
}

std::string_view label_name(PartLabel l) {
  return l == PartLabel::simple ? "simple" : "delta_local";
}

// ---------------------------------------------------------------------------
// Supplements

SupplementScan scan_supplements(const ModuleAnalysis& a, NodeId k, Section s) {
  const auto& lat = a.lattice();
  std::vector<NodeId> sums;
  for (NodeId l : a.nodes(s))
    if (lat.sums_to(k, l, s.top)) sums.push_back(l);
  SupplementScan out;
  for (NodeId l : sums) {
    bool minimal = true;
    for (NodeId l2 : sums)
      if (l2 != l && lat.leq(l2, l)) {
        minimal = false;
        break;
      }
    if (minimal) out.minimal.push_back(l);
    if (a.is_small(lat.meet(k, l), {s.bottom, l})) out.small_intersection.push_back(l);
  }
  return out;
}

std::vector<SupplementCertificate> find_supplements(const ModuleAnalysis& a, NodeId k, Section s) {
  const auto& lat = a.lattice();
  auto scan = scan_supplements(a, k, s);
  if (scan.minimal != scan.small_intersection)
    throw InternalInconsistency("supplement characterisations disagree for K = node " +
                                std::to_string(k));
  sort_lex(lat, scan.minimal);
  std::vector<SupplementCertificate> out;
  for (NodeId l : scan.minimal)
    out.push_back({SupplementKind::supplement, k, l, true, true, true});
  return out;
}

bool is_delta_supplement_of(const ModuleAnalysis& a, NodeId l, NodeId k, Section s) {
  const auto& lat = a.lattice();
  return lat.sums_to(k, l, s.top) && a.is_delta_small(lat.meet(k, l), {s.bottom, l});
}

std::vector<SupplementCertificate> find_delta_supplements(const ModuleAnalysis& a, NodeId k,
                                                          Section s, SupplementKind kind) {
  const auto& lat = a.lattice();
  std::vector<NodeId> found;
  for (NodeId l : a.nodes(s)) {
    if (!lat.sums_to(k, l, s.top)) continue;
    const NodeId inter = lat.meet(k, l);
    const bool cond = kind == SupplementKind::weak_delta_supplement
                          ? a.is_delta_small(inter, s)
                          : kind == SupplementKind::delta_supplement
                                ? a.is_delta_small(inter, {s.bottom, l})
                                : a.is_small(inter, {s.bottom, l});
    if (cond) found.push_back(l);
  }
  sort_lex(lat, found);
  std::vector<SupplementCertificate> out;
  for (NodeId l : found) out.push_back({kind, k, l, true, true, std::nullopt});
  return out;
}

// ---------------------------------------------------------------------------
// Classification

Classification classify_module(const ModuleAnalysis& a, Section s) {
  Classification c;
  const auto f = a.fundamental(s);
  const auto maxs = a.maximal(s);
  const auto is_max = [&](NodeId n) { return std::find(maxs.begin(), maxs.end(), n) != maxs.end(); };
  c.local = is_max(f.rad) && a.is_small(f.rad, s);
  c.delta_local = is_max(f.delta) && a.is_delta_small(f.delta, s);
  c.semilocal = a.is_semisimple({f.rad, s.top});
  c.semisimple = a.is_semisimple(s);
  c.singular = a.is_singular(s);
  return c;
}

bool is_supplemented(const ModuleAnalysis& a, Section s) {
  for (NodeId k : a.nodes(s))
    if (find_supplements(a, k, s).empty()) return false;
  return true;
}

bool is_delta_supplemented(const ModuleAnalysis& a, Section s) {
  for (NodeId k : a.nodes(s)) {
    bool found = false;
    for (NodeId l : a.nodes(s))
      if (is_delta_supplement_of(a, l, k, s)) {
        found = true;
        break;
      }
    if (!found) return false;
  }
  return true;
}

bool every_maximal_has_delta_supplement(const ModuleAnalysis& a, Section s) {
  for (NodeId k : a.maximal(s))
    if (find_delta_supplements(a, k, s, SupplementKind::delta_supplement).empty()) return false;
  return true;
}

std::optional<std::pair<NodeId, NodeId>> delta_lifting_decomposition(const ModuleAnalysis& a,
                                                                     NodeId n, Section s) {
  const auto& lat = a.lattice();
  for (NodeId d1 : lat.interval(s.bottom, n))
    for (NodeId d2 : a.nodes(s))
      if (a.is_direct_sum(d1, d2, s) && a.is_delta_small(lat.meet(n, d2), {s.bottom, d2}))
        return std::make_pair(d1, d2);
  return std::nullopt;
}

bool is_delta_lifting(const ModuleAnalysis& a, Section s) {
  for (NodeId n : a.nodes(s))
    if (!delta_lifting_decomposition(a, n, s)) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Supplement extraction by descent

ExtractionResult extract_supplement(const ModuleAnalysis& a, NodeId h, NodeId k, Section s) {
  const auto& lat = a.lattice();
  const auto maxs = a.maximal(s);
  if (std::find(maxs.begin(), maxs.end(), k) == maxs.end())
    throw PreconditionViolation("K is not a maximal submodule");
  if (!is_delta_supplement_of(a, h, k, s)) throw PreconditionViolation("H is not a delta-supplement of K");

  ExtractionResult out;
  out.iteration_bound = a.composition_length({s.bottom, a.socle(s)});
  const auto certify = [&](NodeId l) {
    SupplementCertificate c{SupplementKind::supplement, k, l, lat.sums_to(k, l, s.top),
                            a.is_small(lat.meet(k, l), {s.bottom, l}), std::nullopt};
    return c;
  };

  const NodeId delta_h = a.delta({s.bottom, h});
  if (delta_h == h) {
    // δ(H) = H is δ-small in M and K + δ(H) = M, so M = K ⊕ Y with Y ≤ δ(H).
    const auto w = a.delta_small_witness(delta_h, s);
    for (const auto& [x, y] : w.complements)
      if (x == k) {
        out.semisimple_branch = true;
        out.certificate = certify(y);
        out.chain.push_back(h);
        return out;
      }
    throw InternalInconsistency("no semisimple complement of K inside delta(H)");
  }
  if (delta_h != lat.meet(k, h))
    throw InternalInconsistency("delta(H) is neither H nor K ∩ H");

  NodeId l = h;
  out.chain.push_back(l);
  while (!a.is_small(lat.meet(k, l), {s.bottom, l})) {
    if (out.iterations >= out.iteration_bound)
      throw InternalInconsistency("supplement descent exceeded the socle length");
    const NodeId delta_l = a.delta({s.bottom, l});
    std::vector<NodeId> proper;
    for (NodeId l2 : lat.interval(s.bottom, l))
      if (l2 != l && lat.sums_to(delta_l, l2, l)) proper.push_back(l2);
    if (proper.empty()) throw InternalInconsistency("K ∩ L not small but delta(L) is small in L");
    sort_lex(lat, proper);
    const NodeId next = proper.front();
    // L = next ⊕ Y with Y ≤ δ(L) semisimple.
    const auto w = a.delta_small_witness(delta_l, {s.bottom, l});
    const bool split = std::any_of(w.complements.begin(), w.complements.end(),
                                   [&](const auto& p) { return p.first == next; });
    if (!split) throw InternalInconsistency("descent step has no semisimple complement");
    if (!lat.sums_to(k, next, s.top)) throw InternalInconsistency("descent lost K + L = M");
    l = next;
    out.chain.push_back(l);
    ++out.iterations;
  }
  out.certificate = certify(l);
  return out;
}

// ---------------------------------------------------------------------------
// Sums of simple and δ-local parts

std::optional<Decomposition> try_decompose_simple_delta_local(const ModuleAnalysis& a, Section s) {
  const auto& lat = a.lattice();
  const NodeId soc = a.socle(s);
  auto maxs = a.maximal(s);
  sort_lex(lat, maxs);

  Decomposition d;
  std::vector<NodeId> all_supplements, chosen;
  for (NodeId k : maxs) {
    if (!lat.leq(soc, k)) continue;
    auto sups = find_delta_supplements(a, k, s, SupplementKind::delta_supplement);
    if (sups.empty()) continue;
    chosen.push_back(sups.front().witness);
    for (const auto& c : sups) all_supplements.push_back(c.witness);
  }
  d.lambda = a.sum(s.bottom, all_supplements);
  if (lat.join(soc, d.lambda) != s.top) return std::nullopt;

  NodeId cur = s.bottom;
  for (NodeId l : chosen) {
    if (lat.leq(l, cur)) continue;
    d.parts.push_back(l);
    d.labels.push_back(PartLabel::delta_local);
    cur = lat.join(cur, l);
  }
  auto atoms = a.minimal({s.bottom, soc});
  sort_lex(lat, atoms);
  for (NodeId atom : atoms) {
    if (lat.leq(atom, cur)) continue;
    d.parts.push_back(atom);
    d.labels.push_back(PartLabel::simple);
    cur = lat.join(cur, atom);
  }
  if (cur != s.top) return std::nullopt;
  for (std::size_t i = 0; i < d.parts.size(); ++i) {
    const Section part{s.bottom, d.parts[i]};
    const bool ok = d.labels[i] == PartLabel::simple ? a.is_simple(part)
                                                     : classify_module(a, part).delta_local;
    if (!ok) return std::nullopt;
  }
  return d;
}

Decomposition decompose_simple_delta_local(const ModuleAnalysis& a, Section s) {
  if (!is_delta_supplemented(a, s)) throw NotDeltaSupplemented("module is not delta-supplemented");
  auto d = try_decompose_simple_delta_local(a, s);
  if (!d) throw InternalInconsistency("delta-supplemented module without a simple/delta-local decomposition");
  return *d;
}

// ---------------------------------------------------------------------------
// Semilocality through the socle

SemilocalReport semilocal_via_socle(const ModuleAnalysis& a, Section s) {
  if (!is_delta_supplemented(a, s)) throw NotDeltaSupplemented("module is not delta-supplemented");
  const auto f = a.fundamental(s);
  const auto& lat = a.lattice();
  SemilocalReport r;
  r.x_section = {lat.meet(f.soc, f.rad), f.soc};
  r.x_length = a.composition_length(r.x_section);
  r.semilocal = a.is_semisimple({f.rad, s.top});
  // X(M) has finite length here, so it is always finitely generated.
  const bool x_finitely_generated = true;
  r.equivalence_holds = r.semilocal == x_finitely_generated && a.is_semisimple(r.x_section);
  r.x_module = section_module(a.module(), lat.members(r.x_section.top), lat.members(r.x_section.bottom),
                              "X(" + a.module()->name() + ")", a.bounds())
                   .module;
  if (r.x_length == 0) r.rad_equals_delta = f.rad == f.delta;
  return r;
}

// ---------------------------------------------------------------------------
// Rings

RingClassification ring_classification(const ModuleAnalysis& regular) {
  RingClassification c;
  const Section s = regular.whole();
  c.semiperfect = is_supplemented(regular, s);
  c.delta_semiperfect = is_delta_supplemented(regular, s);
  c.semilocal = regular.is_semisimple({regular.radical(s), s.top});
  c.corollary_consistent = c.semiperfect == (c.delta_semiperfect && c.semilocal);
  return c;
}

RingClassification ring_classification(const RingPtr& ring, const Bounds& bounds) {
  const ModuleAnalysis a(regular_module(ring, bounds), bounds);
  return ring_classification(a);
}

}  // namespace deltasup
