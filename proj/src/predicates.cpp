#include "deltasup/predicates.hpp"

#include <algorithm>
#include <array>
#include <deque>

namespace deltasup {

namespace {

constexpr std::array<std::pair<Fault, std::string_view>, 8> kFaultNames{{
    {Fault::none, "none"},
    {Fault::invert_singular, "invert-singular"},
    {Fault::invert_essential, "invert-essential"},
    {Fault::invert_small, "invert-small"},
    {Fault::invert_delta_small, "invert-delta-small"},
    {Fault::invert_projective_semisimple, "invert-projective-semisimple"},
    {Fault::invert_coclosed, "invert-coclosed"},
    {Fault::invert_delta_coclosed, "invert-delta-coclosed"},
}};

NodeId lex_min(const SubmoduleLattice& lat, const std::vector<NodeId>& ids) {
  NodeId best = ids.front();
  for (NodeId id : ids)
    if (lat.members(id).lex_less(lat.members(best))) best = id;
  return best;
}

}  // namespace

std::string_view fault_name(Fault f) {
  for (const auto& [fault, name] : kFaultNames)
    if (fault == f) return name;
  return "unknown";
}

std::optional<Fault> parse_fault(std::string_view name) {
  for (const auto& [fault, n] : kFaultNames)
    if (n == name) return fault;
  return std::nullopt;
}

const std::vector<Fault>& all_faults() {
  static const std::vector<Fault> faults = [] {
    std::vector<Fault> v;
    for (const auto& [fault, name] : kFaultNames)
      if (fault != Fault::none) v.push_back(fault);
    return v;
  }();
  return faults;
}

ModuleAnalysis::ModuleAnalysis(ModulePtr module, const Bounds& bounds, Fault fault)
    : bounds_(bounds), fault_(fault), lattice_(std::move(module), bounds) {}

// ---------------------------------------------------------------------------
// Order-theoretic helpers on sections

std::vector<NodeId> ModuleAnalysis::maximal(Section s) const {
  std::vector<NodeId> out;
  if (s.bottom == s.top) return out;
  for (NodeId x : lattice_.lower_covers(s.top))
    if (lattice_.leq(s.bottom, x)) out.push_back(x);
  return out;
}

std::vector<NodeId> ModuleAnalysis::minimal(Section s) const {
  std::vector<NodeId> out;
  if (s.bottom == s.top) return out;
  for (NodeId x : lattice_.upper_covers(s.bottom))
    if (lattice_.leq(x, s.top)) out.push_back(x);
  return out;
}

bool ModuleAnalysis::is_simple(Section s) const {
  if (s.bottom == s.top) return false;
  const auto& up = lattice_.upper_covers(s.bottom);
  return std::find(up.begin(), up.end(), s.top) != up.end();
}

NodeId ModuleAnalysis::sum(NodeId start, const std::vector<NodeId>& parts) const {
  NodeId cur = start;
  for (NodeId p : parts) cur = lattice_.join(cur, p);
  return cur;
}

NodeId ModuleAnalysis::intersection(NodeId start, const std::vector<NodeId>& parts) const {
  ElementSet acc = lattice_.members(start);
  for (NodeId p : parts) acc &= lattice_.members(p);
  auto id = lattice_.find(acc);
  if (!id) throw InternalInconsistency("intersection missing from lattice");
  return *id;
}

bool ModuleAnalysis::is_semisimple(Section s) const {
  if (s.bottom == s.top) return true;
  return sum(s.bottom, minimal(s)) == s.top;
}

std::size_t ModuleAnalysis::composition_length(Section s) const {
  std::size_t len = 0;
  NodeId cur = s.bottom;
  while (cur != s.top) {
    NodeId next = cur;
    for (NodeId y : lattice_.upper_covers(cur))
      if (lattice_.leq(y, s.top)) {
        next = y;
        break;
      }
    if (next == cur) throw InternalInconsistency("no cover inside section");
    cur = next;
    ++len;
  }
  return len;
}

bool ModuleAnalysis::is_direct_sum(NodeId a, NodeId b, Section s) const {
  const auto& A = lattice_.members(a);
  const auto& B = lattice_.members(b);
  return A.intersection_count(B) == lattice_.node_size(s.bottom) &&
         (A & B) == lattice_.members(s.bottom) && lattice_.sums_to(a, b, s.top);
}

// ---------------------------------------------------------------------------
// Singularity

bool ModuleAnalysis::ann_essential(const ElementSet& ann) const {
  {
    std::lock_guard lock(mutex_);
    auto it = essential_ideal_cache_.find(ann);
    if (it != essential_ideal_cache_.end()) return it->second;
  }
  const bool ess = ring().is_essential_left_ideal(ann);
  std::lock_guard lock(mutex_);
  essential_ideal_cache_.emplace(ann, ess);
  return ess;
}

bool ModuleAnalysis::raw_singular(Section s) const {
  {
    std::lock_guard lock(mutex_);
    auto it = singular_cache_.find(key(s));
    if (it != singular_cache_.end()) return it->second;
  }
  const ModuleRep& m = *module();
  const std::size_t rn = ring().size();
  const auto& bottom = lattice_.members(s.bottom);
  bool singular = true;
  // Only one element per coset of bottom needs checking.
  ElementSet seen(m.size());
  const auto bottom_list = bottom.members();
  lattice_.members(s.top).for_each([&](ElemId x) {
    if (!singular || seen.contains(x)) return;
    for (ElemId b : bottom_list) seen.insert(m.add(x, b));
    ElementSet ann(rn);
    for (ElemId r = 0; r < rn; ++r)
      if (bottom.contains(m.act(r, x))) ann.insert(r);
    if (!ann_essential(ann)) singular = false;
  });
  std::lock_guard lock(mutex_);
  singular_cache_.emplace(key(s), singular);
  return singular;
}

bool ModuleAnalysis::is_singular(Section s) const {
  return apply(Fault::invert_singular, raw_singular(s));
}

NodeId ModuleAnalysis::singular_submodule(Section s) const {
  const ModuleRep& m = *module();
  const std::size_t rn = ring().size();
  const auto& bottom = lattice_.members(s.bottom);
  ElementSet z(m.size());
  lattice_.members(s.top).for_each([&](ElemId x) {
    ElementSet ann(rn);
    for (ElemId r = 0; r < rn; ++r)
      if (bottom.contains(m.act(r, x))) ann.insert(r);
    if (ann_essential(ann)) z.insert(x);
  });
  auto id = lattice_.find(z);
  if (!id) throw InternalInconsistency("singular submodule is not a lattice node");
  return *id;
}

// ---------------------------------------------------------------------------
// Elementary predicates

bool ModuleAnalysis::is_essential(NodeId n, Section s) const {
  const std::size_t b = lattice_.node_size(s.bottom);
  bool ess = true;
  for (NodeId c : nodes(s)) {
    if (c == s.bottom) continue;
    if (lattice_.members(c).intersection_count(lattice_.members(n)) == b) {
      ess = false;
      break;
    }
  }
  return apply(Fault::invert_essential, ess);
}

bool ModuleAnalysis::is_essential_via_cyclics(NodeId n, Section s) const {
  const std::size_t b = lattice_.node_size(s.bottom);
  const auto& bottom = lattice_.members(s.bottom);
  bool ess = true;
  lattice_.members(s.top).for_each([&](ElemId x) {
    if (!ess || bottom.contains(x)) return;
    const NodeId c = lattice_.join(s.bottom, lattice_.cyclic_of(x));
    if (lattice_.members(c).intersection_count(lattice_.members(n)) == b) ess = false;
  });
  return ess;
}

bool ModuleAnalysis::is_small(NodeId n, Section s) const {
  bool small = true;
  for (NodeId z : nodes(s)) {
    if (z == s.top) continue;
    if (lattice_.sums_to(n, z, s.top)) {
      small = false;
      break;
    }
  }
  return apply(Fault::invert_small, small);
}

bool ModuleAnalysis::is_delta_small(NodeId n, Section s) const {
  bool small = true;
  for (NodeId z : nodes(s)) {
    if (z == s.top) continue;
    if (lattice_.sums_to(n, z, s.top) && is_singular({z, s.top})) {
      small = false;
      break;
    }
  }
  return apply(Fault::invert_delta_small, small);
}

bool ModuleAnalysis::is_projective_semisimple(Section s) const {
  bool ok = is_semisimple(s);
  if (ok)
    for (NodeId a : minimal(s))
      if (is_singular({s.bottom, a})) {
        ok = false;
        break;
      }
  return apply(Fault::invert_projective_semisimple, ok);
}

DeltaSmallWitness ModuleAnalysis::delta_small_witness(NodeId n, Section s) const {
  DeltaSmallWitness out;
  const auto section_nodes = nodes(s);
  std::vector<NodeId> below_n;
  for (NodeId y : section_nodes)
    if (lattice_.leq(y, n)) below_n.push_back(y);
  for (NodeId x : section_nodes) {
    if (!lattice_.sums_to(x, n, s.top)) continue;
    std::vector<NodeId> candidates;
    for (NodeId y : below_n)
      if (is_direct_sum(x, y, s) && is_projective_semisimple({s.bottom, y})) candidates.push_back(y);
    if (candidates.empty()) {
      out.confirmed = false;
      out.counterexample = x;
      return out;
    }
    out.complements.emplace_back(x, lex_min(lattice_, candidates));
  }
  return out;
}

bool ModuleAnalysis::is_coclosed(NodeId n, Section s) const {
  bool closed = true;
  for (NodeId k : lattice_.interval(s.bottom, n)) {
    if (k == n) continue;
    if (is_small(n, {k, s.top})) {
      closed = false;
      break;
    }
  }
  return apply(Fault::invert_coclosed, closed);
}

bool ModuleAnalysis::is_delta_coclosed(NodeId n, Section s) const {
  bool closed = true;
  for (NodeId x : lattice_.interval(s.bottom, n)) {
    if (x == n) continue;
    if (is_singular({x, n}) && is_delta_small(n, {x, s.top})) {
      closed = false;
      break;
    }
  }
  return apply(Fault::invert_delta_coclosed, closed);
}

// ---------------------------------------------------------------------------
// Fundamental submodules, each computed two ways

DoubleRoute ModuleAnalysis::radical_routes(Section s) const {
  const NodeId by_maximals = intersection(s.top, maximal(s));
  std::vector<NodeId> smalls;
  for (NodeId n : nodes(s))
    if (is_small(n, s)) smalls.push_back(n);
  return {by_maximals, sum(s.bottom, smalls)};
}

DoubleRoute ModuleAnalysis::socle_routes(Section s) const {
  const NodeId by_minimals = sum(s.bottom, minimal(s));
  std::vector<NodeId> essentials;
  for (NodeId n : nodes(s))
    if (is_essential(n, s)) essentials.push_back(n);
  return {by_minimals, intersection(s.top, essentials)};
}

DoubleRoute ModuleAnalysis::delta_routes(Section s) const {
  // Reject of the singular simples: intersect kernels of maps onto them.
  std::vector<NodeId> singular_simple_kernels;
  for (NodeId k : maximal(s))
    if (is_singular({k, s.top})) singular_simple_kernels.push_back(k);
  const NodeId reject = intersection(s.top, singular_simple_kernels);
  std::vector<NodeId> delta_smalls;
  for (NodeId n : nodes(s))
    if (is_delta_small(n, s)) delta_smalls.push_back(n);
  return {reject, sum(s.bottom, delta_smalls)};
}

FundamentalSubmodules ModuleAnalysis::fundamental(Section s) const {
  {
    std::lock_guard lock(mutex_);
    auto it = fundamental_cache_.find(key(s));
    if (it != fundamental_cache_.end()) return it->second;
  }
  const auto rad = radical_routes(s);
  if (!rad.agree()) throw InternalInconsistency("radical: intersection of maximals != sum of smalls");
  const auto soc = socle_routes(s);
  if (!soc.agree()) throw InternalInconsistency("socle: sum of minimals != intersection of essentials");
  const auto del = delta_routes(s);
  if (!del.agree()) throw InternalInconsistency("delta: reject of singular simples != sum of delta-smalls");
  FundamentalSubmodules f{rad.first, soc.first, singular_submodule(s), del.first};
  std::lock_guard lock(mutex_);
  fundamental_cache_.emplace(key(s), f);
  return f;
}

// ---------------------------------------------------------------------------
// Submodule-level wrappers

bool is_essential(const Submodule& l, const ModuleAnalysis& a) {
  return a.is_essential(a.lattice().id_of(l), a.whole());
}
bool is_small(const Submodule& n, const ModuleAnalysis& a) {
  return a.is_small(a.lattice().id_of(n), a.whole());
}
bool is_delta_small(const Submodule& n, const ModuleAnalysis& a) {
  return a.is_delta_small(a.lattice().id_of(n), a.whole());
}
bool is_coclosed(const Submodule& n, const ModuleAnalysis& a) {
  return a.is_coclosed(a.lattice().id_of(n), a.whole());
}
bool is_delta_coclosed(const Submodule& n, const ModuleAnalysis& a) {
  return a.is_delta_coclosed(a.lattice().id_of(n), a.whole());
}
bool is_projective_semisimple(const Submodule& y, const ModuleAnalysis& a) {
  return a.is_projective_semisimple(a.sub(a.lattice().id_of(y)));
}
Submodule singular_submodule(const ModuleAnalysis& a) {
  return a.lattice().node(a.singular_submodule(a.whole()));
}
bool is_singular(const ModuleAnalysis& a) { return a.is_singular(a.whole()); }

DeltaSmallWitness delta_small_witness(const Submodule& n, const ModuleAnalysis& a) {
  const NodeId id = a.lattice().id_of(n);
  auto w = a.delta_small_witness(id, a.whole());
  if (w.confirmed != a.is_delta_small(id, a.whole()))
    throw InternalInconsistency("delta-small definition and complement characterisation disagree");
  return w;
}

// ---------------------------------------------------------------------------
// Projectivity

GeneratorSet minimal_generators(const SubmoduleLattice& lat) {
  const std::size_t n = lat.size();
  constexpr NodeId kUnset = 0xffffffffu;
  std::vector<NodeId> prev(n, kUnset), via(n, kUnset);
  std::deque<NodeId> queue{lat.bottom()};
  prev[lat.bottom()] = lat.bottom();
  while (!queue.empty() && prev[lat.top()] == kUnset) {
    const NodeId x = queue.front();
    queue.pop_front();
    for (NodeId c : lat.cyclic_nodes()) {
      if (lat.leq(c, x)) continue;
      const NodeId y = lat.join(x, c);
      if (prev[y] != kUnset) continue;
      prev[y] = x;
      via[y] = c;
      queue.push_back(y);
    }
  }
  GeneratorSet out;
  for (NodeId cur = lat.top(); cur != lat.bottom(); cur = prev[cur])
    out.generators.push_back(lat.node(via[cur]).generators.front());
  std::reverse(out.generators.begin(), out.generators.end());
  return out;
}

bool is_projective(const ModuleAnalysis& a, std::size_t generator_bound) {
  const ModuleRep& m = *a.module();
  const RingTable& r = a.ring();
  const auto gens = minimal_generators(a.lattice()).generators;
  const std::size_t n = gens.size();
  if (generator_bound < n)
    throw PreconditionViolation("generator bound " + std::to_string(generator_bound) +
                                " is below the minimal generator count " + std::to_string(n));
  if (n == 0) return true;

  const std::size_t rn = r.size();
  std::size_t free_size = 1;
  for (std::size_t j = 0; j < n; ++j) {
    free_size *= rn;
    if (free_size > a.bounds().max_hom_candidates)
      throw SearchBoundExceeded("free module R^" + std::to_string(n) + " exceeds search bound");
  }
  const auto component = [&](std::size_t t, std::size_t j) {
    for (std::size_t i = 0; i < j; ++i) t /= rn;
    return static_cast<ElemId>(t % rn);
  };
  const auto free_add = [&](std::size_t s, std::size_t t) {
    std::size_t out = 0, w = 1;
    for (std::size_t j = 0; j < n; ++j, w *= rn) out += r.add(component(s, j), component(t, j)) * w;
    return out;
  };
  const auto free_act = [&](std::size_t i, std::size_t t) {
    std::size_t out = 0, w = 1;
    for (std::size_t j = 0; j < n; ++j, w *= rn) out += r.mul(r.basis(i), component(t, j)) * w;
    return out;
  };
  const auto project = [&](std::size_t t) {
    ElemId x = 0;
    for (std::size_t j = 0; j < n; ++j) x = m.add(x, m.act(component(t, j), gens[j]));
    return x;
  };

  std::vector<std::vector<std::size_t>> preimages(n);
  for (std::size_t t = 0; t < free_size; ++t) {
    const ElemId x = project(t);
    for (std::size_t j = 0; j < n; ++j)
      if (x == gens[j]) preimages[j].push_back(t);
  }
  std::size_t candidates = 1;
  for (const auto& p : preimages) {
    candidates *= p.size();
    if (candidates > a.bounds().max_hom_candidates)
      throw SearchBoundExceeded("section search space exceeds bound");
  }

  constexpr std::size_t kUnset = static_cast<std::size_t>(-1);
  const std::size_t k = r.rank();
  std::vector<std::size_t> choice(n, 0);
  std::vector<std::size_t> f(m.size());
  std::vector<ElemId> defined;
  std::deque<ElemId> queue;
  for (std::size_t iter = 0; iter < candidates; ++iter) {
    std::fill(f.begin(), f.end(), kUnset);
    defined.clear();
    queue.clear();
    bool ok = true;
    const auto set = [&](ElemId x, std::size_t v) {
      if (f[x] == kUnset) {
        f[x] = v;
        defined.push_back(x);
        queue.push_back(x);
      } else if (f[x] != v) {
        ok = false;
      }
    };
    set(0, 0);
    for (std::size_t j = 0; j < n && ok; ++j) set(gens[j], preimages[j][choice[j]]);
    while (ok && !queue.empty()) {
      const ElemId x = queue.front();
      queue.pop_front();
      for (std::size_t i = 0; i < k && ok; ++i) set(m.act_basis(i, x), free_act(i, f[x]));
      const std::size_t snapshot = defined.size();
      for (std::size_t t = 0; t < snapshot && ok; ++t) {
        const ElemId z = defined[t];
        set(m.add(x, z), free_add(f[x], f[z]));
      }
    }
    if (ok && defined.size() == m.size()) {
      bool splits = true;
      for (ElemId x = 0; x < m.size() && splits; ++x) splits = project(f[x]) == x;
      if (splits) return true;
    }
    for (std::size_t j = 0; j < n; ++j) {
      if (++choice[j] < preimages[j].size()) break;
      choice[j] = 0;
    }
  }
  return false;
}

}  // namespace deltasup
