#include "deltasup/lattice.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

namespace deltasup {

namespace {

ElementSet cyclic_members(const ModuleRep& m, ElemId x) {
  ElementSet s(m.size());
  const std::size_t rn = m.ring()->size();
  for (ElemId r = 0; r < rn; ++r) s.insert(m.act(r, x));
  return s;
}

bool node_order(const Submodule& a, const Submodule& b) {
  const auto na = a.members.count(), nb = b.members.count();
  if (na != nb) return na < nb;
  return a.members.lex_less(b.members);
}

}  // namespace

std::vector<Submodule> cyclic_submodules(const ModulePtr& m) {
  std::unordered_map<ElementSet, std::size_t, ElementSetHash> seen;
  std::vector<Submodule> out;
  for (ElemId x = 0; x < m->size(); ++x) {
    ElementSet s = cyclic_members(*m, x);
    if (seen.emplace(s, out.size()).second) {
      Submodule sub{m, std::move(s), {}};
      if (x != 0) sub.generators.push_back(x);
      out.push_back(std::move(sub));
    }
  }
  std::sort(out.begin(), out.end(), node_order);
  return out;
}

SubmoduleLattice::SubmoduleLattice(ModulePtr module, const Bounds& bounds)
    : module_(std::move(module)) {
  const ModuleRep& m = *module_;
  const std::size_t k = m.ring()->rank();

  std::vector<Submodule> found;
  const auto add_node = [&](Submodule s) -> bool {
    if (index_.count(s.members)) return false;
    if (found.size() >= bounds.max_lattice_nodes)
      throw NodeBoundExceeded("submodule lattice exceeds " + std::to_string(bounds.max_lattice_nodes) +
                              " nodes");
    index_.emplace(s.members, static_cast<NodeId>(found.size()));
    found.push_back(std::move(s));
    return true;
  };

  auto cyclics = cyclic_submodules(module_);
  for (const auto& c : cyclics) add_node(c);
  // Additive generators of each nonzero cyclic Rc: e_i·c.
  std::vector<std::pair<std::size_t, std::vector<ElemId>>> seeds;
  for (std::size_t ci = 0; ci < cyclics.size(); ++ci) {
    if (cyclics[ci].generators.empty()) continue;
    const ElemId c = cyclics[ci].generators.front();
    std::vector<ElemId> add_gens;
    for (std::size_t i = 0; i < k; ++i) add_gens.push_back(m.act_basis(i, c));
    seeds.emplace_back(ci, std::move(add_gens));
  }

  std::deque<std::size_t> work;
  for (std::size_t i = 0; i < found.size(); ++i) work.push_back(i);
  while (!work.empty()) {
    const std::size_t xi = work.front();
    work.pop_front();
    for (const auto& [ci, add_gens] : seeds) {
      if (cyclics[ci].members.is_subset_of(found[xi].members)) continue;
      Submodule y = found[xi];
      std::vector<ElemId> list = y.members.members();
      for (ElemId g : add_gens) extend_subgroup(m, y.members, list, g);
      if (index_.count(y.members)) continue;
      y.generators.push_back(cyclics[ci].generators.front());
      if (add_node(std::move(y))) work.push_back(found.size() - 1);
    }
  }

  std::sort(found.begin(), found.end(), node_order);
  nodes_ = std::move(found);
  index_.clear();
  sizes_.resize(nodes_.size());
  for (NodeId i = 0; i < nodes_.size(); ++i) {
    index_.emplace(nodes_[i].members, i);
    sizes_[i] = nodes_[i].members.count();
  }
  cyclic_of_.resize(m.size());
  std::vector<bool> is_cyclic(nodes_.size(), false);
  for (ElemId x = 0; x < m.size(); ++x) {
    cyclic_of_[x] = index_.at(cyclic_members(m, x));
    is_cyclic[cyclic_of_[x]] = true;
  }
  for (NodeId i = 0; i < nodes_.size(); ++i)
    if (is_cyclic[i]) cyclic_nodes_.push_back(i);
}

std::optional<NodeId> SubmoduleLattice::find(const ElementSet& members) const {
  auto it = index_.find(members);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

NodeId SubmoduleLattice::id_of(const Submodule& s) const {
  if (s.parent != module_)
    throw ParentMismatch("submodule does not belong to this lattice");
  auto id = find(s.members);
  if (!id) throw InternalInconsistency("submodule missing from lattice");
  return *id;
}

NodeId SubmoduleLattice::join(NodeId a, NodeId b) const {
  if (leq(a, b)) return b;
  if (leq(b, a)) return a;
  return id_of(deltasup::join(nodes_[a], nodes_[b]));
}

NodeId SubmoduleLattice::meet(NodeId a, NodeId b) const {
  auto id = find(nodes_[a].members & nodes_[b].members);
  if (!id) throw InternalInconsistency("intersection of submodules missing from lattice");
  return *id;
}

bool SubmoduleLattice::sums_to(NodeId a, NodeId b, NodeId c) const {
  const auto& A = nodes_[a].members;
  const auto& B = nodes_[b].members;
  if (!A.is_subset_of(nodes_[c].members) || !B.is_subset_of(nodes_[c].members)) return false;
  return sizes_[a] * sizes_[b] == sizes_[c] * A.intersection_count(B);
}

std::vector<NodeId> SubmoduleLattice::interval(NodeId lo, NodeId hi) const {
  std::vector<NodeId> out;
  const std::size_t slo = sizes_[lo], shi = sizes_[hi];
  const auto first = std::lower_bound(sizes_.begin(), sizes_.end(), slo) - sizes_.begin();
  for (auto i = static_cast<NodeId>(first); i < nodes_.size() && sizes_[i] <= shi; ++i) {
    if (shi % sizes_[i] != 0) continue;
    if (nodes_[lo].members.is_subset_of(nodes_[i].members) &&
        nodes_[i].members.is_subset_of(nodes_[hi].members))
      out.push_back(i);
  }
  return out;
}

void SubmoduleLattice::compute_covers() const {
  std::call_once(covers_once_, [this] {
    const std::size_t n = nodes_.size();
    upper_.assign(n, {});
    lower_.assign(n, {});
    // Upper covers of X are the minimal elements of {X + Rc : c ∉ X}.
    for (NodeId x = 0; x < n; ++x) {
      std::vector<NodeId> cand;
      for (NodeId c : cyclic_nodes_) {
        if (nodes_[c].members.is_subset_of(nodes_[x].members)) continue;
        cand.push_back(join(x, c));
      }
      std::sort(cand.begin(), cand.end());
      cand.erase(std::unique(cand.begin(), cand.end()), cand.end());
      for (NodeId y : cand) {
        bool minimal = true;
        for (NodeId z : cand)
          if (z != y && sizes_[z] < sizes_[y] && leq(z, y)) {
            minimal = false;
            break;
          }
        if (minimal) {
          upper_[x].push_back(y);
          lower_[y].push_back(x);
        }
      }
    }
    for (auto& v : lower_) std::sort(v.begin(), v.end());
  });
}

const std::vector<NodeId>& SubmoduleLattice::upper_covers(NodeId id) const {
  compute_covers();
  return upper_[id];
}

std::vector<NodeId> SubmoduleLattice::lower_covers(NodeId id) const {
  compute_covers();
  return lower_[id];
}

std::vector<std::pair<NodeId, NodeId>> SubmoduleLattice::hasse_edges() const {
  compute_covers();
  std::vector<std::pair<NodeId, NodeId>> out;
  for (NodeId x = 0; x < nodes_.size(); ++x)
    for (NodeId y : upper_[x]) out.emplace_back(x, y);
  return out;
}

Submodule join(const Submodule& a, const Submodule& b) {
  if (a.parent != b.parent) throw ParentMismatch("join of submodules of different modules");
  const ModuleRep& m = *a.parent;
  Submodule out = a;
  std::vector<ElemId> list = out.members.members();
  for (ElemId g : b.generators) {
    if (out.members.contains(g)) continue;
    extend_submodule(m, out.members, list, g);
    out.generators.push_back(g);
  }
  return out;
}

Submodule meet(const Submodule& a, const Submodule& b) {
  if (a.parent != b.parent) throw ParentMismatch("meet of submodules of different modules");
  return submodule_from_members(a.parent, a.members & b.members);
}

}  // namespace deltasup
