#pragma once

#include <cstdint>
#include <mutex>
#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

#include "deltasup/algebra.hpp"

namespace deltasup {

using NodeId = std::uint32_t;

/// The complete submodule lattice of a finite module.
///
/// Built from the cyclic submodules Rx by a join-closure worklist: every
/// submodule is a finite sum of cyclic ones, so closing {0} ∪ {Rx} under
/// "+ Rx" reaches every node. Nodes are sorted by size, then by the
/// lexicographic order of their member lists, so node 0 is the zero
/// submodule and the last node is the whole module.
class SubmoduleLattice {
 public:
  explicit SubmoduleLattice(ModulePtr module, const Bounds& bounds = {});

  const ModulePtr& module() const { return module_; }
  std::size_t size() const { return nodes_.size(); }
  const Submodule& node(NodeId id) const { return nodes_[id]; }
  const std::vector<Submodule>& nodes() const { return nodes_; }
  const ElementSet& members(NodeId id) const { return nodes_[id].members; }
  std::size_t node_size(NodeId id) const { return sizes_[id]; }

  NodeId bottom() const { return 0; }
  NodeId top() const { return static_cast<NodeId>(nodes_.size() - 1); }

  std::optional<NodeId> find(const ElementSet& members) const;
  NodeId id_of(const Submodule& s) const;
  /// Node id of Rx for every element x.
  NodeId cyclic_of(ElemId x) const { return cyclic_of_[x]; }
  /// Distinct cyclic submodules, including 0.
  const std::vector<NodeId>& cyclic_nodes() const { return cyclic_nodes_; }

  bool leq(NodeId a, NodeId b) const { return nodes_[a].members.is_subset_of(nodes_[b].members); }
  NodeId join(NodeId a, NodeId b) const;
  NodeId meet(NodeId a, NodeId b) const;
  /// a + b == c, decided from sizes: |a + b| = |a||b| / |a ∩ b|.
  bool sums_to(NodeId a, NodeId b, NodeId c) const;

  /// Nodes x with lo ≤ x ≤ hi, ascending by id.
  std::vector<NodeId> interval(NodeId lo, NodeId hi) const;

  /// Upper covers of every node, computed on first use.
  const std::vector<NodeId>& upper_covers(NodeId id) const;
  std::vector<NodeId> lower_covers(NodeId id) const;
  /// Co-atoms of the whole lattice.
  std::vector<NodeId> maximal_submodules() const { return lower_covers(top()); }
  /// Atoms of the whole lattice.
  std::vector<NodeId> minimal_submodules() const { return upper_covers(bottom()); }

  /// Hasse edges (lower, upper).
  std::vector<std::pair<NodeId, NodeId>> hasse_edges() const;

 private:
  void compute_covers() const;

  ModulePtr module_;
  std::vector<Submodule> nodes_;
  std::vector<std::size_t> sizes_;
  std::unordered_map<ElementSet, NodeId, ElementSetHash> index_;
  std::vector<NodeId> cyclic_of_;
  std::vector<NodeId> cyclic_nodes_;

  mutable std::once_flag covers_once_;
  mutable std::vector<std::vector<NodeId>> upper_;
  mutable std::vector<std::vector<NodeId>> lower_;
};

/// Sum of two submodules of the same parent.
Submodule join(const Submodule& a, const Submodule& b);
/// Intersection of two submodules of the same parent.
Submodule meet(const Submodule& a, const Submodule& b);

/// All distinct cyclic submodules Rx, x ∈ M, ordered like lattice nodes.
std::vector<Submodule> cyclic_submodules(const ModulePtr& m);

}  // namespace deltasup
