#pragma once

#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "deltasup/lattice.hpp"

namespace deltasup {

/// Single-predicate corruption used by the suite's fault-injection harness.
enum class Fault {
  none,
  invert_singular,
  invert_essential,
  invert_small,
  invert_delta_small,
  invert_projective_semisimple,
  invert_coclosed,
  invert_delta_coclosed,
};

std::string_view fault_name(Fault f);
std::optional<Fault> parse_fault(std::string_view name);
const std::vector<Fault>& all_faults();

/// The subquotient top/bottom of a module, addressed by lattice nodes.
/// Submodules of the section are the lattice nodes in [bottom, top].
struct Section {
  NodeId bottom = 0;
  NodeId top = 0;
  friend bool operator==(const Section&, const Section&) = default;
};

struct FundamentalSubmodules {
  NodeId rad;
  NodeId soc;
  NodeId z;
  NodeId delta;
};

/// Two independently computed values of the same submodule.
struct DoubleRoute {
  NodeId first;
  NodeId second;
  bool agree() const { return first == second; }
};

/// Outcome of the complement characterisation of δ-smallness: for every X
/// with X + N = top, a projective semisimple Y ≤ N with top = X ⊕ Y.
struct DeltaSmallWitness {
  bool confirmed = true;
  std::vector<std::pair<NodeId, NodeId>> complements;  // (X, Y)
  std::optional<NodeId> counterexample;                // failing X
};

/// Per-module analysis context: the submodule lattice plus caches for
/// section singularity and fundamental submodules. Thread-safe for
/// concurrent queries; caches are filled at most once per key.
class ModuleAnalysis {
 public:
  explicit ModuleAnalysis(ModulePtr module, const Bounds& bounds = {}, Fault fault = Fault::none);
  ModuleAnalysis(const ModuleAnalysis&) = delete;
  ModuleAnalysis& operator=(const ModuleAnalysis&) = delete;

  const ModulePtr& module() const { return lattice_.module(); }
  const RingTable& ring() const { return *lattice_.module()->ring(); }
  const SubmoduleLattice& lattice() const { return lattice_; }
  const Bounds& bounds() const { return bounds_; }
  Fault fault() const { return fault_; }

  Section whole() const { return {lattice_.bottom(), lattice_.top()}; }
  Section sub(NodeId n) const { return {lattice_.bottom(), n}; }
  Section over(NodeId n) const { return {n, lattice_.top()}; }

  std::vector<NodeId> nodes(Section s) const { return lattice_.interval(s.bottom, s.top); }
  std::vector<NodeId> maximal(Section s) const;
  std::vector<NodeId> minimal(Section s) const;
  bool is_zero(Section s) const { return s.bottom == s.top; }
  bool is_simple(Section s) const;
  bool is_semisimple(Section s) const;
  std::size_t composition_length(Section s) const;

  NodeId sum(NodeId start, const std::vector<NodeId>& parts) const;
  NodeId intersection(NodeId start, const std::vector<NodeId>& parts) const;
  /// top = a ⊕ b inside the section (a ∩ b = bottom, a + b = top).
  bool is_direct_sum(NodeId a, NodeId b, Section s) const;

  bool is_singular(Section s) const;
  /// Z(top/bottom) as the node {x ∈ top : ann(x + bottom) essential in R}.
  NodeId singular_submodule(Section s) const;
  bool is_essential(NodeId n, Section s) const;
  bool is_essential_via_cyclics(NodeId n, Section s) const;
  bool is_small(NodeId n, Section s) const;
  bool is_delta_small(NodeId n, Section s) const;
  DeltaSmallWitness delta_small_witness(NodeId n, Section s) const;
  /// Projective semisimple: a sum of simples, each nonsingular.
  bool is_projective_semisimple(Section s) const;
  bool is_coclosed(NodeId n, Section s) const;
  bool is_delta_coclosed(NodeId n, Section s) const;

  DoubleRoute radical_routes(Section s) const;
  DoubleRoute socle_routes(Section s) const;
  DoubleRoute delta_routes(Section s) const;
  /// Throws InternalInconsistency when a double computation disagrees.
  FundamentalSubmodules fundamental(Section s) const;
  NodeId radical(Section s) const { return fundamental(s).rad; }
  NodeId socle(Section s) const { return fundamental(s).soc; }
  NodeId delta(Section s) const { return fundamental(s).delta; }

 private:
  static std::uint64_t key(Section s) { return (std::uint64_t{s.bottom} << 32) | s.top; }
  bool raw_singular(Section s) const;
  bool ann_essential(const ElementSet& ann) const;
  bool apply(Fault f, bool value) const { return fault_ == f ? !value : value; }

  Bounds bounds_;
  Fault fault_;
  SubmoduleLattice lattice_;

  mutable std::mutex mutex_;
  mutable std::unordered_map<std::uint64_t, bool> singular_cache_;
  mutable std::unordered_map<ElementSet, bool, ElementSetHash> essential_ideal_cache_;
  mutable std::unordered_map<std::uint64_t, FundamentalSubmodules> fundamental_cache_;
};

/// Convenience wrappers taking submodules of the analysed module.
bool is_essential(const Submodule& l, const ModuleAnalysis& a);
bool is_small(const Submodule& n, const ModuleAnalysis& a);
bool is_delta_small(const Submodule& n, const ModuleAnalysis& a);
bool is_coclosed(const Submodule& n, const ModuleAnalysis& a);
bool is_delta_coclosed(const Submodule& n, const ModuleAnalysis& a);
bool is_projective_semisimple(const Submodule& y, const ModuleAnalysis& a);
Submodule singular_submodule(const ModuleAnalysis& a);
bool is_singular(const ModuleAnalysis& a);
/// Throws InternalInconsistency if the complement characterisation and the
/// definitional test disagree.
DeltaSmallWitness delta_small_witness(const Submodule& n, const ModuleAnalysis& a);

struct GeneratorSet {
  std::vector<ElemId> generators;
};

/// A generating tuple of minimal length.
GeneratorSet minimal_generators(const SubmoduleLattice& lattice);

/// Decides projectivity by searching for a section of the surjection
/// R^n → M given by a minimal generating tuple. Throws PreconditionViolation
/// when generator_bound is below the minimal generator count and
/// SearchBoundExceeded when the candidate space is too large.
bool is_projective(const ModuleAnalysis& a, std::size_t generator_bound);

}  // namespace deltasup
