#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "deltasup/element_set.hpp"
#include "deltasup/errors.hpp"

namespace deltasup {

/// Configurable size limits shared by construction, lattice and search code.
struct Bounds {
  std::size_t max_ring_size = 256;
  std::size_t max_module_size = 4096;
  std::size_t max_lattice_nodes = std::size_t{1} << 16;
  std::size_t max_hom_candidates = std::size_t{1} << 20;
};

/// Mixed-radix indexing of coefficient vectors c with 0 <= c_i < orders[i].
/// Index 0 is always the zero vector.
class CyclicCoordinates {
 public:
  CyclicCoordinates() = default;
  explicit CyclicCoordinates(std::vector<std::int64_t> orders);

  const std::vector<std::int64_t>& orders() const { return orders_; }
  std::size_t rank() const { return orders_.size(); }
  std::size_t size() const { return size_; }

  ElemId encode(std::span<const std::int64_t> coeffs) const;
  Coeffs decode(ElemId id) const;
  std::int64_t digit(ElemId id, std::size_t i) const {
    return static_cast<std::int64_t>((id / strides_[i]) % orders_[i]);
  }
  ElemId stride(std::size_t i) const { return static_cast<ElemId>(strides_[i]); }

  ElemId add(ElemId a, ElemId b) const;
  ElemId neg(ElemId a) const;
  ElemId scale(ElemId a, std::int64_t k) const;

 private:
  std::vector<std::int64_t> orders_;
  std::vector<std::size_t> strides_;
  std::size_t size_ = 1;
};

struct RingSpec {
  std::string name;
  std::vector<std::int64_t> additive_orders;
  Coeffs one;
  std::vector<std::vector<Coeffs>> mul;  // mul[i][j] = e_i * e_j
};

/// A finite unital ring presented by additive cyclic orders and structure
/// constants. Immutable once validated; every axiom is checked over all
/// element triples at construction.
class RingTable {
 public:
  static std::shared_ptr<const RingTable> create(RingSpec spec, const Bounds& bounds = {});

  const RingSpec& spec() const { return spec_; }
  const std::string& name() const { return spec_.name; }
  const std::vector<std::int64_t>& additive_orders() const { return spec_.additive_orders; }
  const CyclicCoordinates& coords() const { return coords_; }
  std::size_t size() const { return coords_.size(); }
  std::size_t rank() const { return coords_.rank(); }

  ElemId zero() const { return 0; }
  ElemId one() const { return one_; }
  ElemId basis(std::size_t i) const { return coords_.stride(i); }
  ElemId add(ElemId a, ElemId b) const { return add_[a * size() + b]; }
  ElemId neg(ElemId a) const { return coords_.neg(a); }
  ElemId mul(ElemId a, ElemId b) const { return mul_[a * size() + b]; }
  ElemId encode(std::span<const std::int64_t> c) const { return coords_.encode(c); }
  Coeffs decode(ElemId e) const { return coords_.decode(e); }

  /// Nonzero cyclic left ideals Rr, deduplicated.
  const std::vector<ElementSet>& cyclic_left_ideals() const { return cyclic_ideals_; }
  /// A left ideal is essential iff it meets every nonzero cyclic left ideal.
  bool is_essential_left_ideal(const ElementSet& ideal) const;

  friend bool operator==(const RingTable& a, const RingTable& b);

 private:
  RingTable() = default;

  RingSpec spec_;
  CyclicCoordinates coords_;
  ElemId one_ = 0;
  std::vector<ElemId> add_;
  std::vector<ElemId> mul_;
  std::vector<ElementSet> cyclic_ideals_;
};

using RingPtr = std::shared_ptr<const RingTable>;

struct ModuleSpec {
  std::string name;
  std::vector<std::int64_t> additive_orders;
  /// One matrix per ring basis element; actions[i][row][col].
  std::vector<std::vector<std::vector<std::int64_t>>> actions;
};

/// A finite left module over a RingTable. Elements are indexed through
/// CyclicCoordinates; the full action table r·m is precomputed.
class ModuleRep {
 public:
  static std::shared_ptr<const ModuleRep> create(RingPtr ring, ModuleSpec spec,
                                                 const Bounds& bounds = {});

  const RingPtr& ring() const { return ring_; }
  const ModuleSpec& spec() const { return spec_; }
  const std::string& name() const { return spec_.name; }
  const CyclicCoordinates& coords() const { return coords_; }
  std::size_t size() const { return coords_.size(); }
  /// Whether axioms were checked over all element tuples or, above the
  /// exhaustive budget, over additive generators (equivalent by linearity).
  bool exhaustively_validated() const { return exhaustive_; }

  ElemId zero() const { return 0; }
  ElemId add(ElemId a, ElemId b) const {
    return add_.empty() ? coords_.add(a, b) : add_[a * size() + b];
  }
  ElemId neg(ElemId a) const { return coords_.neg(a); }
  ElemId act(ElemId r, ElemId m) const { return act_[r * size() + m]; }
  ElemId act_basis(std::size_t i, ElemId m) const { return act(ring_->basis(i), m); }
  ElemId encode(std::span<const std::int64_t> c) const { return coords_.encode(c); }
  Coeffs decode(ElemId e) const { return coords_.decode(e); }

  ModuleSpec spec_with_name(std::string name) const;

 private:
  ModuleRep() = default;

  RingPtr ring_;
  ModuleSpec spec_;
  CyclicCoordinates coords_;
  std::vector<ElemId> add_;
  std::vector<ElemId> act_;
  bool exhaustive_ = true;
};

using ModulePtr = std::shared_ptr<const ModuleRep>;

/// A submodule stored as a member bitset plus an irredundant generator list.
struct Submodule {
  ModulePtr parent;
  ElementSet members;
  std::vector<ElemId> generators;

  std::size_t size() const { return members.count(); }
  bool contains(ElemId e) const { return members.contains(e); }
  friend bool operator==(const Submodule& a, const Submodule& b) {
    return a.parent == b.parent && a.members == b.members;
  }
};

/// Closes a subgroup under the additive subgroup generated by `c`.
/// `set` must already be a subgroup; `list` mirrors its members.
void extend_subgroup(const ModuleRep& m, ElementSet& set, std::vector<ElemId>& list, ElemId c);

/// Smallest submodule containing `current` (a submodule) and `g`.
void extend_submodule(const ModuleRep& m, ElementSet& set, std::vector<ElemId>& list, ElemId g);

/// Submodule generated by `gens`; generators that are already in the span of
/// their predecessors are dropped.
Submodule generate(const ModulePtr& m, std::span<const ElemId> gens);

/// Validates closure of `members` and wraps it; throws AxiomViolation if the
/// set is not a submodule.
Submodule submodule_from_members(const ModulePtr& m, const ElementSet& members);

Submodule zero_submodule(const ModulePtr& m);
Submodule whole_submodule(const ModulePtr& m);

/// A module built from a section top/bottom of a parent module.
struct SectionModule {
  ModulePtr module;
  /// projection[x] for x in top; kNotInSection elsewhere.
  std::vector<ElemId> projection;
  static constexpr ElemId kNotInSection = 0xffffffffu;
};

/// Builds top/bottom as a module with its own cyclic decomposition. Both sets
/// must be submodules of `parent` with bottom ⊆ top.
SectionModule section_module(const ModulePtr& parent, const ElementSet& top,
                             const ElementSet& bottom, std::string name,
                             const Bounds& bounds = {});

ModulePtr regular_module(const RingPtr& ring, const Bounds& bounds = {});

/// Coset module M/N plus the projection map.
SectionModule quotient_module(const Submodule& n, const Bounds& bounds = {});

/// A submodule regarded as a module in its own right.
SectionModule submodule_as_module(const Submodule& n, const Bounds& bounds = {});

struct DirectSum {
  ModulePtr module;
  std::vector<ElemId> embed_left;
  std::vector<ElemId> embed_right;
};

DirectSum direct_sum(const ModulePtr& a, const ModulePtr& b, std::string name = {},
                     const Bounds& bounds = {});

/// Whether two cyclic modules are isomorphic: R/ann(x) ≅ R/ann(y) for some
/// generators. Only valid for cyclic modules.
bool cyclic_modules_isomorphic(const ModuleRep& a, const ModuleRep& b);

}  // namespace deltasup
