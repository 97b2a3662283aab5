#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "deltasup/predicates.hpp"

namespace deltasup {

enum class SupplementKind { supplement, delta_supplement, weak_delta_supplement };

std::string_view kind_name(SupplementKind k);

struct SupplementCertificate {
  SupplementKind kind = SupplementKind::supplement;
  NodeId of = 0;
  NodeId witness = 0;
  bool sum_is_whole = false;
  /// K ∩ L ≪ L, K ∩ L ≪_δ L, or K ∩ L ≪_δ M depending on kind.
  bool intersection_condition = false;
  /// Minimality of L among submodules with K + L = M (supplements only).
  std::optional<bool> minimal;
};

/// Both characterisations of "L is a supplement of K", for every L with
/// K + L = top. Used where a disagreement must be reported instead of thrown.
struct SupplementScan {
  std::vector<NodeId> minimal;             // L minimal with K + L = top
  std::vector<NodeId> small_intersection;  // K + L = top and K ∩ L ≪ L
};

SupplementScan scan_supplements(const ModuleAnalysis& a, NodeId k, Section s);

/// All supplements of K. Throws InternalInconsistency when the minimality
/// and small-intersection characterisations disagree.
std::vector<SupplementCertificate> find_supplements(const ModuleAnalysis& a, NodeId k, Section s);
std::vector<SupplementCertificate> find_delta_supplements(const ModuleAnalysis& a, NodeId k,
                                                          Section s, SupplementKind kind);
bool is_delta_supplement_of(const ModuleAnalysis& a, NodeId l, NodeId k, Section s);

struct Classification {
  bool local = false;
  bool delta_local = false;
  bool semilocal = false;
  bool semisimple = false;
  bool singular = false;
};

Classification classify_module(const ModuleAnalysis& a, Section s);

bool is_supplemented(const ModuleAnalysis& a, Section s);
bool is_delta_supplemented(const ModuleAnalysis& a, Section s);
bool every_maximal_has_delta_supplement(const ModuleAnalysis& a, Section s);

/// top = D1 ⊕ D2 with D1 ≤ N and N ∩ D2 ≪_δ D2, lexicographically first.
std::optional<std::pair<NodeId, NodeId>> delta_lifting_decomposition(const ModuleAnalysis& a,
                                                                     NodeId n, Section s);
bool is_delta_lifting(const ModuleAnalysis& a, Section s);

struct ExtractionResult {
  SupplementCertificate certificate;
  std::size_t iterations = 0;
  std::size_t iteration_bound = 0;
  /// True when δ(H) = H and the supplement came from a semisimple complement.
  bool semisimple_branch = false;
  std::vector<NodeId> chain;  // H = L_0 > L_1 > ... (descent branch)
};

/// Given a maximal K and a δ-supplement H of K, descends inside H to a
/// genuine supplement of K. Throws PreconditionViolation on bad input and
/// InternalInconsistency if the descent exceeds the socle length.
ExtractionResult extract_supplement(const ModuleAnalysis& a, NodeId h, NodeId k, Section s);

enum class PartLabel { simple, delta_local };
std::string_view label_name(PartLabel l);

struct Decomposition {
  std::vector<NodeId> parts;
  std::vector<PartLabel> labels;
  /// Sum of all δ-supplements of maximal submodules containing the socle.
  NodeId lambda = 0;
};

/// Runs the construction without checking δ-supplementedness first; returns
/// nullopt when it does not produce a verified decomposition.
std::optional<Decomposition> try_decompose_simple_delta_local(const ModuleAnalysis& a, Section s);
/// Throws NotDeltaSupplemented when the premise fails.
Decomposition decompose_simple_delta_local(const ModuleAnalysis& a, Section s);

struct SemilocalReport {
  bool semilocal = false;
  std::size_t x_length = 0;
  bool equivalence_holds = false;
  Section x_section;  // Soc / (Soc ∩ Rad)
  ModulePtr x_module;
  /// Present when X(M) = 0: whether Rad(M) = δ(M).
  std::optional<bool> rad_equals_delta;
};

/// Throws NotDeltaSupplemented when the premise fails.
SemilocalReport semilocal_via_socle(const ModuleAnalysis& a, Section s);

struct RingClassification {
  bool semiperfect = false;
  bool delta_semiperfect = false;
  bool semilocal = false;
  bool corollary_consistent = false;
};

RingClassification ring_classification(const ModuleAnalysis& regular);
RingClassification ring_classification(const RingPtr& ring, const Bounds& bounds = {});

}  // namespace deltasup
