#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "deltasup/algebra.hpp"

namespace deltasup {

struct CorpusEntry {
  RingPtr ring;
  std::vector<ModulePtr> modules;
  std::vector<std::string> tags;

  const std::string& name() const { return ring->name(); }
};

struct CorpusOptions {
  Bounds bounds;
  std::uint64_t seed = 1;
  /// Seeded extra modules per ring, on top of the fixed families.
  std::size_t generated_per_ring = 4;
  std::size_t generated_size_bound = 32;
};

/// The fixed ring list: Z/n for n in {2,3,4,6,8,9,12,16}, F2xF2, Z4xF2,
/// upper-triangular 2x2 matrices over F2 and F2[x]/(x^2).
std::vector<RingPtr> builtin_rings(const Bounds& bounds = {});

/// For each builtin ring: the regular module, every quotient R/I by a
/// nonzero left ideal, every direct sum of two simples, R ⊕ S for each
/// simple S, and seeded generated modules.
std::vector<CorpusEntry> builtin_corpus(const CorpusOptions& options = {});

/// Isomorphism classes of simple modules, as quotients of R by maximal
/// left ideals, named S1, S2, ...
std::vector<ModulePtr> simple_modules(const RingPtr& ring, const Bounds& bounds = {});

/// Deterministic sample of modules of size <= size_bound, built as sections
/// of R and R^2 from seeded random generators. The regular module comes
/// first when it fits. Duplicates up to coordinate permutation are dropped.
///
/// Generator: std::mt19937_64 seeded with `seed`; a draw in [0, n) is
/// `engine() % n`.
std::vector<ModulePtr> enumerate_small_modules(const RingPtr& ring, std::size_t size_bound,
                                               std::uint64_t seed, const Bounds& bounds = {},
                                               std::size_t max_count = 8);

/// Canonical form of a module's tables under permutation of coordinates
/// (identity only above 7 coordinates).
ModuleSpec canonical_tables(const ModuleSpec& spec);

}  // namespace deltasup
