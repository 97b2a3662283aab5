#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "deltasup/corpus.hpp"
#include "deltasup/predicates.hpp"

namespace deltasup {

/// Enough to replay a failure: the corpus entry, the module, and each
/// submodule involved as a list of generator coefficient vectors.
struct Witness {
  std::string instance;
  std::string module;
  std::vector<std::pair<std::string, std::vector<Coeffs>>> submodules;
  std::string detail;
};

struct CheckResult {
  std::string name;
  std::string anchor;
  /// Instances are modules, or rings for ring-level checks.
  std::size_t instances_run = 0;
  std::size_t passed = 0;
  std::size_t failed = 0;
  /// Instances where no premise was met, so nothing was tested.
  std::size_t vacuous_count = 0;
  /// Individual (module, submodule...) evaluations whose premise held.
  std::size_t pairs_checked = 0;
  bool vacuous_by_design = false;
  std::vector<Witness> witnesses;
};

struct SuiteConfig {
  Bounds bounds;
  std::uint64_t seed = 1;
  Fault fault = Fault::none;
  std::size_t max_witnesses = 5;
  bool parallel = true;
};

struct SkippedModule {
  std::string instance;
  std::string module;
  std::string reason;
};

struct SuiteReport {
  std::vector<CheckResult> checks;  // sorted by name
  SuiteConfig config;
  double wall_time = 0.0;
  std::vector<SkippedModule> skipped;

  bool all_passed() const;
  const CheckResult* find(const std::string& name) const;
};

struct CheckInfo {
  std::string name;
  std::string anchor;
  bool ring_level = false;
  bool vacuous_by_design = false;
};

/// Names and anchors of every check, sorted by name.
std::vector<CheckInfo> suite_checks();

SuiteReport run_suite(const std::vector<CorpusEntry>& corpus, const SuiteConfig& config = {});

nlohmann::json report_to_json(const SuiteReport& report);
std::string report_to_text(const SuiteReport& report);

}  // namespace deltasup
