#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "json.hpp"

#include "deltasup/corpus.hpp"
#include "deltasup/structure.hpp"

namespace deltasup {

enum class Format { text, json };

/// Generator list of a lattice node as coefficient vectors.
nlohmann::json node_generators(const ModuleAnalysis& a, NodeId n);

/// Per module: sizes, Rad/Soc/Z/δ, classification, the predicate matrix over
/// all submodules and the simple/δ-local decomposition when it exists.
nlohmann::json analyze_module(const ModuleAnalysis& a);
nlohmann::json analyze_entry(const CorpusEntry& entry, const Bounds& bounds = {});
std::string analyze_text(const nlohmann::json& analysis);

nlohmann::json lattice_report(const ModuleAnalysis& a);
std::string lattice_text(const nlohmann::json& lattice);

nlohmann::json classify_report(const ModuleAnalysis& a);
std::string classify_text(const nlohmann::json& classification);

/// Parses a JSON list of coefficient vectors, e.g. "[[2]]" or "[]".
std::vector<ElemId> parse_generators(const ModuleRep& m, std::string_view text);

/// Supplement certificates of K; every kind when `kind` is empty.
nlohmann::json supplements_report(const ModuleAnalysis& a, NodeId k, std::optional<SupplementKind> kind);
std::string supplements_text(const nlohmann::json& supplements);

std::optional<SupplementKind> parse_kind(std::string_view name);

/// The module of an entry with the given name; throws Error if absent.
const ModulePtr& find_module(const CorpusEntry& entry, std::string_view name);

}  // namespace deltasup
