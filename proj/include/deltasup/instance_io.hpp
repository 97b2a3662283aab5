#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "json.hpp"

#include "deltasup/corpus.hpp"

namespace deltasup {

// Instance file (JSON):
//   { "ring":    {"name", "additive_orders", "one", "mul"},
//     "modules": [{"name", "ring", "additive_orders", "actions"}, ...],
//     "tags":    ["..."] }
// A module's "ring" is the entry ring's name or an inline ring object.
// Unknown fields are rejected. Without "modules" the entry holds the
// regular module only.

RingPtr ring_from_json(const nlohmann::json& j, const Bounds& bounds = {});
RingPtr ring_from_spec(std::string_view text, const Bounds& bounds = {});
ModulePtr module_from_json(const RingPtr& ring, const nlohmann::json& j, const Bounds& bounds = {});
ModulePtr module_from_spec(const RingPtr& ring, std::string_view text, const Bounds& bounds = {});

nlohmann::json ring_to_json(const RingTable& ring);
nlohmann::json module_to_json(const ModuleRep& module);
nlohmann::json entry_to_json(const CorpusEntry& entry);
std::string serialize_entry(const CorpusEntry& entry);

CorpusEntry load_instance_text(std::string_view text, const Bounds& bounds = {});
CorpusEntry load_instance(const std::filesystem::path& path, const Bounds& bounds = {});
/// Every *.json file in a directory, sorted by file name.
std::vector<CorpusEntry> load_corpus_dir(const std::filesystem::path& dir, const Bounds& bounds = {});

}  // namespace deltasup
