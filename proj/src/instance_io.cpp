#include "deltasup/instance_io.hpp"

#include <algorithm>
#include <fstream>
#include <initializer_list>
#include <sstream>

namespace deltasup {

using nlohmann::json;

namespace {

void require_fields(const json& j, const std::string& what, std::initializer_list<const char*> allowed,
                    std::initializer_list<const char*> required) {
  if (!j.is_object()) throw ParseError(what + " must be a JSON object", 0);
  for (auto it = j.begin(); it != j.end(); ++it) {
    const bool known = std::any_of(allowed.begin(), allowed.end(),
                                   [&](const char* f) { return it.key() == f; });
    if (!known) throw ParseError(what + ": unknown field '" + it.key() + "'", 0);
  }
  for (const char* f : required)
    if (!j.contains(f)) throw ParseError(what + ": missing field '" + std::string(f) + "'", 0);
}

std::int64_t to_int(const json& j, const std::string& where) {
  if (!j.is_number_integer()) throw ParseError(where + ": expected an integer", 0);
  return j.get<std::int64_t>();
}

std::vector<std::int64_t> to_ints(const json& j, const std::string& where) {
  if (!j.is_array()) throw ParseError(where + ": expected an array of integers", 0);
  std::vector<std::int64_t> out;
  for (const auto& v : j) out.push_back(to_int(v, where));
  return out;
}

std::string to_string(const json& j, const std::string& where) {
  if (!j.is_string()) throw ParseError(where + ": expected a string", 0);
  return j.get<std::string>();
}

json parse_text(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed JSON at byte ") + std::to_string(e.byte) + ": " + e.what(),
                     e.byte);
  }
}

}  // namespace

RingPtr ring_from_json(const json& j, const Bounds& bounds) {
  require_fields(j, "ring", {"name", "additive_orders", "one", "mul"},
                 {"name", "additive_orders", "one", "mul"});
  RingSpec spec;
  spec.name = to_string(j["name"], "ring.name");
  spec.additive_orders = to_ints(j["additive_orders"], "ring.additive_orders");
  spec.one = to_ints(j["one"], "ring.one");
  const auto& mul = j["mul"];
  if (!mul.is_array()) throw ParseError("ring.mul: expected a k x k array", 0);
  for (const auto& row : mul) {
    if (!row.is_array()) throw ParseError("ring.mul: expected a k x k array", 0);
    std::vector<Coeffs> r;
    for (const auto& v : row) r.push_back(to_ints(v, "ring.mul entry"));
    spec.mul.push_back(std::move(r));
  }
  return RingTable::create(std::move(spec), bounds);
}

RingPtr ring_from_spec(std::string_view text, const Bounds& bounds) {
  return ring_from_json(parse_text(text), bounds);
}

ModulePtr module_from_json(const RingPtr& ring, const json& j, const Bounds& bounds) {
  require_fields(j, "module", {"name", "ring", "additive_orders", "actions"},
                 {"name", "additive_orders", "actions"});
  ModuleSpec spec;
  spec.name = to_string(j["name"], "module.name");
  if (j.contains("ring")) {
    const auto& r = j["ring"];
    if (r.is_string()) {
      if (r.get<std::string>() != ring->name())
        throw ParseError("module '" + spec.name + "' refers to unknown ring '" + r.get<std::string>() + "'", 0);
    } else {
      const auto inline_ring = ring_from_json(r, bounds);
      if (!(*inline_ring == *ring))
        throw RingMismatch("module '" + spec.name + "' has an inline ring different from the entry ring");
    }
  }
  spec.additive_orders = to_ints(j["additive_orders"], "module.additive_orders");
  const auto& acts = j["actions"];
  if (!acts.is_array()) throw ParseError("module.actions: expected an array of matrices", 0);
  for (const auto& mat : acts) {
    if (!mat.is_array()) throw ParseError("module.actions: expected an array of matrices", 0);
    std::vector<std::vector<std::int64_t>> m;
    for (const auto& row : mat) m.push_back(to_ints(row, "module.actions row"));
    spec.actions.push_back(std::move(m));
  }
  return ModuleRep::create(ring, std::move(spec), bounds);
}

ModulePtr module_from_spec(const RingPtr& ring, std::string_view text, const Bounds& bounds) {
  return module_from_json(ring, parse_text(text), bounds);
}

json ring_to_json(const RingTable& ring) {
  const auto& s = ring.spec();
  json mul = json::array();
  for (const auto& row : s.mul) {
    json r = json::array();
    for (const auto& v : row) r.push_back(v);
    mul.push_back(std::move(r));
  }
  return json{{"name", s.name}, {"additive_orders", s.additive_orders}, {"one", s.one}, {"mul", mul}};
}

json module_to_json(const ModuleRep& module) {
  const auto& s = module.spec();
  return json{{"name", s.name},
              {"ring", module.ring()->name()},
              {"additive_orders", s.additive_orders},
              {"actions", s.actions}};
}

json entry_to_json(const CorpusEntry& entry) {
  json mods = json::array();
  for (const auto& m : entry.modules) mods.push_back(module_to_json(*m));
  return json{{"ring", ring_to_json(*entry.ring)}, {"modules", mods}, {"tags", entry.tags}};
}

std::string serialize_entry(const CorpusEntry& entry) { return entry_to_json(entry).dump(2) + "\n"; }

CorpusEntry load_instance_text(std::string_view text, const Bounds& bounds) {
  const json j = parse_text(text);
  require_fields(j, "instance", {"ring", "modules", "tags"}, {});
  CorpusEntry entry;
  if (j.contains("ring")) {
    entry.ring = ring_from_json(j["ring"], bounds);
  } else {
    if (!j.contains("modules") || !j["modules"].is_array() || j["modules"].empty() ||
        !j["modules"][0].is_object() || !j["modules"][0].contains("ring") ||
        !j["modules"][0]["ring"].is_object())
      throw ParseError("instance: no ring given (top-level or inline in the first module)", 0);
    entry.ring = ring_from_json(j["modules"][0]["ring"], bounds);
  }
  if (j.contains("modules")) {
    if (!j["modules"].is_array()) throw ParseError("instance.modules: expected an array", 0);
    for (const auto& m : j["modules"]) {
      auto mod = module_from_json(entry.ring, m, bounds);
      for (const auto& prev : entry.modules)
        if (prev->name() == mod->name())
          throw ParseError("instance: duplicate module name '" + mod->name() + "'", 0);
      entry.modules.push_back(std::move(mod));
    }
  } else {
    entry.modules.push_back(regular_module(entry.ring, bounds));
  }
  if (j.contains("tags")) {
    if (!j["tags"].is_array()) throw ParseError("instance.tags: expected an array of strings", 0);
    for (const auto& t : j["tags"]) entry.tags.push_back(to_string(t, "instance.tags"));
  }
  return entry;
}

CorpusEntry load_instance(const std::filesystem::path& path, const Bounds& bounds) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open instance file " + path.string(), 0);
  std::ostringstream ss;
  ss << in.rdbuf();
  return load_instance_text(ss.str(), bounds);
}

std::vector<CorpusEntry> load_corpus_dir(const std::filesystem::path& dir, const Bounds& bounds) {
  if (!std::filesystem::is_directory(dir)) throw ParseError("not a directory: " + dir.string(), 0);
  std::vector<std::filesystem::path> files;
  for (const auto& e : std::filesystem::directory_iterator(dir))
    if (e.is_regular_file() && e.path().extension() == ".json") files.push_back(e.path());
  std::sort(files.begin(), files.end());
  std::vector<CorpusEntry> out;
  for (const auto& f : files) out.push_back(load_instance(f, bounds));
  return out;
}

}  // namespace deltasup
