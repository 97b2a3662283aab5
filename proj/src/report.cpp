#include "deltasup/report.hpp"

#include <sstream>

namespace deltasup {

namespace {

std::string gens_text(const nlohmann::json& gens) {
  std::string s = "<";
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (i) s += ",";
    s += format_coeffs(gens[i].get<Coeffs>());
  }
  return s + ">";
}

const char* yn(bool b) { return b ? "yes" : "no"; }

nlohmann::json classification_json(const Classification& c) {
  return {{"local", c.local},
          {"delta_local", c.delta_local},
          {"semilocal", c.semilocal},
          {"semisimple", c.semisimple},
          {"singular", c.singular}};
}

nlohmann::json certificate_json(const ModuleAnalysis& a, const SupplementCertificate& c) {
  nlohmann::json j{{"kind", std::string(kind_name(c.kind))},
                   {"witness", node_generators(a, c.witness)},
                   {"witness_size", a.lattice().node_size(c.witness)},
                   {"sum_is_whole", c.sum_is_whole},
                   {"intersection_condition", c.intersection_condition}};
  if (c.minimal) j["minimal"] = *c.minimal;
  return j;
}

}  // namespace

nlohmann::json node_generators(const ModuleAnalysis& a, NodeId n) {
  nlohmann::json out = nlohmann::json::array();
  for (ElemId g : a.lattice().node(n).generators) out.push_back(a.module()->decode(g));
  return out;
}

nlohmann::json analyze_module(const ModuleAnalysis& a) {
  const auto& lat = a.lattice();
  const Section s = a.whole();
  const auto f = a.fundamental(s);
  nlohmann::json j;
  j["name"] = a.module()->name();
  j["size"] = a.module()->size();
  j["lattice_size"] = lat.size();
  j["fundamental"] = {{"rad", node_generators(a, f.rad)},
                      {"soc", node_generators(a, f.soc)},
                      {"z", node_generators(a, f.z)},
                      {"delta", node_generators(a, f.delta)}};
  j["classification"] = classification_json(classify_module(a, s));
  j["supplemented"] = is_supplemented(a, s);
  j["delta_supplemented"] = is_delta_supplemented(a, s);

  nlohmann::json matrix = nlohmann::json::array();
  for (NodeId n : a.nodes(s))
    matrix.push_back({{"node", n},
                      {"size", lat.node_size(n)},
                      {"generators", node_generators(a, n)},
                      {"small", a.is_small(n, s)},
                      {"delta_small", a.is_delta_small(n, s)},
                      {"essential", a.is_essential(n, s)},
                      {"coclosed", a.is_coclosed(n, s)},
                      {"delta_coclosed", a.is_delta_coclosed(n, s)}});
  j["predicates"] = matrix;

  if (auto d = try_decompose_simple_delta_local(a, s)) {
    nlohmann::json parts = nlohmann::json::array();
    for (std::size_t i = 0; i < d->parts.size(); ++i)
      parts.push_back({{"generators", node_generators(a, d->parts[i])},
                       {"label", std::string(label_name(d->labels[i]))}});
    j["decomposition"] = {{"parts", parts}, {"lambda", node_generators(a, d->lambda)}};
  } else {
    j["decomposition"] = nullptr;
  }
  return j;
}

nlohmann::json analyze_entry(const CorpusEntry& entry, const Bounds& bounds) {
  nlohmann::json mods = nlohmann::json::array();
  for (const auto& m : entry.modules) {
    const ModuleAnalysis a(m, bounds);
    mods.push_back(analyze_module(a));
  }
  return {{"ring", entry.name()}, {"ring_size", entry.ring->size()}, {"modules", mods}};
}

std::string analyze_text(const nlohmann::json& j) {
  std::ostringstream os;
  os << "ring " << j["ring"].get<std::string>() << " (order " << j["ring_size"].get<std::size_t>() << ")\n";
  for (const auto& m : j["modules"]) {
    os << "\nmodule " << m["name"].get<std::string>() << ": |M| = " << m["size"].get<std::size_t>()
       << ", " << m["lattice_size"].get<std::size_t>() << " submodules\n";
    const auto& f = m["fundamental"];
    os << "  Rad = " << gens_text(f["rad"]) << "  Soc = " << gens_text(f["soc"]) << "  Z = " << gens_text(f["z"])
       << "  delta = " << gens_text(f["delta"]) << "\n";
    os << "  ";
    for (const auto& [k, v] : m["classification"].items()) os << k << "=" << yn(v.get<bool>()) << " ";
    os << "supplemented=" << yn(m["supplemented"].get<bool>())
       << " delta_supplemented=" << yn(m["delta_supplemented"].get<bool>()) << "\n";
    os << "  node  size  small  d-small  essential  coclosed  d-coclosed  generators\n";
    for (const auto& p : m["predicates"]) {
      char line[96];
      std::snprintf(line, sizeof line, "  %4u  %4zu  %-5s  %-7s  %-9s  %-8s  %-10s  ", p["node"].get<unsigned>(),
                    p["size"].get<std::size_t>(), yn(p["small"].get<bool>()), yn(p["delta_small"].get<bool>()),
                    yn(p["essential"].get<bool>()), yn(p["coclosed"].get<bool>()),
                    yn(p["delta_coclosed"].get<bool>()));
      os << line << gens_text(p["generators"]) << "\n";
    }
    if (m["decomposition"].is_null()) {
      os << "  no simple/delta-local decomposition\n";
    } else {
      os << "  decomposition:";
      for (const auto& p : m["decomposition"]["parts"])
        os << " " << gens_text(p["generators"]) << " (" << p["label"].get<std::string>() << ")";
      os << "\n";
    }
  }
  return os.str();
}

nlohmann::json lattice_report(const ModuleAnalysis& a) {
  const auto& lat = a.lattice();
  nlohmann::json nodes = nlohmann::json::array();
  for (NodeId n = 0; n < lat.size(); ++n)
    nodes.push_back({{"node", n}, {"size", lat.node_size(n)}, {"generators", node_generators(a, n)}});
  nlohmann::json edges = nlohmann::json::array();
  for (const auto& [lo, hi] : lat.hasse_edges()) edges.push_back({lo, hi});
  return {{"module", a.module()->name()}, {"nodes", nodes}, {"hasse_edges", edges}};
}

std::string lattice_text(const nlohmann::json& j) {
  std::ostringstream os;
  os << "lattice of " << j["module"].get<std::string>() << ": " << j["nodes"].size() << " nodes\n";
  for (const auto& n : j["nodes"])
    os << "  " << n["node"].get<unsigned>() << ": size " << n["size"].get<std::size_t>() << " "
       << gens_text(n["generators"]) << "\n";
  os << "hasse edges:\n";
  for (const auto& e : j["hasse_edges"]) os << "  " << e[0].get<unsigned>() << " < " << e[1].get<unsigned>() << "\n";
  return os.str();
}

nlohmann::json classify_report(const ModuleAnalysis& a) {
  const Section s = a.whole();
  auto j = classification_json(classify_module(a, s));
  j["module"] = a.module()->name();
  j["supplemented"] = is_supplemented(a, s);
  j["delta_supplemented"] = is_delta_supplemented(a, s);
  j["delta_lifting"] = is_delta_lifting(a, s);
  return j;
}

std::string classify_text(const nlohmann::json& j) {
  std::ostringstream os;
  os << j["module"].get<std::string>() << ":";
  for (const auto& [k, v] : j.items())
    if (v.is_boolean()) os << " " << k << "=" << yn(v.get<bool>());
  os << "\n";
  return os.str();
}

std::vector<ElemId> parse_generators(const ModuleRep& m, std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("generator list: ") + e.what(), e.byte);
  }
  if (!j.is_array()) throw ParseError("generator list must be an array of coefficient vectors", 0);
  std::vector<ElemId> out;
  for (const auto& g : j) {
    if (!g.is_array() || g.size() != m.coords().rank())
      throw ParseError("generator must have " + std::to_string(m.coords().rank()) + " coefficients", 0);
    Coeffs c;
    for (const auto& x : g) {
      if (!x.is_number_integer()) throw ParseError("coefficients must be integers", 0);
      c.push_back(x.get<std::int64_t>());
    }
    out.push_back(m.encode(c));
  }
  return out;
}

nlohmann::json supplements_report(const ModuleAnalysis& a, NodeId k, std::optional<SupplementKind> kind) {
  const Section s = a.whole();
  nlohmann::json j{{"module", a.module()->name()}, {"K", node_generators(a, k)}};
  const auto wanted = [&](SupplementKind x) { return !kind || *kind == x; };
  for (SupplementKind x : {SupplementKind::supplement, SupplementKind::delta_supplement,
                           SupplementKind::weak_delta_supplement}) {
    if (!wanted(x)) continue;
    const auto certs = x == SupplementKind::supplement ? find_supplements(a, k, s)
                                                       : find_delta_supplements(a, k, s, x);
    nlohmann::json list = nlohmann::json::array();
    for (const auto& c : certs) list.push_back(certificate_json(a, c));
    j[std::string(kind_name(x))] = list;
  }
  return j;
}

std::string supplements_text(const nlohmann::json& j) {
  std::ostringstream os;
  os << "K = " << gens_text(j["K"]) << " in " << j["module"].get<std::string>() << "\n";
  for (const char* kind : {"supplement", "delta", "weak"}) {
    if (!j.contains(kind)) continue;
    os << kind << ": " << j[kind].size() << "\n";
    for (const auto& c : j[kind]) os << "  L = " << gens_text(c["witness"]) << " (size " << c["witness_size"] << ")\n";
  }
  return os.str();
}

std::optional<SupplementKind> parse_kind(std::string_view name) {
  for (SupplementKind x : {SupplementKind::supplement, SupplementKind::delta_supplement,
                           SupplementKind::weak_delta_supplement})
    if (kind_name(x) == name) return x;
  return std::nullopt;
}

const ModulePtr& find_module(const CorpusEntry& entry, std::string_view name) {
  for (const auto& m : entry.modules)
    if (m->name() == name) return m;
  throw Error("no module named '" + std::string(name) + "' in " + entry.name());
}

}  // namespace deltasup
