// Command-line front end: instance validation, analysis reports and the
// theorem suite.
#include <filesystem>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"

#include "deltasup/instance_io.hpp"
#include "deltasup/report.hpp"
#include "deltasup/suite.hpp"

using namespace deltasup;

namespace {

constexpr int kInputError = 2;

// "builtin:<ring>" names an entry of the builtin corpus; anything else is a file.
CorpusEntry load_entry(const std::string& source, const Bounds& bounds) {
  const std::string prefix = "builtin:";
  if (source.rfind(prefix, 0) == 0) {
    const std::string name = source.substr(prefix.size());
    CorpusOptions opts;
    opts.bounds = bounds;
    for (auto& e : builtin_corpus(opts))
      if (e.name() == name) return e;
    throw Error("no builtin entry named '" + name + "'");
  }
  return load_instance(source, bounds);
}

void emit(const nlohmann::json& j, const std::string& format, std::string (*as_text)(const nlohmann::json&)) {
  if (format == "json")
    std::cout << j.dump(2) << "\n";
  else
    std::cout << as_text(j);
}

std::string file_stem_for(const std::string& ring_name) {
  std::string out;
  for (char c : ring_name) out += std::isalnum(static_cast<unsigned char>(c)) ? c : '_';
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite rings and modules: submodule lattices, delta-supplements and a theorem suite"};
  app.require_subcommand(1);

  std::string file, module_name, sub, kind, format = "text", corpus = "builtin", fault = "none", ring_name, out_dir;
  Bounds bounds;
  std::uint64_t seed = 1;
  std::size_t max_witnesses = 5;
  const auto add_format = [&](CLI::App* c) {
    c->add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));
  };

  auto* validate = app.add_subcommand("validate", "Validate an instance file");
  validate->add_option("file", file, "Instance file or builtin:<ring>")->required();

  auto* analyze = app.add_subcommand("analyze", "Fundamental submodules, classification and predicate matrix");
  analyze->add_option("file", file, "Instance file or builtin:<ring>")->required();
  add_format(analyze);

  auto* lattice = app.add_subcommand("lattice", "Submodule lattice with Hasse edges");
  lattice->add_option("file", file, "Instance file or builtin:<ring>")->required();
  lattice->add_option("--module", module_name, "Module name")->required();
  add_format(lattice);

  auto* supplements = app.add_subcommand("supplements", "Supplement certificates of a submodule");
  supplements->add_option("file", file, "Instance file or builtin:<ring>")->required();
  supplements->add_option("--module", module_name, "Module name")->required();
  supplements->add_option("--sub", sub, "Generators as a JSON list, e.g. [[2]]")->required();
  supplements->add_option("--kind", kind, "Supplement kind")->check(CLI::IsMember({"supplement", "delta", "weak"}));
  add_format(supplements);

  auto* classify = app.add_subcommand("classify", "Classification record of a module");
  classify->add_option("file", file, "Instance file or builtin:<ring>")->required();
  classify->add_option("--module", module_name, "Module name")->required();
  add_format(classify);

  auto* suite = app.add_subcommand("suite", "Run the named theorem checks over a corpus");
  suite->add_option("--corpus", corpus, "'builtin' or a directory of instance files");
  suite->add_option("--max-ring-size", bounds.max_ring_size, "Ring size bound");
  suite->add_option("--max-module-size", bounds.max_module_size, "Module size bound");
  suite->add_option("--seed", seed, "Seed for generated corpus modules");
  suite->add_option("--fault", fault, "Invert one predicate (fault injection)");
  suite->add_option("--max-witnesses", max_witnesses, "Witnesses kept per check");
  add_format(suite);

  auto* corpus_cmd = app.add_subcommand("corpus", "Inspect the builtin corpus");
  corpus_cmd->require_subcommand(1);
  auto* corpus_list = corpus_cmd->add_subcommand("list", "Entry names, modules and tags");
  corpus_list->add_option("--seed", seed, "Seed for generated modules");
  auto* corpus_export = corpus_cmd->add_subcommand("export", "Write entries as instance files");
  corpus_export->add_option("--seed", seed, "Seed for generated modules");
  corpus_export->add_option("--ring", ring_name, "Print one entry to stdout");
  corpus_export->add_option("--dir", out_dir, "Write every entry to this directory");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*validate) {
      const auto e = load_entry(file, bounds);
      std::cout << "ok: ring " << e.name() << " of order " << e.ring->size() << ", " << e.modules.size()
                << " module(s)\n";
      for (const auto& m : e.modules)
        std::cout << "  " << m->name() << ": order " << m->size()
                  << (m->exhaustively_validated() ? "" : " (axioms checked on generators)") << "\n";
      return 0;
    }
    if (*analyze) {
      emit(analyze_entry(load_entry(file, bounds), bounds), format, analyze_text);
      return 0;
    }
    if (*lattice || *supplements || *classify) {
      const auto e = load_entry(file, bounds);
      const ModuleAnalysis a(find_module(e, module_name), bounds);
      if (*lattice) {
        emit(lattice_report(a), format, lattice_text);
      } else if (*classify) {
        emit(classify_report(a), format, classify_text);
      } else {
        const auto gens = parse_generators(*a.module(), sub);
        const NodeId k = a.lattice().id_of(generate(a.module(), gens));
        emit(supplements_report(a, k, kind.empty() ? std::nullopt : parse_kind(kind)), format, supplements_text);
      }
      return 0;
    }
    if (*suite) {
      SuiteConfig config;
      config.bounds = bounds;
      config.seed = seed;
      config.max_witnesses = max_witnesses;
      const auto f = parse_fault(fault);
      if (!f) throw Error("unknown fault '" + fault + "'");
      config.fault = *f;
      std::vector<CorpusEntry> entries;
      if (corpus == "builtin") {
        CorpusOptions opts;
        opts.bounds = bounds;
        opts.seed = seed;
        entries = builtin_corpus(opts);
      } else {
        entries = load_corpus_dir(corpus, bounds);
      }
      const auto report = run_suite(entries, config);
      if (format == "json")
        std::cout << report_to_json(report).dump(2) << "\n";
      else
        std::cout << report_to_text(report);
      return report.all_passed() ? 0 : 1;
    }
    if (*corpus_cmd) {
      CorpusOptions opts;
      opts.seed = seed;
      const auto entries = builtin_corpus(opts);
      if (*corpus_list) {
        for (const auto& e : entries) {
          std::cout << e.name() << " (order " << e.ring->size() << ")\n  modules:";
          for (const auto& m : e.modules) std::cout << " " << m->name();
          std::cout << "\n";
          for (const auto& t : e.tags) std::cout << "  tag: " << t << "\n";
        }
        return 0;
      }
      if (!ring_name.empty()) {
        for (const auto& e : entries)
          if (e.name() == ring_name) {
            std::cout << serialize_entry(e);
            return 0;
          }
        throw Error("no builtin entry named '" + ring_name + "'");
      }
      if (out_dir.empty()) throw Error("corpus export needs --ring or --dir");
      std::filesystem::create_directories(out_dir);
      for (const auto& e : entries) {
        std::ofstream os(std::filesystem::path(out_dir) / (file_stem_for(e.name()) + ".json"));
        os << serialize_entry(e);
      }
      std::cout << "wrote " << entries.size() << " entries to " << out_dir << "\n";
      return 0;
    }
  } catch (const ParseError& e) {
    std::cerr << "parse error at byte " << e.position() << ": " << e.what() << "\n";
    return kInputError;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
  return 0;
}
