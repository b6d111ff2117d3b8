// elhcf validate|check|explain|materialize
//
// Exit codes: 0 success, 1 usage, 2 parse/validation, 3 request already
// fulfilled, 4 I/O.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "elhcf/explain.hpp"
#include "elhcf/parser.hpp"
#include "elhcf/reasoner.hpp"

namespace {

enum Exit : int { kOk = 0, kUsage = 1, kInvalid = 2, kPrecondition = 3, kIo = 4 };

struct ExitError {
  int code;
  std::string message;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ExitError{kIo, "cannot read " + path};
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

template <typename T>
T take(elhcf::ParseResult<T> r, const std::string& where) {
  for (const auto& d : r.diagnostics) std::cerr << where << ":" << elhcf::format_diagnostic(d) << '\n';
  if (!r.ok()) throw ExitError{kInvalid, ""};
  return std::move(*r.value);
}

elhcf::KnowledgeBase load_kb(const std::string& path) {
  return take(elhcf::parse_kb(read_file(path)), path);
}

// Names unknown to the KB are fine; names of the wrong kind are not.
elhcf::Concept load_concept(const std::string& text, const elhcf::KnowledgeBase& kb) {
  elhcf::Concept c = take(elhcf::parse_concept(text), "concept");
  std::set<std::string> concepts, roles;
  c.collect_names(concepts, roles);
  const auto clash = [&](const std::string& name, elhcf::SymbolKind expected) {
    const auto kind = kb.signature().kind_of(name);
    if (kind && *kind != expected) {
      throw ExitError{kInvalid, "'" + name + "' is used as a " +
                                    std::string(elhcf::to_string(expected)) + " but the KB declares it a " +
                                    std::string(elhcf::to_string(*kind))};
    }
  };
  for (const auto& n : concepts) clash(n, elhcf::SymbolKind::kConcept);
  for (const auto& n : roles) clash(n, elhcf::SymbolKind::kRole);
  return c;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Counterfactual explanations for ELH knowledge bases"};
  app.require_subcommand(1);

  std::string kb_path, concept_text, individual, out_path, labels_path;
  std::string direction = "rem", rank = "min", format = "text", materialize_flag = "on";
  std::optional<std::size_t> max_candidates;

  auto* validate = app.add_subcommand("validate", "Parse a KB file and report diagnostics");
  validate->add_option("--kb", kb_path, "KB file")->required();

  auto* check = app.add_subcommand("check", "Decide K |= C(x)");
  check->add_option("--kb", kb_path, "KB file")->required();
  check->add_option("--concept", concept_text, "Concept expression")->required();
  check->add_option("--individual", individual, "Individual name")->required();

  auto* explain = app.add_subcommand("explain", "Compute ranked counterfactual explanations");
  explain->add_option("--kb", kb_path, "KB file")->required();
  explain->add_option("--concept", concept_text, "Concept expression")->required();
  explain->add_option("--individual", individual, "Individual name")->required();
  explain->add_option("--direction", direction, "rem or add")->check(CLI::IsMember({"rem", "add"}));
  explain->add_option("--rank", rank, "min or mean")->check(CLI::IsMember({"min", "mean"}));
  explain->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));
  explain->add_option("--max-candidates", max_candidates, "Report at most N counterfactuals");
  explain->add_option("--materialize", materialize_flag, "on or off")
      ->check(CLI::IsMember({"on", "off"}));
  explain->add_option("--labels", labels_path, "Display labels, one 'symbol<TAB>text' per line");

  auto* materialize = app.add_subcommand("materialize", "Write the materialized KB");
  materialize->add_option("--kb", kb_path, "KB file")->required();
  materialize->add_option("--out", out_path, "Output file (default: stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    const elhcf::KnowledgeBase kb = load_kb(kb_path);

    if (*validate) {
      std::cout << "ok: " << kb.tbox().size() << " axioms, " << kb.abox().size() << " assertions, "
                << kb.signature().individuals().size() << " individuals\n";
      return kOk;
    }

    if (*check) {
      const elhcf::Concept c = load_concept(concept_text, kb);
      kb.require_individual(individual);
      std::cout << (elhcf::instance_check(kb, c, individual) ? "true" : "false") << '\n';
      return kOk;
    }

    if (*materialize) {
      const std::string text = elhcf::serialize_kb(elhcf::materialize(kb));
      if (out_path.empty()) {
        std::cout << text;
      } else {
        std::ofstream out(out_path, std::ios::binary);
        out << text;
        if (!out) throw ExitError{kIo, "cannot write " + out_path};
      }
      return kOk;
    }

    elhcf::ExplainOptions options;
    options.rank = rank == "mean" ? elhcf::RankBy::kMean : elhcf::RankBy::kMin;
    options.materialize = materialize_flag == "on";
    options.max_candidates = max_candidates;
    if (!labels_path.empty()) options.labels = take(elhcf::parse_labels(read_file(labels_path)), labels_path);
    const elhcf::CounterfactualRequest request{load_concept(concept_text, kb), individual,
                                               *elhcf::parse_direction(direction)};
    const elhcf::ExplainReport report = elhcf::explain(kb, request, options);
    if (format == "json") {
      std::cout << elhcf::to_json(report).dump(2) << '\n';
    } else {
      std::cout << elhcf::to_text(report);
    }
    return kOk;
  } catch (const ExitError& e) {
    if (!e.message.empty()) std::cerr << "error: " << e.message << '\n';
    return e.code;
  } catch (const elhcf::PreconditionError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kPrecondition;
  } catch (const elhcf::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInvalid;
  }
}
