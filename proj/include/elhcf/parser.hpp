// Text format for ELH knowledge bases.
//
//   file      := (line NEWLINE)*
//   line      := statement? comment?          comment := '#' ... end of line
//   statement := concept "SubClassOf" concept
//              | NAME "SubRoleOf" NAME
//              | NAME "(" NAME ")" | NAME "(" NAME "," NAME ")"
//   concept   := prim ("and" prim)*
//   prim      := "Thing" | NAME | NAME "some" prim | "(" concept ")"
//
// "⊑", "⊓" and "⊤" are accepted in place of SubClassOf, and, Thing.
// Names match [A-Za-z_][A-Za-z0-9_-]*; the symbol kind of a name follows
// from where it is used and must be the same everywhere in one input.

#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "elhcf/model.hpp"

namespace elhcf {

enum class Severity : std::uint8_t { kError, kWarning };

struct ParseDiagnostic {
  int line = 1;    // 1-based
  int column = 1;  // 1-based, in code points
  std::string message;
  Severity severity = Severity::kError;
};

// "3:7: error: expected ')'"
std::string format_diagnostic(const ParseDiagnostic& d);

template <typename T>
struct ParseResult {
  std::optional<T> value;
  std::vector<ParseDiagnostic> diagnostics;

  bool ok() const { return value.has_value(); }
  // First error; only meaningful when !ok().
  const ParseDiagnostic& error() const {
    for (const auto& d : diagnostics) {
      if (d.severity == Severity::kError) return d;
    }
    return diagnostics.front();
  }
};

ParseResult<KnowledgeBase> parse_kb(std::string_view text);
ParseResult<Concept> parse_concept(std::string_view text);

// Canonical rendering. parse_kb(serialize_kb(kb)) == kb for every KB.
std::string serialize_kb(const KnowledgeBase& kb);
std::string to_text(const Concept& c);
std::string to_text(const Assertion& a);
std::string to_text(const TBoxAxiom& ax);

}  // namespace elhcf
