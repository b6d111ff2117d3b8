#include "elhcf/parser.hpp"

#include <map>
#include <set>

namespace elhcf {

namespace {

enum class Tok : std::uint8_t {
  kName,
  kLParen,
  kRParen,
  kComma,
  kSubClassOf,
  kSubRoleOf,
  kAnd,
  kSome,
  kThing,
  kEnd,
  kInvalid,
};

struct Token {
  Tok kind;
  std::string text;
  int column;
};

bool is_name_start(char c) {
  return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || c == '_';
}

bool is_name_char(char c) { return is_name_start(c) || (c >= '0' && c <= '9') || c == '-'; }

bool is_continuation_byte(char c) { return (static_cast<unsigned char>(c) & 0xC0) == 0x80; }

Tok keyword(std::string_view word) {
  if (word == "SubClassOf") return Tok::kSubClassOf;
  if (word == "SubRoleOf") return Tok::kSubRoleOf;
  if (word == "and") return Tok::kAnd;
  if (word == "some") return Tok::kSome;
  if (word == "Thing") return Tok::kThing;
  return Tok::kName;
}

// Splits one line (comment already stripped) into tokens. The trailing kEnd
// token carries the column just past the last character.
std::vector<Token> tokenize(std::string_view line) {
  std::vector<Token> out;
  int column = 1;
  std::size_t i = 0;
  auto advance = [&](std::size_t bytes) {
    for (std::size_t k = 0; k < bytes; ++k) {
      if (!is_continuation_byte(line[i + k])) ++column;
    }
    i += bytes;
  };
  while (i < line.size()) {
    const char c = line[i];
    if (c == ' ' || c == '\t' || c == '\r') {
      advance(1);
      continue;
    }
    const int start = column;
    if (is_name_start(c)) {
      std::size_t j = i;
      while (j < line.size() && is_name_char(line[j])) ++j;
      std::string word(line.substr(i, j - i));
      out.push_back({keyword(word), word, start});
      advance(j - i);
      continue;
    }
    switch (c) {
      case '(':
        out.push_back({Tok::kLParen, "(", start});
        advance(1);
        continue;
      case ')':
        out.push_back({Tok::kRParen, ")", start});
        advance(1);
        continue;
      case ',':
        out.push_back({Tok::kComma, ",", start});
        advance(1);
        continue;
      default:
        break;
    }
    if (line.substr(i, 3) == "⊑") {  // ⊑
      out.push_back({Tok::kSubClassOf, "⊑", start});
      advance(3);
      continue;
    }
    if (line.substr(i, 3) == "⊓") {  // ⊓
      out.push_back({Tok::kAnd, "⊓", start});
      advance(3);
      continue;
    }
    if (line.substr(i, 3) == "⊤") {  // ⊤
      out.push_back({Tok::kThing, "⊤", start});
      advance(3);
      continue;
    }
    std::size_t len = 1;
    while (i + len < line.size() && is_continuation_byte(line[i + len])) ++len;
    out.push_back({Tok::kInvalid, std::string(line.substr(i, len)), start});
    advance(len);
  }
  out.push_back({Tok::kEnd, "", column});
  return out;
}

std::string describe(const Token& t) {
  switch (t.kind) {
    case Tok::kEnd:
      return "end of line";
    case Tok::kInvalid:
      return "unknown character '" + t.text + "'";
    default:
      return "'" + t.text + "'";
  }
}

struct SyntaxError {
  int column;
  std::string message;
};

struct NameUse {
  std::string name;
  SymbolKind kind;
  int column;
};

// Recursive-descent parser over the tokens of one line.
class LineParser {
 public:
  explicit LineParser(std::vector<Token> tokens) : toks_(std::move(tokens)) {}

  const Token& peek(std::size_t ahead = 0) const {
    const std::size_t k = std::min(pos_ + ahead, toks_.size() - 1);
    return toks_[k];
  }
  bool at(Tok kind) const { return peek().kind == kind; }
  const std::vector<NameUse>& uses() const { return uses_; }
  std::size_t position() const { return pos_; }

  [[noreturn]] void fail(const std::string& expected) const {
    throw SyntaxError{peek().column, "expected " + expected + ", found " + describe(peek())};
  }

  const Token& expect(Tok kind, const char* what) {
    if (!at(kind)) fail(what);
    return toks_[pos_++];
  }

  std::string name(SymbolKind kind) {
    const Token& t = expect(Tok::kName, "a name");
    uses_.push_back({t.text, kind, t.column});
    return t.text;
  }

  Concept parse_concept_expr() {
    std::vector<Concept> parts;
    parts.push_back(prim());
    while (at(Tok::kAnd)) {
      ++pos_;
      parts.push_back(prim());
    }
    if (parts.size() == 1) return std::move(parts.front());
    return Concept::intersection(std::move(parts));
  }

  Concept prim() {
    if (at(Tok::kThing)) {
      ++pos_;
      return Concept::top();
    }
    if (at(Tok::kLParen)) {
      ++pos_;
      Concept c = parse_concept_expr();
      expect(Tok::kRParen, "')'");
      return c;
    }
    if (at(Tok::kName)) {
      if (peek(1).kind == Tok::kSome) {
        std::string role = name(SymbolKind::kRole);
        ++pos_;
        return Concept::exists(std::move(role), prim());
      }
      return Concept::atomic(name(SymbolKind::kConcept));
    }
    fail("a concept");
  }

  void end() {
    if (!at(Tok::kEnd)) fail("end of line");
  }

 private:
  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  std::vector<NameUse> uses_;
};

using Statement = std::variant<TBoxAxiom, Assertion>;

bool contains_token(const std::vector<Token>& toks, Tok kind) {
  for (const auto& t : toks) {
    if (t.kind == kind) return true;
  }
  return false;
}

// True for "<complex concept> ( NAME )": a concept assertion on a complex
// concept, which the format does not allow.
bool looks_like_complex_assertion(const std::vector<Token>& toks) {
  const std::size_t n = toks.size();  // includes kEnd
  if (n < 5) return false;
  if (toks[n - 2].kind != Tok::kRParen || toks[n - 3].kind != Tok::kName ||
      toks[n - 4].kind != Tok::kLParen) {
    return false;
  }
  std::vector<Token> prefix(toks.begin(), toks.end() - 4);
  prefix.push_back({Tok::kEnd, "", toks[n - 4].column});
  LineParser p(std::move(prefix));
  try {
    p.parse_concept_expr();
    p.end();
    return true;
  } catch (const SyntaxError&) {
    return false;
  }
}

Statement parse_statement(const std::vector<Token>& toks, std::vector<NameUse>& uses) {
  LineParser p(toks);
  Statement result;
  if (contains_token(toks, Tok::kSubRoleOf)) {
    std::string sub = p.name(SymbolKind::kRole);
    p.expect(Tok::kSubRoleOf, "'SubRoleOf'");
    std::string sup = p.name(SymbolKind::kRole);
    p.end();
    result = TBoxAxiom{RoleInclusion{std::move(sub), std::move(sup)}};
  } else if (contains_token(toks, Tok::kSubClassOf)) {
    Concept lhs = p.parse_concept_expr();
    p.expect(Tok::kSubClassOf, "'SubClassOf'");
    Concept rhs = p.parse_concept_expr();
    p.end();
    result = TBoxAxiom{ConceptInclusion{std::move(lhs), std::move(rhs)}};
  } else {
    const bool simple = p.at(Tok::kName) && p.peek(1).kind == Tok::kLParen;
    if (!simple && looks_like_complex_assertion(toks)) {
      throw SyntaxError{toks.front().column,
                        "concept assertions must use a concept name; complex concepts are not "
                        "allowed in the ABox"};
    }
    const Token& head = p.expect(Tok::kName, "a name");
    p.expect(Tok::kLParen, "'('");
    const Token& first = p.expect(Tok::kName, "an individual name");
    if (p.at(Tok::kComma)) {
      p.expect(Tok::kComma, "','");
      const Token& second = p.expect(Tok::kName, "an individual name");
      p.expect(Tok::kRParen, "')'");
      p.end();
      uses.push_back({head.text, SymbolKind::kRole, head.column});
      uses.push_back({first.text, SymbolKind::kIndividual, first.column});
      uses.push_back({second.text, SymbolKind::kIndividual, second.column});
      return Assertion{RoleAssertion{first.text, head.text, second.text}};
    }
    p.expect(Tok::kRParen, "')' or ','");
    p.end();
    uses.push_back({head.text, SymbolKind::kConcept, head.column});
    uses.push_back({first.text, SymbolKind::kIndividual, first.column});
    return Assertion{ConceptAssertion{first.text, head.text}};
  }
  uses.insert(uses.end(), p.uses().begin(), p.uses().end());
  return result;
}

// Tracks the first use of every name and reports kind clashes.
class KindChecker {
 public:
  void check(const std::vector<NameUse>& uses, int line, std::vector<ParseDiagnostic>& diags) {
    for (const auto& u : uses) {
      auto [it, inserted] = first_.try_emplace(u.name, First{u.kind, line, u.column});
      if (inserted || it->second.kind == u.kind) continue;
      diags.push_back({line, u.column,
                       "name '" + u.name + "' is used as " + std::string(to_string(u.kind)) +
                           " here but as " + std::string(to_string(it->second.kind)) +
                           " at line " + std::to_string(it->second.line) + ", column " +
                           std::to_string(it->second.column),
                       Severity::kError});
    }
  }

 private:
  struct First {
    SymbolKind kind;
    int line;
    int column;
  };
  std::map<std::string, First> first_;
};

std::string_view strip_comment(std::string_view line) {
  const auto hash = line.find('#');
  return hash == std::string_view::npos ? line : line.substr(0, hash);
}

bool blank(const std::vector<Token>& toks) { return toks.size() == 1; }

bool has_error(const std::vector<ParseDiagnostic>& diags) {
  for (const auto& d : diags) {
    if (d.severity == Severity::kError) return true;
  }
  return false;
}

}  // namespace

std::string format_diagnostic(const ParseDiagnostic& d) {
  return std::to_string(d.line) + ":" + std::to_string(d.column) + ": " +
         (d.severity == Severity::kError ? "error: " : "warning: ") + d.message;
}

ParseResult<KnowledgeBase> parse_kb(std::string_view text) {
  ParseResult<KnowledgeBase> result;
  KindChecker kinds;
  std::vector<TBoxAxiom> tbox;
  std::set<TBoxAxiom> seen_axioms;
  AssertionSet abox;

  int line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto nl = text.find('\n', start);
    const auto raw = text.substr(start, nl == std::string_view::npos ? text.size() - start : nl - start);
    ++line_no;
    start = nl == std::string_view::npos ? text.size() + 1 : nl + 1;

    const auto toks = tokenize(strip_comment(raw));
    if (blank(toks)) continue;
    try {
      std::vector<NameUse> uses;
      Statement st = parse_statement(toks, uses);
      const std::size_t before = result.diagnostics.size();
      kinds.check(uses, line_no, result.diagnostics);
      if (result.diagnostics.size() != before) continue;

      bool duplicate = false;
      if (auto* ax = std::get_if<TBoxAxiom>(&st)) {
        duplicate = !seen_axioms.insert(*ax).second;
        if (!duplicate) tbox.push_back(std::move(*ax));
      } else {
        duplicate = !abox.insert(std::get<Assertion>(st)).second;
      }
      if (duplicate) {
        result.diagnostics.push_back(
            {line_no, toks.front().column, "duplicate statement ignored", Severity::kWarning});
      }
    } catch (const SyntaxError& e) {
      result.diagnostics.push_back({line_no, e.column, e.message, Severity::kError});
    }
  }

  if (!has_error(result.diagnostics)) {
    result.value = KnowledgeBase::create(std::move(tbox), std::move(abox));
  }
  return result;
}

ParseResult<Concept> parse_concept(std::string_view text) {
  ParseResult<Concept> result;
  if (text.find('\n') != std::string_view::npos) {
    result.diagnostics.push_back(
        {1, static_cast<int>(text.find('\n')) + 1, "concept must fit on one line", Severity::kError});
    return result;
  }
  try {
    LineParser p(tokenize(text));
    Concept c = p.parse_concept_expr();
    p.end();
    KindChecker kinds;
    kinds.check(p.uses(), 1, result.diagnostics);
    if (!has_error(result.diagnostics)) result.value = std::move(c);
  } catch (const SyntaxError& e) {
    result.diagnostics.push_back({1, e.column, e.message, Severity::kError});
  }
  return result;
}

// ---------------------------------------------------------------------------
// Serialization

namespace {

void render(const Concept& c, std::string& out);

void render_prim(const Concept& c, std::string& out) {
  if (c.is_intersection()) {
    out += '(';
    render(c, out);
    out += ')';
  } else {
    render(c, out);
  }
}

void render(const Concept& c, std::string& out) {
  switch (c.kind()) {
    case ConceptKind::kTop:
      out += "Thing";
      break;
    case ConceptKind::kAtomic:
      out += c.name();
      break;
    case ConceptKind::kExistential:
      out += c.role();
      out += " some ";
      render_prim(c.filler(), out);
      break;
    case ConceptKind::kIntersection: {
      bool first = true;
      for (const auto& part : c.children()) {
        if (!first) out += " and ";
        first = false;
        render_prim(part, out);
      }
      break;
    }
  }
}

}  // namespace

std::string to_text(const Concept& c) {
  std::string out;
  render(c, out);
  return out;
}

std::string to_text(const Assertion& a) {
  if (const auto* ca = std::get_if<ConceptAssertion>(&a)) {
    return ca->name + "(" + ca->individual + ")";
  }
  const auto& ra = std::get<RoleAssertion>(a);
  return ra.role + "(" + ra.subject + ", " + ra.object + ")";
}

std::string to_text(const TBoxAxiom& ax) {
  if (const auto* ci = std::get_if<ConceptInclusion>(&ax)) {
    return to_text(ci->sub) + " SubClassOf " + to_text(ci->sup);
  }
  const auto& ri = std::get<RoleInclusion>(ax);
  return ri.sub + " SubRoleOf " + ri.sup;
}

std::string serialize_kb(const KnowledgeBase& kb) {
  std::string out;
  for (const auto& ax : kb.tbox()) {
    out += to_text(ax);
    out += '\n';
  }
  for (const auto& a : kb.abox()) {
    out += to_text(a);
    out += '\n';
  }
  return out;
}

}  // namespace elhcf
