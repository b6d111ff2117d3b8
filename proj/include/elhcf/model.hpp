// Domain types for ELH knowledge bases: concepts, axioms, assertions,
// knowledge bases, counterfactual requests and ABox deltas.
//
// Everything here is an immutable value once constructed. Names are kept as
// text in the public types; the signature assigns each name a dense integer
// id (its rank within its kind) which the reasoner uses internally.

#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace elhcf {

// Base of all library errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A name was used in two symbol kinds, or an unknown individual was queried.
class SignatureError : public Error {
 public:
  using Error::Error;
};

// A ChangeSet does not fit the KB it is applied to.
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

// An infeasible ChangeSet (the top-concept case) was applied.
class InfeasibleError : public Error {
 public:
  using Error::Error;
};

// The request is already fulfilled by the knowledge base.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

enum class SymbolKind : std::uint8_t { kConcept, kRole, kIndividual };

std::string_view to_string(SymbolKind kind);

struct SymbolId {
  SymbolKind kind;
  std::uint32_t id;
  std::string text;

  friend bool operator==(const SymbolId&, const SymbolId&) = default;
};

// ---------------------------------------------------------------------------
// Concepts

enum class ConceptKind : std::uint8_t { kTop, kAtomic, kExistential, kIntersection };

// ELH concept description. Intersections are always flat, duplicate free and
// sorted; an intersection with a single distinct conjunct collapses to that
// conjunct.
class Concept {
 public:
  Concept() = default;  // Top

  static Concept top() { return Concept(); }
  static Concept atomic(std::string name);
  static Concept exists(std::string role, Concept filler);
  static Concept intersection(std::vector<Concept> parts);

  ConceptKind kind() const { return kind_; }
  bool is_top() const { return kind_ == ConceptKind::kTop; }
  bool is_atomic() const { return kind_ == ConceptKind::kAtomic; }
  bool is_existential() const { return kind_ == ConceptKind::kExistential; }
  bool is_intersection() const { return kind_ == ConceptKind::kIntersection; }

  // Concept name for atomic concepts, role name for existentials.
  const std::string& name() const { return name_; }
  const std::string& role() const { return name_; }
  const Concept& filler() const { return children_.front(); }

  // Operands of an intersection; for any other concept the concept itself.
  std::vector<Concept> conjuncts() const;
  const std::vector<Concept>& children() const { return children_; }

  // Nesting depth of existential restrictions.
  int role_depth() const;

  // Every concept / role name mentioned, recursively.
  void collect_names(std::set<std::string>& concepts, std::set<std::string>& roles) const;

  friend std::strong_ordering operator<=>(const Concept& a, const Concept& b);
  friend bool operator==(const Concept& a, const Concept& b) {
    return (a <=> b) == std::strong_ordering::equal;
  }

 private:
  ConceptKind kind_ = ConceptKind::kTop;
  std::string name_;
  std::vector<Concept> children_;
};

// ---------------------------------------------------------------------------
// Axioms and assertions

struct ConceptInclusion {
  Concept sub;
  Concept sup;

  friend auto operator<=>(const ConceptInclusion&, const ConceptInclusion&) = default;
  friend bool operator==(const ConceptInclusion&, const ConceptInclusion&) = default;
};

struct RoleInclusion {
  std::string sub;
  std::string sup;

  friend auto operator<=>(const RoleInclusion&, const RoleInclusion&) = default;
};

using TBoxAxiom = std::variant<ConceptInclusion, RoleInclusion>;

// A(x). Field order fixes the canonical order: by individual, then name.
struct ConceptAssertion {
  std::string individual;
  std::string name;

  friend auto operator<=>(const ConceptAssertion&, const ConceptAssertion&) = default;
};

// r(x, y)
struct RoleAssertion {
  std::string subject;
  std::string role;
  std::string object;

  friend auto operator<=>(const RoleAssertion&, const RoleAssertion&) = default;
};

using Assertion = std::variant<ConceptAssertion, RoleAssertion>;
using AssertionSet = std::set<Assertion>;

// The individual an assertion is about (the role subject for role assertions).
const std::string& subject_of(const Assertion& a);

// ---------------------------------------------------------------------------
// Signature

class Signature {
 public:
  Signature() = default;
  Signature(std::set<std::string> concepts, std::set<std::string> roles,
            std::set<std::string> individuals);

  const std::vector<std::string>& concepts() const { return concepts_; }
  const std::vector<std::string>& roles() const { return roles_; }
  const std::vector<std::string>& individuals() const { return individuals_; }

  const std::vector<std::string>& names(SymbolKind kind) const;
  std::optional<SymbolId> lookup(SymbolKind kind, std::string_view text) const;
  bool contains(SymbolKind kind, std::string_view text) const { return lookup(kind, text).has_value(); }
  // Kind of a name, if it is used at all.
  std::optional<SymbolKind> kind_of(std::string_view text) const;

  friend bool operator==(const Signature&, const Signature&) = default;

 private:
  std::vector<std::string> concepts_;
  std::vector<std::string> roles_;
  std::vector<std::string> individuals_;
};

// ---------------------------------------------------------------------------
// Knowledge base

class KnowledgeBase {
 public:
  KnowledgeBase() = default;

  // Deduplicates the inputs and derives the signature. Throws SignatureError
  // when a name occurs in two symbol kinds.
  static KnowledgeBase create(std::vector<TBoxAxiom> tbox, AssertionSet abox);

  const std::vector<TBoxAxiom>& tbox() const { return tbox_; }
  const AssertionSet& abox() const { return abox_; }
  const Signature& signature() const { return signature_; }

  // Same TBox, different ABox. Names of the current signature are kept even
  // when the new ABox no longer mentions them.
  KnowledgeBase with_abox(AssertionSet abox) const;

  bool has_individual(std::string_view x) const {
    return signature_.contains(SymbolKind::kIndividual, x);
  }
  // Throws SignatureError for unknown individuals.
  void require_individual(std::string_view x) const;

  // Structural equality over axioms and assertions.
  friend bool operator==(const KnowledgeBase& a, const KnowledgeBase& b) {
    return a.tbox_ == b.tbox_ && a.abox_ == b.abox_;
  }

 private:
  static KnowledgeBase build(std::vector<TBoxAxiom> tbox, AssertionSet abox, const Signature* base);

  std::vector<TBoxAxiom> tbox_;
  AssertionSet abox_;
  Signature signature_;
};

// ---------------------------------------------------------------------------
// Requests, deltas, features

enum class Direction : std::uint8_t { kAdd, kRemove };

std::string_view to_string(Direction d);
std::optional<Direction> parse_direction(std::string_view text);

struct CounterfactualRequest {
  Concept target;  // the C of C(x)
  std::string individual;
  Direction direction = Direction::kRemove;
};

struct ChangeSet {
  AssertionSet removed;
  AssertionSet added;
  bool feasible = true;

  bool empty() const { return removed.empty() && added.empty(); }
  // Swaps removed and added.
  ChangeSet inverted() const { return {added, removed, feasible}; }

  friend auto operator<=>(const ChangeSet&, const ChangeSet&) = default;
};

struct FeatureSet {
  std::set<std::string> concept_names;
  std::set<std::string> role_names;

  friend bool operator==(const FeatureSet&, const FeatureSet&) = default;
};

// Concept names asserted for x and role names with x in subject position.
// Empty for individuals the ABox does not mention.
FeatureSet feature_set(const KnowledgeBase& kb, std::string_view x);

// K -> K'. The original KB is left untouched.
KnowledgeBase apply_changeset(const KnowledgeBase& kb, const ChangeSet& cs);

// Non-negative rational number, always stored in lowest terms.
class Rational {
 public:
  Rational() = default;
  Rational(std::int64_t num, std::int64_t den);

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }
  double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }
  std::string to_string() const;

  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);
  friend bool operator==(const Rational& a, const Rational& b) = default;

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

}  // namespace elhcf
