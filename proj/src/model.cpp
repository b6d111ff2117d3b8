#include "elhcf/model.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace elhcf {

std::string_view to_string(SymbolKind kind) {
  switch (kind) {
    case SymbolKind::kConcept:
      return "concept";
    case SymbolKind::kRole:
      return "role";
    case SymbolKind::kIndividual:
      return "individual";
  }
  return "?";
}

std::string_view to_string(Direction d) { return d == Direction::kAdd ? "add" : "rem"; }

std::optional<Direction> parse_direction(std::string_view text) {
  if (text == "add") return Direction::kAdd;
  if (text == "rem") return Direction::kRemove;
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Concept

Concept Concept::atomic(std::string name) {
  Concept c;
  c.kind_ = ConceptKind::kAtomic;
  c.name_ = std::move(name);
  return c;
}

Concept Concept::exists(std::string role, Concept filler) {
  Concept c;
  c.kind_ = ConceptKind::kExistential;
  c.name_ = std::move(role);
  c.children_.push_back(std::move(filler));
  return c;
}

Concept Concept::intersection(std::vector<Concept> parts) {
  std::vector<Concept> flat;
  for (auto& p : parts) {
    if (p.is_intersection()) {
      for (auto& q : p.children_) flat.push_back(std::move(q));
    } else {
      flat.push_back(std::move(p));
    }
  }
  std::sort(flat.begin(), flat.end());
  flat.erase(std::unique(flat.begin(), flat.end()), flat.end());
  if (flat.empty()) return top();
  if (flat.size() == 1) return std::move(flat.front());
  Concept c;
  c.kind_ = ConceptKind::kIntersection;
  c.children_ = std::move(flat);
  return c;
}

std::vector<Concept> Concept::conjuncts() const {
  if (is_intersection()) return children_;
  return {*this};
}

int Concept::role_depth() const {
  switch (kind_) {
    case ConceptKind::kTop:
    case ConceptKind::kAtomic:
      return 0;
    case ConceptKind::kExistential:
      return 1 + filler().role_depth();
    case ConceptKind::kIntersection: {
      int d = 0;
      for (const auto& c : children_) d = std::max(d, c.role_depth());
      return d;
    }
  }
  return 0;
}

void Concept::collect_names(std::set<std::string>& concepts, std::set<std::string>& roles) const {
  switch (kind_) {
    case ConceptKind::kTop:
      break;
    case ConceptKind::kAtomic:
      concepts.insert(name_);
      break;
    case ConceptKind::kExistential:
      roles.insert(name_);
      filler().collect_names(concepts, roles);
      break;
    case ConceptKind::kIntersection:
      for (const auto& c : children_) c.collect_names(concepts, roles);
      break;
  }
}

std::strong_ordering operator<=>(const Concept& a, const Concept& b) {
  if (auto c = a.kind_ <=> b.kind_; c != 0) return c;
  if (auto c = a.name_.compare(b.name_); c != 0) {
    return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  const std::size_t n = std::min(a.children_.size(), b.children_.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (auto c = a.children_[i] <=> b.children_[i]; c != 0) return c;
  }
  return a.children_.size() <=> b.children_.size();
}

const std::string& subject_of(const Assertion& a) {
  return std::visit(
      [](const auto& v) -> const std::string& {
        if constexpr (std::is_same_v<std::decay_t<decltype(v)>, ConceptAssertion>) {
          return v.individual;
        } else {
          return v.subject;
        }
      },
      a);
}

// ---------------------------------------------------------------------------
// Signature

Signature::Signature(std::set<std::string> concepts, std::set<std::string> roles,
                     std::set<std::string> individuals)
    : concepts_(concepts.begin(), concepts.end()),
      roles_(roles.begin(), roles.end()),
      individuals_(individuals.begin(), individuals.end()) {}

const std::vector<std::string>& Signature::names(SymbolKind kind) const {
  switch (kind) {
    case SymbolKind::kConcept:
      return concepts_;
    case SymbolKind::kRole:
      return roles_;
    case SymbolKind::kIndividual:
      break;
  }
  return individuals_;
}

std::optional<SymbolId> Signature::lookup(SymbolKind kind, std::string_view text) const {
  const auto& v = names(kind);
  auto it = std::lower_bound(v.begin(), v.end(), text);
  if (it == v.end() || *it != text) return std::nullopt;
  return SymbolId{kind, static_cast<std::uint32_t>(it - v.begin()), *it};
}

std::optional<SymbolKind> Signature::kind_of(std::string_view text) const {
  for (auto kind : {SymbolKind::kConcept, SymbolKind::kRole, SymbolKind::kIndividual}) {
    if (contains(kind, text)) return kind;
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// KnowledgeBase

namespace {

struct SymbolCollector {
  std::set<std::string> concepts, roles, individuals;

  void add(const TBoxAxiom& ax) {
    if (const auto* ci = std::get_if<ConceptInclusion>(&ax)) {
      ci->sub.collect_names(concepts, roles);
      ci->sup.collect_names(concepts, roles);
    } else {
      const auto& ri = std::get<RoleInclusion>(ax);
      roles.insert(ri.sub);
      roles.insert(ri.sup);
    }
  }

  void add(const Assertion& a) {
    if (const auto* ca = std::get_if<ConceptAssertion>(&a)) {
      concepts.insert(ca->name);
      individuals.insert(ca->individual);
    } else {
      const auto& ra = std::get<RoleAssertion>(a);
      roles.insert(ra.role);
      individuals.insert(ra.subject);
      individuals.insert(ra.object);
    }
  }

  void check_disjoint() const {
    auto clash = [](const std::set<std::string>& a, const std::set<std::string>& b,
                    SymbolKind ka, SymbolKind kb) {
      for (const auto& name : a) {
        if (b.count(name)) {
          throw SignatureError("name '" + name + "' is used both as " + std::string(to_string(ka)) +
                               " and as " + std::string(to_string(kb)));
        }
      }
    };
    clash(concepts, roles, SymbolKind::kConcept, SymbolKind::kRole);
    clash(concepts, individuals, SymbolKind::kConcept, SymbolKind::kIndividual);
    clash(roles, individuals, SymbolKind::kRole, SymbolKind::kIndividual);
  }
};

}  // namespace

KnowledgeBase KnowledgeBase::create(std::vector<TBoxAxiom> tbox, AssertionSet abox) {
  return build(std::move(tbox), std::move(abox), nullptr);
}

KnowledgeBase KnowledgeBase::build(std::vector<TBoxAxiom> tbox, AssertionSet abox,
                                   const Signature* base) {
  std::sort(tbox.begin(), tbox.end());
  tbox.erase(std::unique(tbox.begin(), tbox.end()), tbox.end());

  SymbolCollector symbols;
  if (base != nullptr) {
    symbols.concepts.insert(base->concepts().begin(), base->concepts().end());
    symbols.roles.insert(base->roles().begin(), base->roles().end());
    symbols.individuals.insert(base->individuals().begin(), base->individuals().end());
  }
  for (const auto& ax : tbox) symbols.add(ax);
  for (const auto& a : abox) symbols.add(a);
  symbols.check_disjoint();

  KnowledgeBase kb;
  kb.tbox_ = std::move(tbox);
  kb.abox_ = std::move(abox);
  kb.signature_ = Signature(std::move(symbols.concepts), std::move(symbols.roles),
                            std::move(symbols.individuals));
  return kb;
}

KnowledgeBase KnowledgeBase::with_abox(AssertionSet abox) const {
  return build(tbox_, std::move(abox), &signature_);
}

void KnowledgeBase::require_individual(std::string_view x) const {
  if (!has_individual(x)) {
    throw SignatureError("unknown individual '" + std::string(x) + "'");
  }
}

// ---------------------------------------------------------------------------

FeatureSet feature_set(const KnowledgeBase& kb, std::string_view x) {
  FeatureSet fs;
  for (const auto& a : kb.abox()) {
    if (const auto* ca = std::get_if<ConceptAssertion>(&a)) {
      if (ca->individual == x) fs.concept_names.insert(ca->name);
    } else {
      const auto& ra = std::get<RoleAssertion>(a);
      if (ra.subject == x) fs.role_names.insert(ra.role);
    }
  }
  return fs;
}

KnowledgeBase apply_changeset(const KnowledgeBase& kb, const ChangeSet& cs) {
  if (!cs.feasible) throw InfeasibleError("cannot apply an infeasible change set");
  AssertionSet abox = kb.abox();
  for (const auto& a : cs.removed) {
    if (abox.erase(a) == 0) throw ConsistencyError("removed assertion is not in the ABox");
  }
  for (const auto& a : cs.added) {
    if (!abox.insert(a).second) throw ConsistencyError("added assertion is already in the ABox");
  }
  return kb.with_abox(std::move(abox));
}

// ---------------------------------------------------------------------------

Rational::Rational(std::int64_t num, std::int64_t den) {
  if (den <= 0 || num < 0) throw std::invalid_argument("Rational: expected num >= 0, den > 0");
  const auto g = std::gcd(num, den);
  num_ = num / g;
  den_ = den / g;
}

std::string Rational::to_string() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  return a.num_ * b.den_ <=> b.num_ * a.den_;
}

}  // namespace elhcf
