// ELH reasoning: TBox normalization and saturation with completion rules.
//
// The saturated graph has one node per concept name of the normalized TBox
// (standing for the anonymous elements the TBox forces into existence) and
// one node per named individual. Nodes carry label sets; edges are role
// assertions plus the r-successors introduced by axioms A ⊑ ∃r.B, which
// always point at the concept node of B. Rules, to fixpoint:
//
//   A ∈ L(n), A ⊑ B                         =>  B ∈ L(n)
//   A1, A2 ∈ L(n), A1 ⊓ A2 ⊑ B              =>  B ∈ L(n)
//   A ∈ L(n), A ⊑ ∃r.B                      =>  edge (n, r, node(B))
//   (n, r, m), A ∈ L(m), ∃s.A ⊑ B, r ⊑* s   =>  B ∈ L(n)
//
// The resulting graph is the compact canonical model of the KB; ELH concepts
// are evaluated on it structurally.

#pragma once

#include <map>
#include <memory>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "elhcf/model.hpp"

namespace elhcf {

// Reflexive-transitive closure of the role inclusions.
class RoleHierarchy {
 public:
  RoleHierarchy() = default;
  RoleHierarchy(std::size_t num_roles, const std::vector<std::pair<int, int>>& inclusions);

  std::size_t size() const { return supers_.size(); }
  // r ⊑* s. Ids outside the table only subsume themselves.
  bool subsumes(int r, int s) const;
  const std::vector<int>& supers(int r) const { return supers_[r]; }

 private:
  std::vector<std::vector<int>> supers_;       // sorted
  std::vector<std::vector<bool>> is_super_;
};

// TBox in normal form over integer names. Name 0 is Top, names
// 1..num_user_names() are the signature's concept names in order, the rest
// are fresh names introduced by normalization.
struct NormalizedTBox {
  struct Conj {
    int other;
    int result;
  };
  struct Ex {
    int role;
    int name;
  };

  std::size_t num_names = 1;
  std::size_t num_user_names = 0;
  std::vector<std::vector<int>> told;              // A ⊑ B, indexed by A
  std::vector<std::vector<Conj>> conj;             // A1 ⊓ A2 ⊑ B, indexed by both operands
  std::vector<std::vector<Ex>> exists_rhs;         // A ⊑ ∃r.B, indexed by A -> (r, B)
  std::vector<std::vector<Ex>> exists_lhs;         // ∃r.A ⊑ B, indexed by A -> (r, B)
  RoleHierarchy roles;
  std::map<int, Concept> fresh_names;              // fresh name -> concept it abbreviates

  std::size_t axiom_count() const;
};

// Normalizes the concept inclusions of `tbox`, using `sig` to number names.
NormalizedTBox normalize(const std::vector<TBoxAxiom>& tbox, const Signature& sig);

// Decision procedure for one knowledge base. Construction saturates the KB
// once; every query afterwards reads the saturated index only, so a built
// Reasoner can be shared between threads.
class Reasoner {
 public:
  explicit Reasoner(const KnowledgeBase& kb);
  ~Reasoner();
  Reasoner(Reasoner&&) noexcept;
  Reasoner& operator=(Reasoner&&) noexcept;

  const KnowledgeBase& kb() const { return kb_; }
  const NormalizedTBox& normalized() const;

  // K ⊨ c(x). Throws SignatureError when x is not an individual of the KB.
  bool instance_check(const Concept& c, std::string_view x) const;
  // K ⊨ lhs ⊑ rhs.
  bool is_subsumed(const Concept& lhs, const Concept& rhs) const;
  // r ⊑* s in the role hierarchy.
  bool is_subrole(std::string_view r, std::string_view s) const;

  // Entailed concept names of x (signature names only, without Top).
  std::set<std::string> instance_labels(std::string_view x) const;
  // Role assertions between named individuals closed under the hierarchy.
  std::set<RoleAssertion> derived_role_edges() const;

  // ABox extended with every entailed atomic concept assertion and every
  // role assertion implied by the role hierarchy.
  KnowledgeBase materialize() const;

  // Individuals y with K ⊭ c(y).
  std::set<std::string> negative_individuals(const Concept& c) const;

 private:
  struct Index;
  KnowledgeBase kb_;
  std::unique_ptr<Index> index_;
};

// One-shot convenience wrappers; each builds a Reasoner.
bool is_subsumed(const KnowledgeBase& kb, const Concept& lhs, const Concept& rhs);
bool instance_check(const KnowledgeBase& kb, const Concept& c, std::string_view x);
bool is_subrole(const KnowledgeBase& kb, std::string_view r, std::string_view s);
KnowledgeBase materialize(const KnowledgeBase& kb);
std::set<std::string> negative_individuals(const KnowledgeBase& kb, const Concept& c);

}  // namespace elhcf
