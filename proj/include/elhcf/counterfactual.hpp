// Counterfactual generation for concept assertions.
//
// A removal request <C(x), rem> is answered by walking the subsumption paths
// that lead to C(x): every axiom left-hand side subsumed by a conjunct of C
// and holding for x must be broken, atomic and existential ones by removing
// their assertions, intersections by breaking one conjunct each. The choices
// for intersections are enumerated as minimal hitting sets. An addition
// request <C(x), add> is answered by asserting C's conjuncts for x, using
// fresh individuals for existential restrictions.

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "elhcf/model.hpp"
#include "elhcf/reasoner.hpp"

namespace elhcf {

using ConceptSet = std::set<Concept>;

struct CandidateSet {
  ConceptSet concepts;
  CounterfactualRequest origin;
};

// One family per intersection left-hand side: its conjuncts.
struct HittingFamily {
  std::vector<ConceptSet> families;
};

// All subset-minimal sets that intersect every family, ordered by size and
// then lexicographically. No families yields no hitting sets.
std::vector<ConceptSet> minimal_hitting_sets(const HittingFamily& h);

// Recursive subsumption-path search for one individual. Keeps a cache of
// the subsumption and instance checks it issues, so one search object should
// serve all conjuncts of a request.
class CandidateSearch {
 public:
  CandidateSearch(const Reasoner& reasoner, std::string individual);

  // Adds every candidate set reachable from c_set to candidates().
  void find_candidates(const ConceptSet& c_set, ConceptSet visited, ConceptSet relevant);

  const std::set<ConceptSet>& candidates() const { return candidates_; }

 private:
  bool holds_for_individual(const Concept& c);
  bool subsumed(const Concept& lhs, const Concept& rhs);

  const Reasoner& reasoner_;
  std::string x_;
  std::vector<Concept> lhs_;  // distinct left-hand sides of the TBox
  std::set<ConceptSet> candidates_;
  std::map<Concept, bool> holds_cache_;
  std::map<std::pair<Concept, Concept>, bool> subsumed_cache_;
};

// Candidate sets for a single call find_candidates(kb, c_set, visited, relevant, x).
std::set<ConceptSet> find_candidates(const Reasoner& reasoner, const ConceptSet& c_set,
                                     const ConceptSet& visited, const ConceptSet& relevant,
                                     const std::string& x);

// Removals realizing one candidate set. A member equivalent to Top makes the
// change set infeasible.
ChangeSet removal_for(const Reasoner& reasoner, const ConceptSet& candidate, const std::string& x);

struct Likeliness {
  std::optional<std::int64_t> l_min;
  std::optional<Rational> l_mean;
};

struct RankedCounterfactual {
  ChangeSet change_set;
  int edit_distance = 0;
  std::optional<std::int64_t> l_min;
  std::optional<Rational> l_mean;
  int rank = 0;  // 1-based under the measure of the list it belongs to
};

enum class RankBy : std::uint8_t { kMin, kMean };

struct NegativeResult {
  // One change set per candidate set (deduplicated), infeasible ones included.
  std::vector<ChangeSet> all_candidates;
  // Feasible, fulfilling and non-redundant change sets.
  std::vector<ChangeSet> non_redundant;
  // Minimal edit distance counterfactuals, sorted by l_min and by l_mean.
  std::vector<RankedCounterfactual> by_min;
  std::vector<RankedCounterfactual> by_mean;

  bool infeasible() const { return non_redundant.empty(); }
  const std::vector<RankedCounterfactual>& ranked(RankBy r) const {
    return r == RankBy::kMin ? by_min : by_mean;
  }
};

// All non-redundant removal updates K -> K' with K' ⊭ c(x). Throws
// PreconditionError when K ⊭ c(x).
NegativeResult create_candidates_neg(const KnowledgeBase& kb, const Concept& c, const std::string& x);

// The addition update K -> K' with K' ⊨ c(x). Fresh individuals are named
// _cf_fresh_<n>. Throws PreconditionError when K ⊨ c(x).
ChangeSet create_candidates_pos(const KnowledgeBase& kb, const Concept& c, const std::string& x);

// Size of the symmetric difference of x's feature sets in the two KBs.
int edit_distance(const KnowledgeBase& k_orig, const KnowledgeBase& k_new, const std::string& x);

// Distances from x to the negative individuals of `kb` (K ⊭ c(y)), measured
// on the updated KB. Both measures are null when there are no negatives.
Likeliness likeliness(const KnowledgeBase& kb, const KnowledgeBase& k_new, const Concept& c,
                      const std::string& x);
Likeliness likeliness(const std::set<std::string>& negatives, const KnowledgeBase& k_new,
                      const std::string& x);

// K' ⊢ P.
bool verify_fulfillment(const KnowledgeBase& k_new, const CounterfactualRequest& request);

// Keeps the candidates from which no single changed assertion can be reverted
// while still fulfilling the request.
std::vector<ChangeSet> prune_redundant(const KnowledgeBase& kb, const CounterfactualRequest& request,
                                       const std::vector<ChangeSet>& candidates);

}  // namespace elhcf
