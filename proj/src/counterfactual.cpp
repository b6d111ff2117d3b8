#include "elhcf/counterfactual.hpp"

#include <algorithm>
#include <deque>

#include "elhcf/parser.hpp"

namespace elhcf {

namespace {

// Assertions about individuals reachable from x along role assertions. Whether
// K ⊨ C(x) holds depends on this part of the ABox only.
AssertionSet reachable_abox(const KnowledgeBase& kb, const std::string& x) {
  std::map<std::string, std::vector<const Assertion*>> by_subject;
  for (const auto& a : kb.abox()) by_subject[subject_of(a)].push_back(&a);

  AssertionSet out;
  std::set<std::string> seen{x};
  std::deque<std::string> queue{x};
  while (!queue.empty()) {
    const std::string cur = queue.front();
    queue.pop_front();
    auto it = by_subject.find(cur);
    if (it == by_subject.end()) continue;
    for (const Assertion* a : it->second) {
      out.insert(*a);
      if (const auto* ra = std::get_if<RoleAssertion>(a)) {
        if (seen.insert(ra->object).second) queue.push_back(ra->object);
      }
    }
  }
  return out;
}

// K ⊨ c(x), reasoning over the part of the KB that can matter for x.
bool entails(const KnowledgeBase& kb, const Concept& c, const std::string& x) {
  const KnowledgeBase view = KnowledgeBase::create(kb.tbox(), reachable_abox(kb, x));
  const Reasoner reasoner(view);
  if (!view.has_individual(x)) return reasoner.is_subsumed(Concept::top(), c);
  return reasoner.instance_check(c, x);
}

bool fulfills(const KnowledgeBase& k_new, const Concept& c, const std::string& x, Direction d) {
  const bool holds = entails(k_new, c, x);
  return d == Direction::kAdd ? holds : !holds;
}

std::vector<std::string> sort_key(const ChangeSet& cs) {
  std::vector<std::string> key;
  for (const auto& a : cs.removed) key.push_back("-" + to_text(a));
  for (const auto& a : cs.added) key.push_back("+" + to_text(a));
  return key;
}

// Ascending by the measure, nulls last, then by the canonical rendering of
// the change set.
template <typename Proj>
void rank_by(std::vector<RankedCounterfactual>& v, Proj measure) {
  std::stable_sort(v.begin(), v.end(),
                   [&](const RankedCounterfactual& a, const RankedCounterfactual& b) {
                     const auto ma = measure(a);
                     const auto mb = measure(b);
                     if (ma.has_value() != mb.has_value()) return ma.has_value();
                     if (ma && mb && *ma != *mb) return *ma < *mb;
                     return sort_key(a.change_set) < sort_key(b.change_set);
                   });
  for (std::size_t i = 0; i < v.size(); ++i) v[i].rank = static_cast<int>(i) + 1;
}

std::size_t sym_diff_size(const std::set<std::string>& p, const std::set<std::string>& q) {
  std::size_t n = 0;
  auto i = p.begin();
  auto j = q.begin();
  while (i != p.end() && j != q.end()) {
    if (*i < *j) {
      ++n;
      ++i;
    } else if (*j < *i) {
      ++n;
      ++j;
    } else {
      ++i;
      ++j;
    }
  }
  return n + static_cast<std::size_t>(std::distance(i, p.end())) +
         static_cast<std::size_t>(std::distance(j, q.end()));
}

// |Δ| over concept names plus |Δ| over role names.
int feature_distance(const FeatureSet& a, const FeatureSet& b) {
  return static_cast<int>(sym_diff_size(a.concept_names, b.concept_names) +
                          sym_diff_size(a.role_names, b.role_names));
}

class FreshNames {
 public:
  explicit FreshNames(const Signature& sig) : sig_(sig) {}

  std::string next() {
    for (;;) {
      std::string name = "_cf_fresh_" + std::to_string(++n_);
      if (!sig_.kind_of(name)) return name;
    }
  }

 private:
  const Signature& sig_;
  int n_ = 0;
};

void assert_concept(const KnowledgeBase& kb, const Concept& c, const std::string& x,
                    FreshNames& fresh, std::vector<Assertion>& out) {
  for (const auto& part : c.conjuncts()) {
    if (part.is_atomic()) {
      Assertion a = ConceptAssertion{x, part.name()};
      if (!kb.abox().count(a)) out.push_back(std::move(a));
    } else if (part.is_existential()) {
      std::string y = fresh.next();
      out.push_back(RoleAssertion{x, part.role(), y});
      assert_concept(kb, part.filler(), y, fresh, out);
    }
  }
}

}  // namespace

// ---------------------------------------------------------------------------
// Candidate search

CandidateSearch::CandidateSearch(const Reasoner& reasoner, std::string individual)
    : reasoner_(reasoner), x_(std::move(individual)) {
  std::set<Concept> lhs;
  for (const auto& ax : reasoner_.kb().tbox()) {
    if (const auto* ci = std::get_if<ConceptInclusion>(&ax)) lhs.insert(ci->sub);
  }
  lhs_.assign(lhs.begin(), lhs.end());
}

bool CandidateSearch::holds_for_individual(const Concept& c) {
  auto [it, inserted] = holds_cache_.try_emplace(c, false);
  if (inserted) it->second = reasoner_.instance_check(c, x_);
  return it->second;
}

bool CandidateSearch::subsumed(const Concept& lhs, const Concept& rhs) {
  auto [it, inserted] = subsumed_cache_.try_emplace({lhs, rhs}, false);
  if (inserted) it->second = reasoner_.is_subsumed(lhs, rhs);
  return it->second;
}

void CandidateSearch::find_candidates(const ConceptSet& c_set, ConceptSet visited,
                                      ConceptSet relevant) {
  relevant.insert(c_set.begin(), c_set.end());

  // Left-hand sides subsumed by some member of c_set, not yet visited, and
  // holding for x.
  std::vector<Concept> subsumees;
  for (const auto& e : lhs_) {
    if (visited.count(e) || !holds_for_individual(e)) continue;
    for (const auto& c : c_set) {
      if (subsumed(e, c)) {
        subsumees.push_back(e);
        break;
      }
    }
  }

  HittingFamily h;
  for (const auto& e : subsumees) {
    if (e.is_intersection()) {
      h.families.emplace_back(e.children().begin(), e.children().end());
    } else {
      relevant.insert(e);
    }
  }
  visited.insert(subsumees.begin(), subsumees.end());

  const auto choices = minimal_hitting_sets(h);
  if (choices.empty()) {
    candidates_.insert(std::move(relevant));
    return;
  }
  for (const auto& p : choices) find_candidates(p, visited, relevant);
}

std::set<ConceptSet> find_candidates(const Reasoner& reasoner, const ConceptSet& c_set,
                                     const ConceptSet& visited, const ConceptSet& relevant,
                                     const std::string& x) {
  CandidateSearch search(reasoner, x);
  search.find_candidates(c_set, visited, relevant);
  return search.candidates();
}

ChangeSet removal_for(const Reasoner& reasoner, const ConceptSet& candidate, const std::string& x) {
  const KnowledgeBase& kb = reasoner.kb();
  ChangeSet cs;
  for (const auto& member : candidate) {
    if (reasoner.is_subsumed(Concept::top(), member)) return ChangeSet{{}, {}, false};
  }
  for (const auto& member : candidate) {
    if (member.is_atomic()) {
      Assertion a = ConceptAssertion{x, member.name()};
      if (kb.abox().count(a)) cs.removed.insert(std::move(a));
    } else if (member.is_existential()) {
      // Edges of sub-roles of r would entail ∃r.A again.
      for (const auto& a : kb.abox()) {
        const auto* ra = std::get_if<RoleAssertion>(&a);
        if (ra == nullptr || ra->subject != x) continue;
        if (reasoner.is_subrole(ra->role, member.role()) &&
            reasoner.instance_check(member.filler(), ra->object)) {
          cs.removed.insert(a);
        }
      }
    }
  }
  return cs;
}

// ---------------------------------------------------------------------------
// Measures

int edit_distance(const KnowledgeBase& k_orig, const KnowledgeBase& k_new, const std::string& x) {
  return feature_distance(feature_set(k_orig, x), feature_set(k_new, x));
}

Likeliness likeliness(const std::set<std::string>& negatives, const KnowledgeBase& k_new,
                      const std::string& x) {
  if (negatives.empty()) return {};
  const FeatureSet fx = feature_set(k_new, x);
  std::int64_t min = -1;
  std::int64_t sum = 0;
  for (const auto& y : negatives) {
    const std::int64_t d = feature_distance(fx, feature_set(k_new, y));
    min = min < 0 ? d : std::min(min, d);
    sum += d;
  }
  return {min, Rational(sum, static_cast<std::int64_t>(negatives.size()))};
}

Likeliness likeliness(const KnowledgeBase& kb, const KnowledgeBase& k_new, const Concept& c,
                      const std::string& x) {
  return likeliness(Reasoner(kb).negative_individuals(c), k_new, x);
}

bool verify_fulfillment(const KnowledgeBase& k_new, const CounterfactualRequest& request) {
  return fulfills(k_new, request.target, request.individual, request.direction);
}

std::vector<ChangeSet> prune_redundant(const KnowledgeBase& kb, const CounterfactualRequest& request,
                                       const std::vector<ChangeSet>& candidates) {
  std::vector<ChangeSet> kept;
  for (const auto& cs : candidates) {
    const KnowledgeBase k_new = apply_changeset(kb, cs);
    const AssertionSet& changed = request.direction == Direction::kRemove ? cs.removed : cs.added;
    bool redundant = false;
    for (const auto& a : changed) {
      AssertionSet abox = k_new.abox();
      if (request.direction == Direction::kRemove) {
        abox.insert(a);
      } else {
        abox.erase(a);
      }
      if (verify_fulfillment(k_new.with_abox(std::move(abox)), request)) {
        redundant = true;
        break;
      }
    }
    if (!redundant) kept.push_back(cs);
  }
  return kept;
}

// ---------------------------------------------------------------------------
// Requests

NegativeResult create_candidates_neg(const KnowledgeBase& kb, const Concept& c, const std::string& x) {
  kb.require_individual(x);
  const Reasoner reasoner(kb);
  if (!reasoner.instance_check(c, x)) {
    throw PreconditionError("the request is already fulfilled: " + x + " is not an instance of " +
                            to_text(c));
  }
  const CounterfactualRequest request{c, x, Direction::kRemove};

  CandidateSearch search(reasoner, x);
  for (const auto& conjunct : c.conjuncts()) search.find_candidates({conjunct}, {}, {});

  NegativeResult result;
  std::set<ChangeSet> distinct;
  for (const auto& candidate : search.candidates()) distinct.insert(removal_for(reasoner, candidate, x));
  result.all_candidates.assign(distinct.begin(), distinct.end());

  std::vector<ChangeSet> sound;
  for (const auto& cs : result.all_candidates) {
    if (cs.feasible && verify_fulfillment(apply_changeset(kb, cs), request)) sound.push_back(cs);
  }
  result.non_redundant = prune_redundant(kb, request, sound);
  if (result.non_redundant.empty()) return result;

  std::vector<RankedCounterfactual> scored;
  int best = -1;
  for (const auto& cs : result.non_redundant) {
    const int d = edit_distance(kb, apply_changeset(kb, cs), x);
    if (best < 0 || d < best) best = d;
    scored.push_back({cs, d, std::nullopt, std::nullopt, 0});
  }
  const auto negatives = reasoner.negative_individuals(c);
  std::vector<RankedCounterfactual> cfs;
  for (auto& rc : scored) {
    if (rc.edit_distance != best) continue;
    const Likeliness l = likeliness(negatives, apply_changeset(kb, rc.change_set), x);
    rc.l_min = l.l_min;
    rc.l_mean = l.l_mean;
    cfs.push_back(std::move(rc));
  }
  result.by_min = cfs;
  rank_by(result.by_min, [](const RankedCounterfactual& r) { return r.l_min; });
  result.by_mean = std::move(cfs);
  rank_by(result.by_mean, [](const RankedCounterfactual& r) { return r.l_mean; });
  return result;
}

ChangeSet create_candidates_pos(const KnowledgeBase& kb, const Concept& c, const std::string& x) {
  kb.require_individual(x);
  if (entails(kb, c, x)) {
    throw PreconditionError("the request is already fulfilled: " + x + " is an instance of " +
                            to_text(c));
  }
  FreshNames fresh(kb.signature());
  std::vector<Assertion> added;
  assert_concept(kb, c, x, fresh, added);

  // Conjuncts that already hold, or follow from the other additions, are
  // dropped again; what remains is subset-minimal.
  const CounterfactualRequest request{c, x, Direction::kAdd};
  ChangeSet cs{{}, AssertionSet(added.begin(), added.end()), true};
  std::vector<Assertion> order(cs.added.rbegin(), cs.added.rend());
  for (const auto& a : order) {
    ChangeSet trial = cs;
    trial.added.erase(a);
    if (verify_fulfillment(apply_changeset(kb, trial), request)) cs = std::move(trial);
  }
  return cs;
}

}  // namespace elhcf
