#include <algorithm>

#include "elhcf/counterfactual.hpp"

namespace elhcf {

namespace {

bool intersects(const ConceptSet& a, const ConceptSet& b) {
  return std::any_of(a.begin(), a.end(), [&](const Concept& c) { return b.count(c) > 0; });
}

bool is_subset(const ConceptSet& a, const ConceptSet& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

// Drops every set that has a proper subset in the collection.
std::vector<ConceptSet> minimize(std::set<ConceptSet> sets) {
  std::vector<ConceptSet> v(sets.begin(), sets.end());
  std::sort(v.begin(), v.end(),
            [](const ConceptSet& a, const ConceptSet& b) { return a.size() < b.size(); });
  std::vector<ConceptSet> kept;
  for (auto& s : v) {
    const bool dominated = std::any_of(kept.begin(), kept.end(),
                                       [&](const ConceptSet& k) { return is_subset(k, s); });
    if (!dominated) kept.push_back(std::move(s));
  }
  return kept;
}

}  // namespace

// Berge's incremental construction: extend the minimal transversals of the
// first k families to the (k+1)-th and re-minimize.
std::vector<ConceptSet> minimal_hitting_sets(const HittingFamily& h) {
  if (h.families.empty()) return {};
  std::vector<ConceptSet> current{ConceptSet{}};
  for (const auto& family : h.families) {
    if (family.empty()) return {};
    std::set<ConceptSet> next;
    for (const auto& t : current) {
      if (intersects(t, family)) {
        next.insert(t);
        continue;
      }
      for (const auto& e : family) {
        ConceptSet extended = t;
        extended.insert(e);
        next.insert(std::move(extended));
      }
    }
    current = minimize(std::move(next));
  }
  std::sort(current.begin(), current.end(), [](const ConceptSet& a, const ConceptSet& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return current;
}

}  // namespace elhcf
