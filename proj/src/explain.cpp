#include "elhcf/explain.hpp"

#include <sstream>

#include "elhcf/parser.hpp"
#include "elhcf/reasoner.hpp"

namespace elhcf {

namespace {

nlohmann::json assertion_list(const AssertionSet& s) {
  auto out = nlohmann::json::array();
  for (const auto& a : s) out.push_back(to_text(a));
  return out;
}

std::string_view to_string(RankBy r) { return r == RankBy::kMin ? "min" : "mean"; }

// For an addition, the individuals that already are instances of the target
// play the part of the negative individuals.
std::set<std::string> instances_other_than(const Reasoner& reasoner, const Concept& c,
                                           const std::string& x) {
  std::set<std::string> out;
  for (const auto& y : reasoner.kb().signature().individuals()) {
    if (y != x && reasoner.instance_check(c, y)) out.insert(y);
  }
  return out;
}

}  // namespace

ExplainReport explain(const KnowledgeBase& kb, const CounterfactualRequest& request,
                      const ExplainOptions& options) {
  kb.require_individual(request.individual);
  const KnowledgeBase input = options.materialize ? materialize(kb) : kb;

  ExplainReport report;
  report.request = request;
  report.materialized = options.materialize;
  report.rank = options.rank;

  std::vector<RankedCounterfactual> ranked;
  if (request.direction == Direction::kRemove) {
    NegativeResult neg = create_candidates_neg(input, request.target, request.individual);
    report.candidates_total = neg.all_candidates.size();
    report.infeasible = neg.infeasible();
    ranked = neg.ranked(options.rank);
  } else {
    const ChangeSet cs = create_candidates_pos(input, request.target, request.individual);
    const KnowledgeBase k_new = apply_changeset(input, cs);
    const Likeliness l = likeliness(
        instances_other_than(Reasoner(input), request.target, request.individual), k_new,
        request.individual);
    report.candidates_total = 1;
    ranked.push_back(RankedCounterfactual{cs, edit_distance(input, k_new, request.individual),
                                          l.l_min, l.l_mean, 1});
  }

  if (report.infeasible) {
    RankedCounterfactual none;
    none.change_set.feasible = false;
    report.message = verbalize(none, request, options.labels);
  }
  if (options.max_candidates && ranked.size() > *options.max_candidates) {
    ranked.resize(*options.max_candidates);
  }
  for (auto& rc : ranked) {
    std::string sentence = verbalize(rc, request, options.labels);
    report.counterfactuals.push_back({std::move(rc), std::move(sentence)});
  }
  return report;
}

nlohmann::json to_json(const ExplainReport& report) {
  nlohmann::json j;
  j["request"] = {{"concept", to_text(report.request.target)},
                  {"individual", report.request.individual},
                  {"direction", std::string(to_string(report.request.direction))}};
  j["materialized"] = report.materialized;
  j["rank"] = std::string(to_string(report.rank));
  j["candidatesTotal"] = report.candidates_total;
  j["infeasible"] = report.infeasible;
  if (report.infeasible) j["message"] = report.message;
  auto cfs = nlohmann::json::array();
  for (const auto& e : report.counterfactuals) {
    const auto& rc = e.counterfactual;
    nlohmann::json c;
    c["rank"] = rc.rank;
    c["removed"] = assertion_list(rc.change_set.removed);
    c["added"] = assertion_list(rc.change_set.added);
    c["editDistance"] = rc.edit_distance;
    c["lMin"] = rc.l_min ? nlohmann::json(*rc.l_min) : nlohmann::json(nullptr);
    if (rc.l_mean) {
      c["lMean"] = {{"value", rc.l_mean->to_double()}, {"exact", rc.l_mean->to_string()}};
    } else {
      c["lMean"] = nullptr;
    }
    c["sentence"] = e.sentence;
    cfs.push_back(std::move(c));
  }
  j["counterfactuals"] = std::move(cfs);
  return j;
}

std::string to_text(const ExplainReport& report) {
  std::ostringstream out;
  if (report.infeasible) {
    out << report.message << '\n';
    return out.str();
  }
  for (const auto& e : report.counterfactuals) {
    const auto& rc = e.counterfactual;
    out << rc.rank << ". " << e.sentence << '\n'
        << "   editDistance=" << rc.edit_distance
        << " lMin=" << (rc.l_min ? std::to_string(*rc.l_min) : "null")
        << " lMean=" << (rc.l_mean ? rc.l_mean->to_string() : "null") << '\n';
  }
  out << "candidates: " << report.candidates_total << '\n';
  return out.str();
}

}  // namespace elhcf
