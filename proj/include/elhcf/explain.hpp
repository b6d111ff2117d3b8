// End-to-end explanation of one counterfactual request: optional
// materialization, candidate generation, ranking and verbalization.

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "elhcf/counterfactual.hpp"
#include "elhcf/verbalizer.hpp"
#include "json.hpp"

namespace elhcf {

struct ExplainOptions {
  RankBy rank = RankBy::kMin;
  bool materialize = true;
  // Truncates the reported list only; minimality is decided over all candidates.
  std::optional<std::size_t> max_candidates;
  Labels labels;
};

struct ExplainedCounterfactual {
  RankedCounterfactual counterfactual;
  std::string sentence;
};

struct ExplainReport {
  CounterfactualRequest request;
  bool materialized = true;
  RankBy rank = RankBy::kMin;
  std::size_t candidates_total = 0;
  bool infeasible = false;
  std::vector<ExplainedCounterfactual> counterfactuals;
  std::string message;  // set for infeasible requests
};

// Throws PreconditionError when the KB already fulfills the request and
// SignatureError for unknown individuals.
ExplainReport explain(const KnowledgeBase& kb, const CounterfactualRequest& request,
                      const ExplainOptions& options = {});

// Schema: docs/explain-report.schema.json
nlohmann::json to_json(const ExplainReport& report);
std::string to_text(const ExplainReport& report);

}  // namespace elhcf
