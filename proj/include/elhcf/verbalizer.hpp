// Natural-language rendering of counterfactuals.
//
//   rem: "x would not have been classified as C if x were not A and x did not have r y."
//   add: "x would have been classified as C if x were A and x had r y."
//
// Concept names of the form hasX / HasX read as possessions ("did not have
// hasScales"), all other concept names as properties ("were not Male").
// A labels map replaces symbol text with display text.

#pragma once

#include <map>
#include <string>
#include <string_view>

#include "elhcf/counterfactual.hpp"
#include "elhcf/model.hpp"
#include "elhcf/parser.hpp"

namespace elhcf {

using Labels = std::map<std::string, std::string>;

// Lines "symbol<TAB>display text"; blank lines and '#' comments are skipped.
ParseResult<Labels> parse_labels(std::string_view text);

struct Template {
  Direction direction;
  std::string pattern;  // slots: {individual} {concept} {changes}
  std::string language = "en";
};

const Template& default_template(Direction d);

// Single sentence for a feasible, non-empty counterfactual; an explanatory
// message otherwise.
std::string verbalize(const RankedCounterfactual& rc, const CounterfactualRequest& request,
                      const Labels& labels = {});

}  // namespace elhcf
