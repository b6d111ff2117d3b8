#include "elhcf/verbalizer.hpp"

#include <vector>

namespace elhcf {

namespace {

std::string label(const Labels& labels, const std::string& symbol) {
  auto it = labels.find(symbol);
  return it == labels.end() ? symbol : it->second;
}

bool reads_as_possession(const std::string& name) {
  return name.size() > 3 && (name.compare(0, 3, "has") == 0 || name.compare(0, 3, "Has") == 0) &&
         name[3] >= 'A' && name[3] <= 'Z';
}

std::string phrase(const Assertion& a, bool negated, const Labels& labels) {
  if (const auto* ca = std::get_if<ConceptAssertion>(&a)) {
    const std::string who = label(labels, ca->individual);
    const std::string what = label(labels, ca->name);
    if (reads_as_possession(ca->name)) {
      return who + (negated ? " did not have " : " had ") + what;
    }
    return who + (negated ? " were not " : " were ") + what;
  }
  const auto& ra = std::get<RoleAssertion>(a);
  return label(labels, ra.subject) + (negated ? " did not have " : " had ") +
         label(labels, ra.role) + " " + label(labels, ra.object);
}

std::string join(const std::vector<std::string>& parts) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i > 0) out += (i + 1 == parts.size()) ? " and " : ", ";
    out += parts[i];
  }
  return out;
}

void replace(std::string& s, std::string_view slot, const std::string& value) {
  const auto pos = s.find(slot);
  if (pos != std::string::npos) s.replace(pos, slot.size(), value);
}

}  // namespace

ParseResult<Labels> parse_labels(std::string_view text) {
  ParseResult<Labels> result;
  Labels labels;
  int line_no = 0;
  std::size_t start = 0;
  while (start < text.size()) {
    const auto nl = text.find('\n', start);
    std::string_view line =
        text.substr(start, nl == std::string_view::npos ? text.size() - start : nl - start);
    start = nl == std::string_view::npos ? text.size() : nl + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty() || line.front() == '#') continue;
    const auto tab = line.find('\t');
    if (tab == std::string_view::npos || tab == 0) {
      result.diagnostics.push_back(
          {line_no, 1, "expected 'symbol<TAB>display text'", Severity::kError});
      continue;
    }
    labels[std::string(line.substr(0, tab))] = std::string(line.substr(tab + 1));
  }
  if (result.diagnostics.empty()) result.value = std::move(labels);
  return result;
}

const Template& default_template(Direction d) {
  static const Template rem{Direction::kRemove,
                            "{individual} would not have been classified as {concept} if {changes}."};
  static const Template add{Direction::kAdd,
                            "{individual} would have been classified as {concept} if {changes}."};
  return d == Direction::kAdd ? add : rem;
}

std::string verbalize(const RankedCounterfactual& rc, const CounterfactualRequest& request,
                      const Labels& labels) {
  const std::string who = label(labels, request.individual);
  const std::string what =
      request.target.is_atomic() ? label(labels, request.target.name()) : to_text(request.target);
  const ChangeSet& cs = rc.change_set;
  if (!cs.feasible) {
    return "The classification of " + who + " as " + what +
           " cannot be changed by updating the assertions about " + who + ".";
  }
  if (cs.empty()) {
    return "No explanation available: the change set for " + who + " is empty.";
  }

  std::vector<std::string> parts;
  for (const auto& a : cs.removed) parts.push_back(phrase(a, true, labels));
  for (const auto& a : cs.added) parts.push_back(phrase(a, false, labels));

  std::string sentence = default_template(request.direction).pattern;
  replace(sentence, "{individual}", who);
  replace(sentence, "{concept}", what);
  replace(sentence, "{changes}", join(parts));
  return sentence;
}

}  // namespace elhcf
