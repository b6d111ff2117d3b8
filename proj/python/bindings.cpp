#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "elhcf/explain.hpp"
#include "elhcf/parser.hpp"
#include "elhcf/reasoner.hpp"

namespace py = pybind11;

namespace {

template <typename T>
T unwrap(elhcf::ParseResult<T> r) {
  if (!r.ok()) throw py::value_error(elhcf::format_diagnostic(r.error()));
  return std::move(*r.value);
}

elhcf::Concept concept_arg(const std::string& text) { return unwrap(elhcf::parse_concept(text)); }

}  // namespace

PYBIND11_MODULE(_elhcf, m) {
  m.doc() = "Counterfactual explanations for ELH knowledge bases";

  // Translators run newest first, so the base class is registered first.
  auto error = py::register_exception<elhcf::Error>(m, "Error", PyExc_ValueError);
  py::register_exception<elhcf::PreconditionError>(m, "PreconditionError", error.ptr());

  py::class_<elhcf::KnowledgeBase>(m, "KnowledgeBase")
      .def_property_readonly("individuals", [](const elhcf::KnowledgeBase& kb) { return kb.signature().individuals(); })
      .def_property_readonly("axiom_count", [](const elhcf::KnowledgeBase& kb) { return kb.tbox().size(); })
      .def_property_readonly("assertion_count", [](const elhcf::KnowledgeBase& kb) { return kb.abox().size(); })
      .def("__eq__", [](const elhcf::KnowledgeBase& a, const elhcf::KnowledgeBase& b) { return a == b; })
      .def("__str__", &elhcf::serialize_kb);

  m.def("parse_kb", [](const std::string& text) { return unwrap(elhcf::parse_kb(text)); }, py::arg("text"),
        "Parse KB text; raises ValueError with 'line:column: error: message'.");
  m.def("serialize_kb", &elhcf::serialize_kb, py::arg("kb"));
  m.def("normalize_concept", [](const std::string& text) { return elhcf::to_text(concept_arg(text)); },
        py::arg("text"), "Canonical text of a concept expression.");
  m.def("instance_check",
        [](const elhcf::KnowledgeBase& kb, const std::string& concept_text, const std::string& individual) {
          return elhcf::instance_check(kb, concept_arg(concept_text), individual);
        },
        py::arg("kb"), py::arg("concept"), py::arg("individual"));
  m.def("is_subsumed",
        [](const elhcf::KnowledgeBase& kb, const std::string& lhs, const std::string& rhs) {
          return elhcf::is_subsumed(kb, concept_arg(lhs), concept_arg(rhs));
        },
        py::arg("kb"), py::arg("sub"), py::arg("sup"));
  m.def("materialize", py::overload_cast<const elhcf::KnowledgeBase&>(&elhcf::materialize), py::arg("kb"));
  m.def(
      "explain_json",
      [](const elhcf::KnowledgeBase& kb, const std::string& concept_text, const std::string& individual,
         const std::string& direction, const std::string& rank, bool materialize,
         std::optional<std::size_t> max_candidates) {
        const auto d = elhcf::parse_direction(direction);
        if (!d) throw py::value_error("direction must be 'rem' or 'add'");
        if (rank != "min" && rank != "mean") throw py::value_error("rank must be 'min' or 'mean'");
        elhcf::ExplainOptions options;
        options.rank = rank == "mean" ? elhcf::RankBy::kMean : elhcf::RankBy::kMin;
        options.materialize = materialize;
        options.max_candidates = max_candidates;
        return elhcf::to_json(elhcf::explain(kb, {concept_arg(concept_text), individual, *d}, options)).dump();
      },
      py::arg("kb"), py::arg("concept"), py::arg("individual"), py::arg("direction") = "rem",
      py::arg("rank") = "min", py::arg("materialize") = true, py::arg("max_candidates") = py::none());
}
