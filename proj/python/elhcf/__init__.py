"""Counterfactual explanations for ELH knowledge bases."""

import json

from ._elhcf import (
    Error,
    KnowledgeBase,
    PreconditionError,
    explain_json,
    instance_check,
    is_subsumed,
    materialize,
    normalize_concept,
    parse_kb,
    serialize_kb,
)

__all__ = [
    "Error",
    "KnowledgeBase",
    "PreconditionError",
    "explain",
    "instance_check",
    "is_subsumed",
    "load_kb",
    "materialize",
    "normalize_concept",
    "parse_kb",
    "serialize_kb",
]


def load_kb(path):
    with open(path, encoding="utf-8") as f:
        return parse_kb(f.read())


def explain(kb, concept, individual, direction="rem", rank="min", materialize=True, max_candidates=None):
    """Explain report as a dict, in the layout of docs/explain-report.schema.json."""
    return json.loads(explain_json(kb, concept, individual, direction, rank, materialize, max_candidates))
