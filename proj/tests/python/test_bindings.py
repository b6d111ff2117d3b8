import os

import pytest

import elhcf

DATA = os.environ["ELHCF_TEST_DATA"]
CONJUNCTION = "B and C SubClassOf D\nB(x)\nC(x)\nD(x)\n"


def test_parse_and_serialize_round_trip():
    kb = elhcf.parse_kb(CONJUNCTION)
    assert elhcf.serialize_kb(kb) == CONJUNCTION
    assert elhcf.parse_kb(elhcf.serialize_kb(kb)) == kb
    assert kb.individuals == ["x"]


def test_parse_error_carries_position():
    with pytest.raises(ValueError, match=r"^2:1: error:"):
        elhcf.parse_kb("Male(bob)\nMale(anna, alex)\n")


def test_reasoning():
    kb = elhcf.parse_kb(CONJUNCTION)
    assert elhcf.instance_check(kb, "D", "x")
    assert elhcf.is_subsumed(kb, "B and C", "D")
    assert not elhcf.is_subsumed(kb, "B", "D")
    chain = elhcf.load_kb(os.path.join(DATA, "chain.kb"))
    assert elhcf.materialize(chain).assertion_count == 4


def test_explain():
    report = elhcf.explain(elhcf.parse_kb(CONJUNCTION), "D", "x")
    assert [c["removed"] for c in report["counterfactuals"]] == [["B(x)", "D(x)"], ["C(x)", "D(x)"]]
    with pytest.raises(elhcf.PreconditionError):
        elhcf.explain(elhcf.parse_kb(CONJUNCTION), "E", "x")
    assert issubclass(elhcf.PreconditionError, elhcf.Error)
