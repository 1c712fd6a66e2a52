"""Deterministic JSON and DOT export."""

import json

from formtop import io as fio
from formtop.fixtures import dl3, bool4
from formtop.construct import lawson_theory
from formtop.subtop import closed_sub


def test_site_json_schema():
    doc = fio.site_to_json(dl3())
    assert doc["kind"] == "site"
    assert doc["base"] == ["0", "1", "m"]
    assert ["m", "1"] in doc["le"]
    assert {"head": "0", "cover": []} in doc["axioms"]
    json.loads(fio.dumps(doc))      # round-trippable


def test_theory_json():
    doc = fio.theory_to_json(lawson_theory(dl3()), full=True)
    assert doc["kind"] == "theory"
    assert doc["stats"]["generators"] == len(doc["generators"])
    assert len(doc["axioms"]) == doc["stats"]["axioms"]


def test_subtopology_json():
    doc = fio.subtopology_to_json(closed_sub(dl3(), {"m"}))
    assert doc["kind"] == "subtopology" and doc["parent"] == "dl3"


def test_dumps_deterministic():
    a = fio.dumps(fio.site_to_json(bool4()))
    b = fio.dumps(fio.site_to_json(bool4()))
    assert a == b
    assert a.endswith("\n")


def test_site_dot_is_hasse_chain():
    dot = fio.site_to_dot(dl3())
    # 3-node chain: exactly two covering edges, no transitive edge
    assert dot.count("->") == 2
    assert "n0 -> n2" in dot and "n2 -> n1" in dot


def test_located_lattice_dot():
    dot = fio.located_to_dot(bool4())
    assert dot.count("[label=") == 4
    assert dot.count("->") == 4      # diamond


def test_saturated_lattice_dot():
    dot = fio.saturated_to_dot(dl3())
    assert dot.count("[label=") == 3


def test_encode_elem_nested():
    from fractions import Fraction
    assert fio.encode_elem(frozenset({("r", 1)})) == \
        {"set": [{"tuple": ["r", 1]}]}
    assert fio.encode_elem(Fraction(1, 3)) == {"num": 1, "den": 3}
    assert fio.show_elem(frozenset({"a", "b"})) == "{a,b}"
