import json
import random

import pytest
from hypothesis import given

from steinberg import formats
from steinberg.algebra import random_element
from steinberg.catalogue import graph_catalogue, groupoid_catalogue
from steinberg.errors import AxiomViolation, ParseError
from steinberg.exel_vershik import deaconu_renault
from steinberg.graph import random_graph_element

from strategies import gaussians


@given(gaussians)
def test_coefficient_round_trip(c):
    assert formats.coeff_from_json(formats.coeff_to_json(c)) == c


@pytest.mark.parametrize("bad", [[1, 0, 0, 1], [1, 2, 3], "x", [1.5, 1, 0, 1], [True, 1, 0, 1]])
def test_bad_coefficients(bad):
    with pytest.raises(ParseError):
        formats.coeff_from_json(bad)


@pytest.mark.parametrize("entry", groupoid_catalogue(), ids=lambda e: e.name)
def test_groupoid_and_element_round_trip(entry):
    G = entry.groupoid
    text = json.dumps(formats.groupoid_to_json(G))
    H = formats.groupoid_from_json(formats.loads(text))
    assert H == G and H.name == G.name
    f = random_element(G, random.Random(1))
    assert formats.element_from_json(H, formats.element_to_json(f)).coeffs == f.coeffs


def test_groupoid_shorthands():
    assert formats.groupoid_from_json({"pair": 3}).n == 9
    z2 = {"elements": ["e", "g"], "table": [["e", "g"], ["g", "e"]]}
    assert formats.groupoid_from_json({"group": z2}).n == 2
    swap = formats.groupoid_from_json({"action": {"group": z2, "points": ["1", "2"], "map": {"g": {"1": "2", "2": "1"}}}})
    assert swap.n == 4 and len(swap.units) == 2


def test_malformed_groupoids():
    with pytest.raises(ParseError):
        formats.groupoid_from_json({"pair": 0})
    with pytest.raises(ParseError):
        formats.groupoid_from_json({"morphisms": ["u"]})
    with pytest.raises(AxiomViolation):
        formats.groupoid_from_json(
            {"morphisms": ["u", "g"], "range": {"u": "u", "g": "u"}, "source": {"u": "u", "g": "u"},
             "compose": [["u", "u", "u"], ["u", "g", "g"], ["g", "u", "g"]], "inverse": {"u": "u", "g": "g"}}
        )


def test_parse_error_location():
    with pytest.raises(ParseError) as info:
        formats.loads('{\n  "pair": 2,\n}')
    assert info.value.line == 3


@pytest.mark.parametrize("entry", graph_catalogue(), ids=lambda e: e.name)
def test_graph_and_element_round_trip(entry):
    E = entry.graph
    F = formats.graph_from_json(json.loads(json.dumps(formats.graph_to_json(E))))
    assert F == E
    x = random_graph_element(E, random.Random(4))
    y = formats.graph_element_from_json(F, json.loads(json.dumps(formats.graph_element_to_json(x))))
    assert y.terms == x.terms


@pytest.mark.parametrize(
    "system",
    [e.system for e in groupoid_catalogue() if e.system] + [deaconu_renault(e.graph) for e in graph_catalogue()],
    ids=lambda s: s.name,
)
def test_system_round_trip(system):
    assert formats.system_from_json(json.loads(json.dumps(formats.system_to_json(system)))) == system


def test_system_errors():
    with pytest.raises(ParseError):
        formats.system_from_json({"monoid": "naturals", "space": {"vertices": [], "edges": []}, "action": "rotate"})
    with pytest.raises(ParseError):
        formats.system_from_json({"monoid": "naturals"})


def test_result_record_round_trip():
    rec = formats.ResultRecord(["check"], {"simple": "Simple"}, {"center": [{"u": [1, 1, 0, 1]}]}, 0.25)
    assert formats.ResultRecord.from_json(rec.to_json()) == rec
    with pytest.raises(ParseError):
        formats.ResultRecord.from_json('{"command": []}')
