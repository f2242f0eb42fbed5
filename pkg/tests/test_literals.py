import pytest
from hypothesis import given

from leavitt_lab.literals import LiteralError, dumps, parse_element
from leavitt_lab.models import ReducibleParameterError
from conftest import GF2, Q, ew_elements, theta_elements


@pytest.mark.parametrize("module,text", [
    ("theta", '{"q-1":"1+x","q":["0","1"],"order":16}'),
    ("theta", '{"q":["1","x"],"bound":1}'),
    ("ew", '{"k-1":"1","k":["0","2"],"order":5}'),
    ("prufer", '{"f":"1+x","level":2,"residue":"x"}'),
    ("rational", '{"num":"x","den":"2+2x"}'),
    ("laurent", '{"principal":["1"],"tail":["0","1"],"order":4}'),
])
def test_roundtrip(module, text):
    el = parse_element(module, text, Q)
    assert parse_element(module, el.to_json(), Q) == el
    assert parse_element(module, dumps(el.to_json()), Q) == el


def test_missing_order_means_exact():
    assert parse_element("theta", '{"q":["1"]}', Q).exact
    assert not parse_element("theta", '{"q":["1"],"order":3}', Q).exact


@pytest.mark.parametrize("module,text", [
    ("theta", "not json"),
    ("theta", "[1, 2]"),
    ("theta", '{"q":["1"],"extra":1}'),
    ("theta", '{"q":"1"}'),
    ("prufer", '{"level":1}'),
    ("ew", '{"order":"x"}'),
    ("nope", "{}"),
])
def test_bad_literals(module, text):
    with pytest.raises(LiteralError):
        parse_element(module, text, Q)


def test_prufer_literal_checks_parameter():
    with pytest.raises(ReducibleParameterError):
        parse_element("prufer", '{"f":"1+x^2","level":1,"residue":"1"}', GF2)


@given(theta_elements(Q, 6))
def test_theta_roundtrip_property(t):
    assert parse_element("theta", dumps(t.to_json()), Q) == t


@given(ew_elements(Q, 6))
def test_ew_roundtrip_property(m):
    assert parse_element("ew", dumps(m.to_json()), Q) == m
