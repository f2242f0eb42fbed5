import pytest
from hypothesis import given

from leavitt_lab import PrecisionError, parse_expr
from leavitt_lab.core import AlgebraElement, BasisWord, W, mul
from leavitt_lab.models import EWElement, InconclusiveError, ew_act, ew_essential_witness
from conftest import GF5, Q, algebra_elements, ew_elements


def L(text):
    return parse_expr(text, "leavitt")


def ew(head=0, tail=(), order=None):
    return EWElement(Q, head, tail, order, exact=order is None)


def test_dstar_example():
    m = EWElement.from_algebra(L("w + d + c d"))
    assert ew_act(L("d*"), m) == ew(1)


def test_identity_acts_trivially():
    m = ew(2, [1, 0, 3], order=6)
    assert ew_act(L("v + w"), m) == m


def test_dstar_cstar_reads_coefficient():
    m = ew(0, [1, 2, 7, 4], order=8)
    assert ew_act(L("d* c*^2"), m) == ew(7)


def test_generator_table():
    m = ew(5, [1, 2, 3], order=4)
    assert ew_act("w", m) == ew(5)
    assert ew_act("v", m) == ew(0, [1, 2, 3], order=4)
    assert ew_act("c", m) == ew(0, [0, 1, 2, 3], order=5)
    assert ew_act("c*", m) == ew(0, [2, 3], order=3)
    assert ew_act("d", m) == ew(0, [5])
    assert ew_act("d*", m) == ew(1)


def test_precision_shortfall():
    m = EWElement(Q, 0, [], -1)
    with pytest.raises(PrecisionError):
        ew_act("c*", m)


def test_witness_examples():
    r, image = ew_essential_witness(ew(1))
    assert r == L("w") and image == L("w")
    r, image = ew_essential_witness(ew(0, [0, 5], order=4))
    assert r == L("d* c*") and image == L("5*w")
    with pytest.raises(ValueError):
        ew_essential_witness(ew())
    with pytest.raises(InconclusiveError):
        ew_essential_witness(EWElement(Q, 0, [0, 0], 1))


def test_from_algebra_rejects_outside_rw():
    with pytest.raises(ValueError):
        EWElement.from_algebra(L("c"))


@given(algebra_elements(Q, 4), algebra_elements(Q, 4).map(lambda x: x * AlgebraElement.word(Q, W)))
def test_action_is_left_multiplication_on_rw(r, y):
    assert ew_act(r, EWElement.from_algebra(y)).to_algebra() == mul(r, y)


@given(algebra_elements(GF5, 4), algebra_elements(GF5, 4), ew_elements(GF5, 10, exact=False))
def test_module_axiom(r, s, m):
    assert ew_act(r * s, m).agrees(ew_act(r, ew_act(s, m)))


@given(ew_elements(Q, 8))
def test_witness_verifies(m):
    if m.first_nonzero() is None:
        return
    r, image = ew_essential_witness(m)
    assert image and ew_act(r, m).to_algebra() == image
    idx = m.first_nonzero()
    assert r == (L("w") if idx == -1 else AlgebraElement.word(Q, BasisWord.dstar_cstar(idx)))


def test_string_and_json():
    m = ew(1, [0, 2], order=3)
    assert str(m) == "w + 2*c d + O(c^4 d)"
    assert m.to_json() == {"k-1": "1", "k": ["0", "2", "0", "0"], "order": 3}
