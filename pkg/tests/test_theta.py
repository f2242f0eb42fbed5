import pytest
from hypothesis import given, settings
import hypothesis.strategies as st

from leavitt_lab import LaurentSeriesElement, Poly, PrecisionError, parse_expr
from leavitt_lab.core import AlgebraElement, BasisWord, mul
from leavitt_lab.models import (
    InconclusiveError,
    ThetaElement,
    baer_extend,
    baer_extend_socle,
    kernel_element,
    p_map,
    p_of_c,
    reduce_bounded_to_laurent_series,
    representative,
    theta_act,
    theta_essential_witness,
    torsion_probe,
)
from conftest import GF5, Q, algebra_elements, polys, theta_elements, unit_polys


def L(text):
    return parse_expr(text, "leavitt")


def P(text, field=Q):
    return Poly.parse(text, field)


def theta(head="0", tail=(), order=None, bound=None, field=Q):
    return ThetaElement(field, P(head, field), [P(q, field) for q in tail], order, order is None, bound)


def test_cstar_folds_q0():
    t = theta("0", ["1"])
    assert p_map("c*", t) == theta("0", ["x"])


def test_w_keeps_head():
    t = theta("1+x", ["1", "x"])
    assert theta_act(L("w"), t) == theta("1+x")


def test_d_map():
    # d (d* c* q(c*)) = (v - c c*) c* q(c*)
    assert p_map("d", theta("1+x")) == theta("0", ["1+x", "-x-x^2"])
    assert p_map("d*", theta("0", ["2", "x"])) == theta("2")


def test_p_map_relations_on_example():
    t = theta("x", ["1", "0", "x^2"], order=6)
    v = p_map("v", t)
    assert p_map("c*", p_map("c", t)).agrees(v)
    assert p_map("d*", p_map("d", t)).agrees(p_map("w", t))
    assert p_map("c*", p_map("d", t)).known_zero()
    assert (p_map("c", p_map("c*", t)) + p_map("d", p_map("d*", t))).agrees(v)
    assert (p_map("v", t) + p_map("w", t)).agrees(t)


def test_unknown_generator():
    with pytest.raises(ValueError):
        p_map("x", theta())


def test_precision_shortfall():
    with pytest.raises(PrecisionError):
        p_map("c*", ThetaElement(Q, None, [], -1))


@settings(max_examples=40)
@given(st.sampled_from([Q, GF5]).flatmap(lambda F: theta_elements(F, 10, exact=False)))
def test_operator_identities(t):
    F = t.field
    zero = ThetaElement.zero(F)
    assert (p_map("c*", p_map("c", t)) - p_map("v", t)).known_zero()
    assert p_map("d*", p_map("d", t)).agrees(p_map("w", t))
    assert p_map("c*", p_map("d", t)).agrees(zero)
    assert p_map("d*", p_map("c", t)).agrees(zero)
    assert (p_map("c", p_map("c*", t)) + p_map("d", p_map("d*", t))).agrees(p_map("v", t))


@given(algebra_elements(Q, 4), algebra_elements(Q, 4).map(lambda x: x * L("c*")))
def test_action_is_left_multiplication_on_rcstar(r, y):
    assert theta_act(r, ThetaElement.from_algebra(y)).to_algebra() == mul(r, y)


@given(algebra_elements(Q, 4), algebra_elements(Q, 4), theta_elements(Q, 12, exact=False))
def test_module_axiom(r, s, t):
    assert theta_act(r * s, t).agrees(theta_act(r, theta_act(s, t)))


def test_witness_examples():
    r, image = theta_essential_witness(theta("x"))
    assert r == L("w") and image == theta("x")
    r, image = theta_essential_witness(theta("0", ["0", "1+x"]))
    assert r == L("d* c*") and image == theta("1+x")
    assert image.to_algebra() == L("d* c* + d* c*^2")
    with pytest.raises(ValueError):
        theta_essential_witness(theta())
    with pytest.raises(InconclusiveError):
        theta_essential_witness(theta("0", ["0"], order=3))


@given(theta_elements(Q, 8))
def test_witness_verifies(t):
    if t.first_nonzero() is None:
        return
    r, image = theta_essential_witness(t)
    assert not image.known_zero()
    assert theta_act(r, t).agrees(image)


def test_baer_examples():
    t = theta("1", ["1", "x"], order=10)
    assert baer_extend(P("1"), t, 10) == t
    beta = baer_extend(P("1+x"), theta("1", ["1"]), 8)
    assert beta.head == P("1")
    assert [q for q in beta.tail] == [P(str((-1) ** i)) for i in range(9)]
    assert theta_act(p_of_c(P("1+x")), beta).truncate(7).agrees(theta("1", ["1"]).truncate(7))
    zero = baer_extend(P("1+x+x^3"), theta(order=12), 12)
    assert zero.known_zero()


def test_baer_preconditions():
    with pytest.raises(ValueError):
        baer_extend(P("2+x"), theta(), 4)
    with pytest.raises(PrecisionError):
        baer_extend(P("1+x"), theta("0", ["1"], order=3), 10)


@settings(max_examples=40)
@given(unit_polys(Q, 4), theta_elements(Q, 20, exact=False))
def test_baer_identity(p, image):
    beta = baer_extend(p, image, 20)
    n = 20 - p.degree
    assert theta_act(p_of_c(p), beta).truncate(n).agrees(image.truncate(n))


@given(polys(Q, 3), st.lists(polys(Q, 3), max_size=5))
def test_baer_from_socle(head, images):
    beta = baer_extend_socle(head, images)
    assert theta_act(L("w"), beta).agrees(ThetaElement(Q, head, (), exact=True))
    for i, q in enumerate(images):
        got = theta_act(AlgebraElement.word(Q, BasisWord.dstar_cstar(i)), beta)
        assert got.agrees(ThetaElement(Q, q, (), exact=True))


def test_p_of_c():
    assert p_of_c(P("1+2x+x^3")) == L("v + w + 2*c + c^3")


# --- bounded part and reduction -------------------------------------------------


def test_reduce_examples():
    ones = theta("0", ["1"] * 9, order=8, bound=0)
    s = reduce_bounded_to_laurent_series(ones)
    assert s.principal == () and all(s.coeff(k) == 1 for k in range(9))
    s = reduce_bounded_to_laurent_series(theta("0", ["x"], bound=1))
    assert s.coeff(-1) == 1 and s.principal == (Q(1),) and not any(s.tail)
    # (v - c c*) c* is in the kernel
    assert reduce_bounded_to_laurent_series(theta("0", ["1", "-x"], bound=1)).is_zero()


def test_reduce_needs_bound():
    with pytest.raises(ValueError):
        reduce_bounded_to_laurent_series(theta("0", ["x"]))
    with pytest.raises(ValueError):
        reduce_bounded_to_laurent_series(theta("0", ["x^2"]), bound=1)


def test_reduce_order():
    t = theta("0", ["1", "x"], order=10, bound=2)
    assert reduce_bounded_to_laurent_series(t).order == 8


@given(polys(Q, 2), st.lists(polys(Q, 2), min_size=1, max_size=6))
def test_kernel_reduces_to_zero(head, hs):
    assert reduce_bounded_to_laurent_series(kernel_element(head, hs, order=12)).is_zero()


@given(theta_elements(Q, 12, max_deg=2, exact=False, bound=True))
def test_reduction_equivariant(t):
    from leavitt_lab import LaurentPoly
    s = reduce_bounded_to_laurent_series(t)
    assert reduce_bounded_to_laurent_series(theta_act("c", t)).agrees(s.mul_laurent(LaurentPoly.monomial(Q, 1)))
    assert reduce_bounded_to_laurent_series(theta_act("c*", t)).agrees(s.mul_laurent(LaurentPoly.monomial(Q, -1)))


@given(st.lists(st.integers(-3, 3), max_size=3), st.lists(st.integers(-3, 3), min_size=11, max_size=11))
def test_representative_reduces_back(principal, tail):
    s = LaurentSeriesElement(Q, principal, tail, 10)
    assert reduce_bounded_to_laurent_series(representative(s)).agrees(s)


def test_torsion_examples():
    assert torsion_probe(P("1+x"), theta())
    alt = LaurentSeriesElement(Q, [], [(-1) ** k for k in range(9)], 8)
    assert not torsion_probe(P("1+x"), alt)
    assert torsion_probe(P("1+x"), LaurentSeriesElement(Q, exact=True))
    with pytest.raises(ValueError):
        torsion_probe(P("x"), theta())


@given(theta_elements(Q, 12, max_deg=2, exact=False, bound=True), st.sampled_from(["1+x", "1+x+x^2"]))
def test_no_torsion_in_quotient(t, p):
    if reduce_bounded_to_laurent_series(t).is_zero():
        return
    assert not torsion_probe(P(p), t, modulo_kernel=True)


def test_bound_declaration_checked():
    with pytest.raises(ValueError):
        theta("0", ["x^3"], bound=1)


def test_json_and_str():
    t = theta("1+x", ["0", "1"], order=2)
    assert t.to_json() == {"q-1": "1 + x", "q": ["0", "1", "0"], "order": 2}
    assert str(t) == "d* c* (1 + c*) + c c* (1) + O(c^3)"
