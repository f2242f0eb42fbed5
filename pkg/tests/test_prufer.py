import pytest
from hypothesis import given
import hypothesis.strategies as st

from leavitt_lab import LaurentPoly, Poly, RationalFunc, parse_expr
from leavitt_lab.core import AlgebraElement, BasisWord, W, mul
from leavitt_lab.models import (
    ModuleFamily,
    ReducibleParameterError,
    catalog,
    certify,
    p_of_c,
    prufer_act,
    prufer_divisibility_witness,
    prufer_element,
    prufer_parameters,
    rational_act,
)
from conftest import GF2, GF3, Q, algebra_elements

F2 = Poly.parse("1+x+x^2", GF2)
FQ = Poly.parse("1+x", Q)


def L(text, field=Q):
    return parse_expr(text, "leavitt", field)


def test_certify():
    assert certify(Poly.parse("1+x", GF2)).irreducible
    with pytest.raises(ReducibleParameterError):
        certify(Poly.parse("1+x^2", GF2))
    with pytest.raises(ValueError):
        certify(Poly.parse("2+x", Q))
    with pytest.raises(ReducibleParameterError):
        certify(Poly.parse("1+x+x^5", Q))
    assert certify(Poly.parse("1+x+x^5", Q), acknowledge_unverified=True).status == "unverified"


def test_f_kills_level_one():
    f = Poly.parse("1+x", GF2)
    u = prufer_element(f, 1, "1")
    assert not prufer_act(p_of_c(f), u)


def test_j_acts_as_zero():
    u = prufer_element(F2, 2, "x")
    assert not prufer_act(L("w", GF2), u)
    assert not rational_act(L("w"), RationalFunc(Poly.parse("1", Q), FQ))


def test_normalizes_to_minimal_level():
    g = Poly.parse("x", GF2)
    assert prufer_element(F2, 2, F2 * g) == prufer_element(F2, 1, g)
    zero = prufer_element(F2, 3, F2 ** 3)
    assert zero.level == 1 and not zero


def test_negative_powers_cleared():
    # cbar^-1 is a unit mod f^n: its residue r satisfies x r = 1
    u = prufer_element(FQ, 2, "x^-1")
    assert prufer_act(LaurentPoly.monomial(Q, 1), u) == prufer_element(FQ, 2, "1")


def test_witness_examples():
    zero = prufer_element(F2, 1, "0")
    assert prufer_divisibility_witness(zero) == zero
    u = prufer_element(F2, 1, "1")
    w = prufer_divisibility_witness(u)
    assert (w.level, w.residue) == (2, Poly.parse("1", GF2))
    ww = prufer_divisibility_witness(w)
    assert prufer_act(F2 ** 2, ww) == u


def test_addition_across_levels():
    a = prufer_element(FQ, 1, "1")
    b = prufer_element(FQ, 2, "1")
    s = a + b
    assert s.level == 2
    assert prufer_act(FQ, s) == prufer_act(FQ, b)
    assert (s - s).level == 1 and not (s - s)


def test_rational_examples():
    q = RationalFunc(Poly.parse("1", Q), FQ)
    assert not rational_act(L("w"), q)
    assert rational_act(L("c"), q) == RationalFunc(Poly.parse("x", Q), FQ)
    assert rational_act(L("v + w"), q) == q


residues = st.dictionaries(st.integers(-3, 6), st.integers(0, 1), max_size=5).map(
    lambda d: LaurentPoly(GF2, d))


@given(st.integers(1, 4), residues)
def test_fn_kills_level_n(n, r):
    u = prufer_element(F2, n, r)
    assert not prufer_act(F2 ** n, u)


@given(st.integers(1, 4), residues)
def test_witness_then_f_is_identity(n, r):
    u = prufer_element(F2, n, r)
    assert prufer_act(F2, prufer_divisibility_witness(u)) == u


@given(st.integers(1, 3), residues, st.integers(0, 8))
def test_socle_generators_annihilate(n, r, i):
    u = prufer_element(F2, n, r)
    assert not prufer_act(AlgebraElement.word(GF2, W), u)
    assert not prufer_act(AlgebraElement.word(GF2, BasisWord.dstar_cstar(i)), u)


@given(algebra_elements(Q, 3), algebra_elements(Q, 3), st.integers(1, 3),
       st.dictionaries(st.integers(-2, 3), st.integers(-3, 3), max_size=4))
def test_action_associative_q(r, s, n, d):
    u = prufer_element(FQ, n, LaurentPoly(Q, d))
    assert prufer_act(mul(r, s), u) == prufer_act(r, prufer_act(s, u))
    q = RationalFunc(Poly(Q, [1, 2]), Poly(Q, [1, 0, 1]))
    assert rational_act(mul(r, s), q) == rational_act(r, rational_act(s, q))


def test_catalog_entries():
    entries = {e.family: e for e in catalog()}
    assert entries["E(Rw)"].jacobson_name == "K[[Y]](1-YX)"
    assert entries["K(cbar)"].jacobson_name == "K(Xbar)"
    assert entries["U^f"].element_type == "PruferElement"
    assert all(isinstance(e, ModuleFamily) for e in entries.values())


def test_prufer_parameters_gf3():
    params = prufer_parameters(GF3, 2)
    assert Poly.parse("1+x^2", GF3) in params
    assert all(p[0] == 1 and certify(p).irreducible for p in params)
    with pytest.raises(ValueError):
        prufer_parameters(Q, 2)


def test_json():
    u = prufer_element(FQ, 2, "x")
    assert u.to_json() == {"f": "1 + x", "level": 2, "residue": "x"}
    assert str(u) == "[cbar] mod (1 + cbar)^2"
