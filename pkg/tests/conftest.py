import hypothesis.strategies as st
from hypothesis import settings

from leavitt_lab import AlgebraElement, Field, JacobsonElement, Poly
from leavitt_lab.core import all_basis_words
from leavitt_lab.models import EWElement, ThetaElement

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")

Q = Field.rational()
GF2 = Field.gf(2)
GF3 = Field.gf(3)
GF5 = Field.gf(5)

fields = st.sampled_from([Q, GF2, GF5])


def scalars(field, nonzero=False):
    if field.is_finite:
        lo = 1 if nonzero else 0
        return st.integers(lo, field.p - 1).map(field)
    s = st.fractions(min_value=-5, max_value=5, max_denominator=4).map(field)
    return s.filter(bool) if nonzero else s


def words(max_exp=4):
    return st.sampled_from(all_basis_words(max_exp))


def algebra_elements(field=Q, max_exp=4, max_terms=4):
    return st.dictionaries(words(max_exp), scalars(field, nonzero=True), max_size=max_terms).map(
        lambda d: AlgebraElement(field, d))


def jacobson_elements(field=Q, max_exp=5, max_terms=4):
    key = st.tuples(st.integers(0, max_exp), st.integers(0, max_exp))
    return st.dictionaries(key, scalars(field, nonzero=True), max_size=max_terms).map(
        lambda d: JacobsonElement(field, d))


def polys(field=Q, max_deg=3):
    return st.lists(scalars(field), max_size=max_deg + 1).map(lambda cs: Poly(field, cs))


def unit_polys(field=Q, max_deg=4):
    return st.lists(scalars(field), min_size=1, max_size=max_deg).map(lambda cs: Poly(field, [1] + cs))


@st.composite
def theta_elements(draw, field=Q, order=8, max_deg=3, exact=None, bound=False):
    exact = draw(st.booleans()) if exact is None else exact
    head = draw(polys(field, max_deg))
    n = draw(st.integers(0, order + 1)) if exact else order + 1
    tail = draw(st.lists(polys(field, max_deg), min_size=n, max_size=n))
    el = ThetaElement(field, head, tail, None if exact else order, exact)
    return el.with_bound(max_deg) if bound else el


@st.composite
def ew_elements(draw, field=Q, order=8, exact=None):
    exact = draw(st.booleans()) if exact is None else exact
    head = draw(scalars(field))
    n = draw(st.integers(0, order + 1)) if exact else order + 1
    tail = draw(st.lists(scalars(field), min_size=n, max_size=n))
    return EWElement(field, head, tail, None if exact else order, exact)
