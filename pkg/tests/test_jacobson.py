import pytest
from hypothesis import given, settings

from leavitt_lab import JacobsonElement, ew_word_to_jacobson, parse_expr, to_jacobson, to_leavitt
from leavitt_lab.core import AlgebraElement, BasisWord, W
from conftest import GF2, Q, algebra_elements, jacobson_elements


def J(text, field=Q):
    return parse_expr(text, "jacobson", field)


def L(text, field=Q):
    return parse_expr(text, "leavitt", field)


def test_xy_is_one_and_yx_is_not():
    X, Y = JacobsonElement.X(Q), JacobsonElement.Y(Q)
    assert X * Y == JacobsonElement.one(Q)
    assert Y * X != JacobsonElement.one(Q)
    assert Y * X == JacobsonElement.monomial(Q, 1, 1)


def test_reduction_law():
    # X^j Y^k = X^(j-k) or Y^(k-j)
    assert J("X^3 Y^2") == J("X")
    assert J("X^2 Y^3") == J("Y")
    assert J("Y^2 X^3 Y^3 X") == J("Y^2 X")


def test_to_leavitt_examples():
    assert to_leavitt(J("X")) == L("c* + d*")
    assert to_leavitt(J("Y")) == L("c + d")
    assert to_leavitt(J("X Y")) == AlgebraElement.one(Q)
    assert to_leavitt(J("1")) == L("v + w")


@pytest.mark.parametrize("letter,image", [
    ("v", "Y X"), ("w", "1 - Y X"), ("c", "Y^2 X"), ("c*", "Y X^2"), ("d", "Y - Y^2 X"), ("d*", "X - Y X^2"),
])
def test_to_jacobson_on_generators(letter, image):
    assert to_jacobson(L(letter)) == J(image)


def test_roundtrip_example():
    assert to_jacobson(to_leavitt(J("Y^3 X^2"))) == J("Y^3 X^2")


def test_ew_word_examples():
    assert ew_word_to_jacobson(-1) == J("1 - Y X")
    assert ew_word_to_jacobson(0) == J("Y - Y^2 X")
    assert ew_word_to_jacobson(2) == J("Y^3 - Y^4 X")
    with pytest.raises(ValueError):
        ew_word_to_jacobson(-2)


@pytest.mark.parametrize("i", range(-1, 13))
def test_ew_word_matches_isomorphism(i):
    word = W if i == -1 else BasisWord.cd(i)
    assert ew_word_to_jacobson(i) == to_jacobson(AlgebraElement.word(Q, word))


def test_string_form():
    assert str(J("Y^3 X^2")) == "Y^3 X^2"
    assert str(J("1")) == "1"


@settings(max_examples=80)
@given(jacobson_elements(Q, 6))
def test_roundtrip_jacobson_side(x):
    assert to_jacobson(to_leavitt(x)) == x


@settings(max_examples=80)
@given(algebra_elements(Q, 6))
def test_roundtrip_leavitt_side(x):
    assert to_leavitt(to_jacobson(x)) == x


@given(jacobson_elements(Q, 4), jacobson_elements(Q, 4))
def test_to_leavitt_multiplicative(a, b):
    assert to_leavitt(a * b) == to_leavitt(a) * to_leavitt(b)


@given(algebra_elements(GF2, 4), algebra_elements(GF2, 4))
def test_to_jacobson_multiplicative_gf2(x, y):
    assert to_jacobson(x * y) == to_jacobson(x) * to_jacobson(y)


@given(jacobson_elements(Q, 3), jacobson_elements(Q, 3), jacobson_elements(Q, 3))
def test_jacobson_associative(a, b, c):
    assert (a * b) * c == a * (b * c)
