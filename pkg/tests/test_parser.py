import pytest
from hypothesis import given

from leavitt_lab import AlgebraElement, JacobsonElement, ParseError, parse_expr
from leavitt_lab.core import BasisWord, W
from leavitt_lab.parser import parse_ast, tokenize
from conftest import GF5, Q, algebra_elements, jacobson_elements


def test_star_binds_to_letter():
    kinds = [(t.kind, t.text) for t in tokenize("c*^2 d*")]
    assert ("ident", "c*") in kinds and ("ident", "d*") in kinds


def test_leavitt_literal():
    x = parse_expr("c*^2 + 2*w", "leavitt")
    assert x == AlgebraElement(Q, {BasisWord.cc(0, 2): 1, W: 2})


def test_jacobson_examples():
    assert parse_expr("X*Y", "jacobson") == JacobsonElement.one(Q)
    assert parse_expr("Y*X", "jacobson") == JacobsonElement.monomial(Q, 1, 1)
    assert parse_expr("X Y", "jacobson") == JacobsonElement.one(Q)


def test_precedence_and_parentheses():
    assert parse_expr("2*(c + d) c*", "leavitt") == parse_expr("2*c c* + 2*d c*", "leavitt")
    assert parse_expr("-c^2 + 1/2*v", "leavitt") == parse_expr("1/2*v - c c", "leavitt")
    assert parse_expr("(c + d)^0", "leavitt") == AlgebraElement.one(Q)


def test_negative_power_rejected_in_r():
    with pytest.raises(ParseError):
        parse_expr("c^-1", "leavitt")


def test_double_star_is_cstar_times_scalar():
    assert parse_expr("c**2", "leavitt") == parse_expr("2*c*", "leavitt")


def test_field_literals_reduce_mod_p():
    assert parse_expr("7*c", "leavitt", GF5) == parse_expr("2*c", "leavitt", GF5)


@pytest.mark.parametrize("bad", ["c +", "x", "c^", "(c", "c)", "1/", "c^99999", "X"])
def test_errors_have_positions(bad):
    with pytest.raises(ParseError) as info:
        parse_expr(bad, "leavitt")
    assert info.value.pos is not None


def test_exponent_bound_configurable():
    with pytest.raises(ParseError):
        parse_expr("c^50", "leavitt", max_exponent=10)


def test_unknown_presentation():
    with pytest.raises(ValueError):
        parse_expr("c", "cuntz")


def test_ast_shape():
    assert parse_ast("c") is not None


@given(algebra_elements(Q, 4))
def test_leavitt_print_parse_roundtrip(x):
    assert parse_expr(str(x), "leavitt") == x


@given(jacobson_elements(Q, 4))
def test_jacobson_print_parse_roundtrip(x):
    assert parse_expr(str(x), "jacobson") == x
