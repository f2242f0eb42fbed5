import pytest
from hypothesis import given, settings
import hypothesis.strategies as st

from leavitt_lab import AlgebraElement, BasisWord, FieldMismatchError, FreeWord, Shape, mul, rewrite_oracle, word_mul
from leavitt_lab.core import D, DSTAR, V, W, RewriteBudgetExceeded, all_basis_words, generator, word_element
from leavitt_lab.jacobson import parse_expr
from conftest import GF5, Q, algebra_elements, words


def E(text, field=Q):
    return parse_expr(text, "leavitt", field)


def cc(i, j):
    return BasisWord.cc(i, j)


def test_degenerate_exponents_normalize():
    assert cc(0, 0) == V
    assert cc(2, 0).shape is Shape.C
    assert cc(0, 3).shape is Shape.CSTAR
    assert BasisWord.cd(0) == D
    assert BasisWord.dstar_cstar(0) == DSTAR
    with pytest.raises(ValueError):
        BasisWord(Shape.CCSTAR, 0, 2)


def test_shape_order_is_canonical():
    ws = all_basis_words(2)
    assert ws == sorted(ws)
    assert [w.shape for w in ws[:2]] == [Shape.V, Shape.W]
    assert ws[-1].shape is Shape.DSTARCSTAR


def test_basis_size():
    # 4 exponent-free words, 4 one-exponent families and the c^i (c*)^j grid
    assert len(all_basis_words(6)) == 4 + 4 * 6 + 36


@pytest.mark.parametrize("a,b,expected", [
    (cc(0, 1), cc(1, 0), "v"),
    (D, DSTAR, "v - c c*"),
    (cc(0, 1), D, "0"),
    (DSTAR, cc(1, 0), "0"),
    (cc(2, 3), cc(1, 0), "c^2 c*^2"),
    (DSTAR, D, "w"),
])
def test_word_mul_examples(a, b, expected):
    assert word_mul(a, b) == E(expected)


def test_word_mul_has_at_most_two_terms():
    for a in all_basis_words(3):
        for b in all_basis_words(3):
            assert len(word_mul(a, b)) <= 2


def test_mul_examples():
    x = E("3*c^2 d - d*")
    assert mul(E("v + w"), x) == x
    assert mul(E("c"), E("c*")) == E("c c*")
    lhs = mul(E("c"), E("c*^2"))
    assert lhs == E("c*") - mul(E("v - c c*"), E("c*"))


def test_mixed_field_mul_rejected():
    with pytest.raises(FieldMismatchError):
        mul(E("c"), E("c", GF5))


@pytest.mark.parametrize("letters,expected", [
    (["d*", "d"], "w"),
    (["c", "d", "d*", "c*"], "c c* - c^2 c*^2"),
    (["w", "c"], "0"),
    ([], "v + w"),
    (["d", "d*", "d", "d*"], "v - c c*"),
])
def test_rewrite_oracle_examples(letters, expected):
    assert rewrite_oracle(letters) == E(expected)


def test_rewrite_budget():
    with pytest.raises(RewriteBudgetExceeded):
        rewrite_oracle(FreeWord.parse("d d* d d* d d*"), budget=1)


def test_free_word_parse():
    assert FreeWord.parse("c^2 d*").letters == ("c", "c", "d*")
    with pytest.raises(ValueError):
        FreeWord(("x",))


def test_string_forms():
    assert str(cc(2, 1)) == "c^2 c*"
    assert str(BasisWord.dstar_cstar(3)) == "d* c*^3"
    assert str(E("3*c^2 d - 1/2*d*")) == "3*c^2 d - 1/2*d*"
    assert E("c^2 c*").to_json() == {"terms": [{"word": "c^2 c*^1", "coeff": "1"}]}
    assert str(AlgebraElement.zero(Q)) == "0"


def test_relations_hold():
    g = {x: generator(Q, x) for x in ("v", "w", "c", "c*", "d", "d*")}
    zero = AlgebraElement.zero(Q)
    assert g["v"] * g["w"] == zero == g["w"] * g["v"]
    assert g["v"] * g["v"] == g["v"] and g["w"] * g["w"] == g["w"]
    assert g["c*"] * g["c"] == g["v"] and g["d*"] * g["d"] == g["w"]
    assert g["c*"] * g["d"] == zero == g["d*"] * g["c"]
    assert g["c"] * g["c*"] + g["d"] * g["d*"] == g["v"]
    assert g["v"] * g["d"] == g["d"] == g["d"] * g["w"]
    assert g["w"] * g["d*"] == g["d*"] == g["d*"] * g["v"]


@pytest.mark.parametrize("n", range(9))
def test_idempotent_telescope(n):
    total = E("w")
    for i in range(n + 1):
        total = total + AlgebraElement.word(Q, cc(i, i)) - AlgebraElement.word(Q, cc(i + 1, i + 1))
    total = total + AlgebraElement.word(Q, cc(n + 1, n + 1))
    assert total == AlgebraElement.one(Q)


@given(words(4), words(4))
def test_word_mul_matches_oracle(a, b):
    assert word_mul(a, b) == rewrite_oracle(a.letters() + b.letters())


@given(st.lists(st.sampled_from(["v", "w", "c", "c*", "d", "d*"]), max_size=8))
def test_generator_products_match_oracle(letters):
    assert word_element(Q, letters) == rewrite_oracle(letters)


@settings(max_examples=100)
@given(algebra_elements(Q, 5), algebra_elements(Q, 5), algebra_elements(Q, 5))
def test_associativity(x, y, z):
    assert (x * y) * z == x * (y * z)


@given(algebra_elements(GF5, 4), algebra_elements(GF5, 4), algebra_elements(GF5, 4))
def test_distributivity_gf5(x, y, z):
    assert x * (y + z) == x * y + x * z
    assert (x + y) * z == x * z + y * z


@given(algebra_elements(Q, 4))
def test_identity_and_zero(x):
    one = AlgebraElement.one(Q)
    assert one * x == x == x * one
    assert not (x - x)
    assert all(k for _, k in x.terms.items())
