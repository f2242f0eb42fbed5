"""The Jacobson algebra K<X, Y | XY = 1> and its isomorphism with R.

Elements are combinations of the basis monomials Y^i X^j.  Multiplication
uses only the reduction X^j Y^k = X^(j-k) or Y^(k-j), which keeps this
arithmetic independent of the Leavitt side; the round trip
``to_jacobson(to_leavitt(a)) == a`` is therefore a real check.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Mapping

from .core import AlgebraElement, BasisWord, format_terms, generator
from .field import Field, FieldMismatchError, FieldScalar
from .parser import DEFAULT_MAX_EXPONENT, RingSyntax, parse_with


class JacobsonElement:
    """sum k_ij Y^i X^j, stored as {(i, j): k} with nonzero k."""

    __slots__ = ("field", "terms")

    def __init__(self, field: Field, terms: Mapping[tuple[int, int], object] | None = None):
        clean = {}
        for (i, j), k in (terms or {}).items():
            if i < 0 or j < 0:
                raise ValueError("exponents must be nonnegative")
            k = field(k)
            if k:
                clean[(i, j)] = k
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "terms", dict(sorted(clean.items())))

    def __setattr__(self, name, value):
        raise AttributeError("JacobsonElement is immutable")

    @classmethod
    def one(cls, field: Field) -> JacobsonElement:
        return cls(field, {(0, 0): 1})

    @classmethod
    def monomial(cls, field: Field, i: int, j: int, coeff=1) -> JacobsonElement:
        return cls(field, {(i, j): coeff})

    @classmethod
    def X(cls, field: Field) -> JacobsonElement:
        return cls.monomial(field, 0, 1)

    @classmethod
    def Y(cls, field: Field) -> JacobsonElement:
        return cls.monomial(field, 1, 0)

    def _check(self, other):
        if self.field != other.field:
            raise FieldMismatchError(f"cannot combine {self.field} and {other.field}")

    def __add__(self, other):
        if not isinstance(other, JacobsonElement):
            return NotImplemented
        self._check(other)
        out = dict(self.terms)
        for m, k in other.terms.items():
            out[m] = out.get(m, self.field.zero) + k
        return JacobsonElement(self.field, out)

    def __neg__(self):
        return JacobsonElement(self.field, {m: -k for m, k in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (FieldScalar, int)):
            k = self.field(other)
            return JacobsonElement(self.field, {m: k * c for m, c in self.terms.items()})
        if not isinstance(other, JacobsonElement):
            return NotImplemented
        self._check(other)
        out: dict[tuple[int, int], FieldScalar] = {}
        for (i, j), a in self.terms.items():
            for (k, l), b in other.terms.items():
                # Y^i X^j Y^k X^l with XY = 1
                m = (i, j - k + l) if j >= k else (i + k - j, l)
                out[m] = out.get(m, self.field.zero) + a * b
        return JacobsonElement(self.field, out)

    def __rmul__(self, other):
        if isinstance(other, (FieldScalar, int)):
            return self * other
        return NotImplemented

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative powers are not defined in the Jacobson algebra")
        out = JacobsonElement.one(self.field)
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other):
        if isinstance(other, JacobsonElement):
            return self.field == other.field and self.terms == other.terms
        return NotImplemented

    def __hash__(self):
        return hash((self.field, tuple(self.terms.items())))

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def max_exponent(self) -> int:
        return max((max(m) for m in self.terms), default=0)

    def to_json(self) -> dict:
        return {"terms": [{"word": _mono(i, j, explicit=True), "coeff": str(k)} for (i, j), k in self.terms.items()]}

    def __str__(self):
        return format_terms([(_mono(i, j), k) for (i, j), k in self.terms.items()])

    def __repr__(self):
        return f"JacobsonElement({self.field}, {self})"


def _mono(i: int, j: int, explicit: bool = False) -> str:
    def p(letter, n):
        return letter if n == 1 and not explicit else f"{letter}^{n}"

    parts = []
    if i:
        parts.append(p("Y", i))
    if j:
        parts.append(p("X", j))
    if not parts:
        return "1" if explicit else ""
    return " ".join(parts)


# --- parsing -----------------------------------------------------------------


def leavitt_syntax(field: Field) -> RingSyntax:
    return RingSyntax(
        field=field,
        identifiers={name: (lambda name=name: generator(field, name)) for name in ("v", "w", "c", "c*", "d", "d*")},
        from_scalar=lambda k: AlgebraElement.scalar(field, k),
        name="leavitt",
    )


def jacobson_syntax(field: Field) -> RingSyntax:
    return RingSyntax(
        field=field,
        identifiers={"X": lambda: JacobsonElement.X(field), "Y": lambda: JacobsonElement.Y(field)},
        from_scalar=lambda k: JacobsonElement(field, {(0, 0): k}),
        name="jacobson",
    )


def parse_expr(text: str, presentation: str, field: Field | None = None,
               max_exponent: int = DEFAULT_MAX_EXPONENT):
    """Parse ``text`` as an element of R (``leavitt``) or of K<X,Y|XY=1>."""
    field = field or Field.rational()
    if presentation == "leavitt":
        return parse_with(text, leavitt_syntax(field), max_exponent)
    if presentation == "jacobson":
        return parse_with(text, jacobson_syntax(field), max_exponent)
    raise ValueError(f"unknown presentation {presentation!r}")


# --- the isomorphism ---------------------------------------------------------


@lru_cache(maxsize=None)
def _cd_power(field: Field, i: int) -> AlgebraElement:
    """(c + d)^i, the image of Y^i."""
    y = generator(field, "c") + generator(field, "d")
    return AlgebraElement.one(field) if i == 0 else _cd_power(field, i - 1) * y


@lru_cache(maxsize=None)
def _cdstar_power(field: Field, j: int) -> AlgebraElement:
    """(c* + d*)^j, the image of X^j."""
    x = generator(field, "c*") + generator(field, "d*")
    return AlgebraElement.one(field) if j == 0 else _cdstar_power(field, j - 1) * x


def to_leavitt(x: JacobsonElement) -> AlgebraElement:
    """X -> c* + d*,  Y -> c + d."""
    field = x.field
    out = AlgebraElement.zero(field)
    for (i, j), k in x.terms.items():
        out = out + (_cd_power(field, i) * _cdstar_power(field, j)).scale(k)
    return out


def _letter_image(field: Field, letter: str) -> JacobsonElement:
    Y, X, one = JacobsonElement.Y(field), JacobsonElement.X(field), JacobsonElement.one(field)
    return {
        "v": Y * X,
        "w": one - Y * X,
        "c": Y * Y * X,
        "c*": Y * X * X,
        "d": Y - Y * Y * X,
        "d*": X - Y * X * X,
    }[letter]


@lru_cache(maxsize=None)
def _word_image(field: Field, word: BasisWord) -> JacobsonElement:
    out = JacobsonElement.one(field)
    for letter in word.letters():
        out = out * _letter_image(field, letter)
    return out


def to_jacobson(x: AlgebraElement) -> JacobsonElement:
    """v -> YX, w -> 1-YX, c -> Y^2 X, c* -> Y X^2, d -> Y - Y^2 X, d* -> X - Y X^2."""
    field = x.field
    out = JacobsonElement(field)
    for word, k in x.terms.items():
        out = out + _word_image(field, word) * k
    return out


def ew_word_to_jacobson(i: int, field: Field | None = None) -> JacobsonElement:
    """Image of the E(Rw) basis vector with index i (i = -1 is w).

    w -> 1 - YX and c^i d -> Y^(i+1) (1 - YX).
    """
    field = field or Field.rational()
    if i < -1:
        raise ValueError("index must be >= -1")
    return JacobsonElement(field, {(i + 1, 0): 1, (i + 2, 1): -1})
