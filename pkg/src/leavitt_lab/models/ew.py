"""E(Rw) = Kw + [[c]](Kd), the formal-series envelope of the simple module Rw.

An element k_{-1} w + sum_i k_i c^i d is stored as ``head = k_{-1}`` and
``tail = (k_0, ..., k_N)``.  Generators act by

    w: keep k_{-1} w            v: keep the series
    c: shift the series up      c*: shift down, dropping k_0
    d: k_{-1} d                 d*: k_0 w

which is left multiplication in R on the finitely supported elements.
"""

from __future__ import annotations

from typing import Sequence

from ..core import W, AlgebraElement, BasisWord, Shape, format_terms
from ..field import Field, FieldScalar
from ..laurent import PrecisionError
from .truncated import InconclusiveError, TruncatedTail, normalize_tail


class EWElement(TruncatedTail):
    __slots__ = ("field", "head", "tail", "order", "exact")

    def __init__(self, field: Field, head=0, tail: Sequence = (), order: int | None = None, exact: bool = False):
        tl, order = normalize_tail([field(k) for k in tail], order, exact, field.zero)
        for name, val in (("field", field), ("head", field(head)), ("tail", tl), ("order", order), ("exact", exact)):
            object.__setattr__(self, name, val)

    def __setattr__(self, name, value):
        raise AttributeError("EWElement is immutable")

    @property
    def k_minus1(self) -> FieldScalar:
        return self.head

    def _zero_coeff(self):
        return self.field.zero

    @classmethod
    def zero(cls, field: Field) -> EWElement:
        return cls(field, exact=True)

    @classmethod
    def from_algebra(cls, x: AlgebraElement) -> EWElement:
        """Embed an element of the left ideal Rw = span{w, c^i d}."""
        head = x.field.zero
        tail: dict[int, FieldScalar] = {}
        for word, k in x.terms.items():
            if word.shape is Shape.W:
                head = k
            elif word.shape in (Shape.D, Shape.CD):
                tail[word.i] = k
            else:
                raise ValueError(f"{x} is not in Rw (term {word})")
        n = max(tail, default=-1)
        return cls(x.field, head, [tail.get(i, 0) for i in range(n + 1)], exact=True)

    def to_algebra(self) -> AlgebraElement:
        if not self.exact:
            raise PrecisionError("only finitely supported elements lie in Rw")
        terms = {W: self.head}
        terms.update({BasisWord.cd(i): k for i, k in enumerate(self.tail)})
        return AlgebraElement(self.field, terms)

    def __add__(self, other):
        if not isinstance(other, EWElement):
            return NotImplemented
        order, exact = self.combined_order(other)
        tail = [self.tail_at(i) + other.tail_at(i) for i in range(order + 1)]
        return EWElement(self.field, self.head + other.head, tail, order, exact)

    def __neg__(self):
        return EWElement(self.field, -self.head, [-k for k in self.tail], self.order, self.exact)

    def __sub__(self, other):
        return self + (-other)

    def scale(self, k) -> EWElement:
        k = self.field(k)
        return EWElement(self.field, k * self.head, [k * a for a in self.tail], self.order, self.exact)

    def __eq__(self, other):
        if not isinstance(other, EWElement):
            return NotImplemented
        return (self.field, self.head, self.tail, self.order, self.exact) == (
            other.field, other.head, other.tail, other.order, other.exact)

    def __hash__(self):
        return hash((self.field, self.head, self.tail, self.order, self.exact))

    def to_json(self) -> dict:
        out = {"k-1": str(self.head), "k": [str(k) for k in self.tail]}
        if not self.exact:
            out["order"] = self.order
        return out

    def __str__(self):
        items = [("w", self.head)] if self.head else []
        items += [(str(BasisWord.cd(i)), k) for i, k in enumerate(self.tail) if k]
        body = format_terms(items)
        return body if self.exact else f"{body} + O(c^{self.order + 1} d)"

    def __repr__(self):
        return f"EWElement({self.field}, {self})"


def _ew_generator(g: str, m: EWElement) -> EWElement:
    F = m.field
    if g == "v":
        return EWElement(F, 0, m.tail, m.order, m.exact)
    if g == "w":
        return EWElement(F, m.head, exact=True)
    if g == "c":
        return EWElement(F, 0, (F.zero,) + m.tail, m.order + 1, m.exact)
    if g == "c*":
        if m.order < 0 and not m.exact:
            raise PrecisionError("c* needs tail coefficients beyond the valid order")
        return EWElement(F, 0, m.tail[1:], m.order - 1, m.exact)
    if g == "d":
        return EWElement(F, 0, (m.head,), exact=True)
    if g == "d*":
        return EWElement(F, m.tail_at(0), exact=True)
    raise ValueError(f"unknown generator {g!r}")


def ew_act_word(word: BasisWord, m: EWElement) -> EWElement:
    for letter in reversed(word.letters()):
        m = _ew_generator(letter, m)
    return m


def ew_act(r: AlgebraElement, m: EWElement) -> EWElement:
    """Left action of r in R on m in E(Rw)."""
    if isinstance(r, str):
        return _ew_generator(r, m)
    out = EWElement.zero(m.field)
    for word, k in r.terms.items():
        out = out + ew_act_word(word, m).scale(k)
    return out


def ew_essential_witness(m: EWElement) -> tuple[AlgebraElement, AlgebraElement]:
    """Multiplier r in {w} u {d*(c*)^l} with r.m a nonzero element of Rw.

    r = w when k_{-1} != 0, else r = d*(c*)^l for the least l with k_l != 0;
    the image is k_{-1} w resp. k_l w.
    """
    idx = m.first_nonzero()
    if idx is None:
        if m.exact:
            raise ValueError("the zero element has no essentiality witness")
        raise InconclusiveError(f"element vanishes up to order {m.order}; inconclusive at this order")
    F = m.field
    if idx == -1:
        r = AlgebraElement.word(F, W)
        image = AlgebraElement.word(F, W, m.head)
    else:
        r = AlgebraElement.word(F, BasisWord.dstar_cstar(idx))
        image = AlgebraElement.word(F, W, m.tail[idx])
    return r, image
