"""Seeded random generators for elements of R and of the module models."""

from __future__ import annotations

import random
from fractions import Fraction

from .core import AlgebraElement, BasisWord, Shape, all_basis_words
from .field import Field, FieldScalar
from .jacobson import JacobsonElement
from .laurent import LaurentPoly, LaurentSeriesElement, Poly
from .models.ew import EWElement
from .models.theta import ThetaElement

J_SHAPES = (Shape.W, Shape.D, Shape.CD, Shape.DSTAR, Shape.DSTARCSTAR)


class Sampler:
    def __init__(self, field: Field, rng: random.Random):
        self.field = field
        self.rng = rng
        self._words: dict[int, list[BasisWord]] = {}

    def scalar(self, nonzero: bool = False) -> FieldScalar:
        F, rng = self.field, self.rng
        while True:
            if F.is_finite:
                k = F(rng.randrange(F.p))
            else:
                k = F(Fraction(rng.randint(-4, 4), rng.randint(1, 3)))
            if k or not nonzero:
                return k

    def words(self, max_exp: int) -> list[BasisWord]:
        if max_exp not in self._words:
            self._words[max_exp] = all_basis_words(max_exp)
        return self._words[max_exp]

    def word(self, max_exp: int) -> BasisWord:
        return self.rng.choice(self.words(max_exp))

    def algebra(self, max_exp: int = 4, max_terms: int = 4, shapes=None) -> AlgebraElement:
        pool = self.words(max_exp)
        if shapes is not None:
            pool = [w for w in pool if w.shape in shapes]
        n = self.rng.randint(1, max_terms)
        terms = {self.rng.choice(pool): self.scalar(nonzero=True) for _ in range(n)}
        return AlgebraElement(self.field, terms)

    def socle(self, max_exp: int = 6, max_terms: int = 5) -> AlgebraElement:
        while True:
            x = self.algebra(max_exp, max_terms, shapes=J_SHAPES)
            if x:
                return x

    def jacobson(self, max_exp: int = 6, max_terms: int = 4) -> JacobsonElement:
        n = self.rng.randint(1, max_terms)
        terms = {(self.rng.randint(0, max_exp), self.rng.randint(0, max_exp)): self.scalar(nonzero=True)
                 for _ in range(n)}
        return JacobsonElement(self.field, terms)

    def poly(self, max_deg: int, one_at_zero: bool = False, exact_degree: bool = False) -> Poly:
        deg = max_deg if exact_degree else self.rng.randint(0, max_deg)
        coeffs = [self.scalar() for _ in range(deg + 1)]
        if one_at_zero:
            coeffs[0] = self.field.one
        if exact_degree and deg > 0 and not coeffs[-1]:
            coeffs[-1] = self.scalar(nonzero=True)
        return Poly(self.field, coeffs)

    def unit_poly(self, min_deg: int = 1, max_deg: int = 4) -> Poly:
        """A polynomial with p(0) = 1 and degree in [min_deg, max_deg]."""
        return self.poly(self.rng.randint(min_deg, max_deg), one_at_zero=True, exact_degree=True)

    def theta(self, order: int = 16, max_deg: int = 3, exact: bool = False, bound: bool = False,
              with_head: bool = True, density: float = 0.5) -> ThetaElement:
        F = self.field
        head = self.poly(max_deg) if with_head and self.rng.random() < density else Poly(F)
        tail = [self.poly(max_deg) if self.rng.random() < density else Poly(F) for _ in range(order + 1)]
        el = ThetaElement(F, head, tail, None if exact else order, exact)
        return el.with_bound(max_deg) if bound else el

    def ew(self, order: int = 16, exact: bool = False, density: float = 0.5) -> EWElement:
        head = self.scalar() if self.rng.random() < density else 0
        tail = [self.scalar() if self.rng.random() < density else 0 for _ in range(order + 1)]
        return EWElement(self.field, head, tail, None if exact else order, exact)

    def laurent_poly(self, lo: int = -3, hi: int = 5) -> LaurentPoly:
        terms = {e: self.scalar() for e in range(lo, hi + 1) if self.rng.random() < 0.5}
        return LaurentPoly(self.field, terms)

    def laurent_series(self, order: int = 16, max_principal: int = 3, density: float = 0.5) -> LaurentSeriesElement:
        m = self.rng.randint(0, max_principal)
        principal = [self.scalar() if self.rng.random() < density else 0 for _ in range(m)]
        tail = [self.scalar() if self.rng.random() < density else 0 for _ in range(order + 1)]
        return LaurentSeriesElement(self.field, principal, tail, order)
