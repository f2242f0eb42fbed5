"""Modules over R/J = K[cbar, cbar^-1]: Prufer modules U^f and K(cbar).

U^f is the direct limit of K[cbar, cbar^-1]/(f^n) along r + (f^n) -> r f + (f^(n+1)).
An element is a pair (level n, residue) with the residue the unique
polynomial of degree < n deg f representing it; since f(0) = 1, cbar is a
unit modulo f^n and negative powers are replaced by powers of its inverse.
Levels are kept minimal: a residue divisible by f is pushed down a level.
R acts on both modules through the quotient map, so J acts as zero.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from ..core import AlgebraElement
from ..laurent import (
    FactorResult,
    LaurentPoly,
    Poly,
    RationalFunc,
    ensure_one_at_zero,
    factor_check,
    poly_inverse_mod,
    quotient_map,
)


class ReducibleParameterError(ValueError):
    """U^f requested for a reducible or uncertified f."""


@lru_cache(maxsize=None)
def certify(f: Poly, acknowledge_unverified: bool = False) -> FactorResult:
    """Check that f is a valid Prufer parameter: f(0) = 1 and f irreducible."""
    ensure_one_at_zero(f, "Prufer parameter")
    res = factor_check(f)
    if res.status == "factor":
        raise ReducibleParameterError(f"{f} = ({res.factor}) * ({res.cofactor}) is reducible")
    if res.status == "unverified" and not acknowledge_unverified:
        raise ReducibleParameterError(f"irreducibility of {f} is unverified ({res.reason}); pass acknowledge_unverified=True")
    return res


@lru_cache(maxsize=None)
def _x_inverse(f: Poly, n: int) -> Poly:
    mod = f ** n
    return poly_inverse_mod(Poly.x(f.field), mod)


def _residue(value, f: Poly, n: int) -> Poly:
    """Reduce a Laurent polynomial (or Poly) modulo f^n to degree < n deg f."""
    mod = f ** n
    if isinstance(value, Poly):
        return value % mod
    s, g = value.split()
    if s >= 0:
        return g.shift(s) % mod
    inv = _x_inverse(f, n)
    return (g * inv ** (-s)) % mod


@dataclass(frozen=True)
class PruferElement:
    f: Poly
    level: int
    residue: Poly

    def __post_init__(self):
        if self.level < 1:
            raise ValueError("level must be >= 1")
        if self.residue.degree >= self.level * self.f.degree:
            raise ValueError("residue not reduced; build elements with prufer_element()")

    @property
    def field(self):
        return self.f.field

    def __bool__(self):
        return bool(self.residue)

    def __add__(self, other: PruferElement) -> PruferElement:
        if not isinstance(other, PruferElement) or other.f != self.f:
            return NotImplemented
        n = max(self.level, other.level)
        a = self.residue * self.f ** (n - self.level)
        b = other.residue * self.f ** (n - other.level)
        return prufer_element(self.f, n, a + b, _certified=True)

    def __neg__(self):
        return PruferElement(self.f, self.level, -self.residue)

    def __sub__(self, other):
        return self + (-other)

    def to_json(self) -> dict:
        return {"f": str(self.f), "level": self.level, "residue": str(self.residue)}

    def __str__(self):
        return f"[{str(self.residue).replace('x', 'cbar')}] mod ({str(self.f).replace('x', 'cbar')})^{self.level}"


def prufer_element(f: Poly, level: int, residue, acknowledge_unverified: bool = False,
                   _certified: bool = False) -> PruferElement:
    """Canonical element of U^f at minimal level."""
    if not _certified:
        certify(f, acknowledge_unverified)
    if isinstance(residue, str):
        residue = LaurentPoly.parse(residue, f.field)
    r = _residue(residue, f, level)
    n = level
    while n > 1:
        q, rem = divmod(r, f)
        if rem:
            break
        r, n = q, n - 1
    if not r:
        n = 1
    return PruferElement(f, n, r)


def prufer_act(r, u: PruferElement) -> PruferElement:
    """r . u through quotient_map(r); r may also be a LaurentPoly or Poly."""
    if isinstance(r, AlgebraElement):
        r = quotient_map(r)
    if isinstance(r, Poly):
        r = LaurentPoly.from_poly(r)
    prod = _residue(r, u.f, u.level) * u.residue
    return prufer_element(u.f, u.level, prod, _certified=True)


def prufer_divisibility_witness(u: PruferElement) -> PruferElement:
    """u' with f(cbar) u' = u: the same residue one level up."""
    if not u:
        return u
    return prufer_element(u.f, u.level + 1, u.residue, _certified=True)


def rational_act(r, q: RationalFunc) -> RationalFunc:
    """r . q in K(cbar) through quotient_map(r)."""
    if isinstance(r, AlgebraElement):
        r = quotient_map(r)
    return q * r
