"""The quotient R/J = K[cbar, cbar^-1] and the commutative tools around it.

Contents: dense polynomials :class:`Poly`, Laurent polynomials
:class:`LaurentPoly`, truncated power series :class:`SeriesPrefix`,
truncated Laurent series :class:`LaurentSeriesElement`, and the fraction
field :class:`RationalFunc`.  The maps out of R are :func:`quotient_map`
and :func:`is_in_socle`; :func:`series_inverse` solves p B = 1 in K[[x]]
and :func:`factor_check` decides irreducibility at desk scale.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Iterable, Mapping, Sequence

from .core import AlgebraElement, Shape, format_terms
from .field import Field, FieldMismatchError, FieldScalar
from .parser import DEFAULT_MAX_EXPONENT, RingSyntax, parse_with


class PrecisionError(ArithmeticError):
    """A truncated value was asked for a coefficient beyond its valid order."""


# --- polynomials ---------------------------------------------------------------


class Poly:
    """p_0 + p_1 x + ... + p_n x^n over a field; zero is the empty tuple."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field: Field, coeffs: Iterable = ()):
        cs = [field(k) for k in coeffs]
        while cs and not cs[-1]:
            cs.pop()
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("Poly is immutable")

    @classmethod
    def x(cls, field: Field) -> Poly:
        return cls(field, (0, 1))

    @classmethod
    def constant(cls, field: Field, k) -> Poly:
        return cls(field, (k,))

    @classmethod
    def monomial(cls, field: Field, n: int, k=1) -> Poly:
        return cls(field, [0] * n + [k])

    @classmethod
    def parse(cls, text: str, field: Field | None = None) -> Poly:
        """Parse ``1 + 2x + x^2`` (variable ``x``)."""
        field = field or Field.rational()
        return parse_with(text, poly_syntax(field))

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def __getitem__(self, k: int) -> FieldScalar:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else self.field.zero

    def __bool__(self):
        return bool(self.coeffs)

    def __len__(self):
        return len(self.coeffs)

    def lead(self) -> FieldScalar:
        return self.coeffs[-1] if self.coeffs else self.field.zero

    def _check(self, other: Poly):
        if self.field != other.field:
            raise FieldMismatchError(f"cannot combine {self.field} and {other.field}")

    def _lift(self, other) -> Poly:
        if isinstance(other, Poly):
            self._check(other)
            return other
        if isinstance(other, (FieldScalar, int, Fraction)):
            return Poly(self.field, (self.field(other),))
        return NotImplemented

    def __add__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        n = max(len(self.coeffs), len(other.coeffs))
        return Poly(self.field, [self[k] + other[k] for k in range(n)])

    __radd__ = __add__

    def __neg__(self):
        return Poly(self.field, [-k for k in self.coeffs])

    def __sub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        if not self.coeffs or not other.coeffs:
            return Poly(self.field)
        out = [self.field.zero] * (len(self.coeffs) + len(other.coeffs) - 1)
        for a, ka in enumerate(self.coeffs):
            if not ka:
                continue
            for b, kb in enumerate(other.coeffs):
                out[a + b] = out[a + b] + ka * kb
        return Poly(self.field, out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power of a polynomial")
        out = Poly.constant(self.field, 1)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __divmod__(self, other: Poly):
        self._check(other)
        if not other:
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dq = other.degree
        inv = other.lead().inverse()
        quo = [self.field.zero] * max(len(rem) - dq, 0)
        for k in range(len(rem) - 1, dq - 1, -1):
            t = rem[k] * inv
            if not t:
                continue
            quo[k - dq] = t
            for m, om in enumerate(other.coeffs):
                rem[k - dq + m] = rem[k - dq + m] - t * om
        return Poly(self.field, quo), Poly(self.field, rem[:dq] if dq > 0 else [])

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def divides(self, other: Poly) -> bool:
        return not (other % self)

    def monic(self) -> Poly:
        if not self:
            return self
        inv = self.lead().inverse()
        return Poly(self.field, [k * inv for k in self.coeffs])

    def __call__(self, x: FieldScalar) -> FieldScalar:
        acc = self.field.zero
        for k in reversed(self.coeffs):
            acc = acc * x + k
        return acc

    def shift(self, n: int) -> Poly:
        """Multiply by x^n (n >= 0)."""
        return Poly(self.field, [0] * n + list(self.coeffs)) if self else self

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.field == other.field and self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction, FieldScalar)):
            return self == Poly(self.field, (self.field(other),))
        return NotImplemented

    def __hash__(self):
        return hash((self.field, self.coeffs))

    def __str__(self):
        return format_terms([(_xpow("x", k), c) for k, c in enumerate(self.coeffs) if c])

    def __repr__(self):
        return f"Poly({self.field}, {self})"


def _xpow(var: str, k: int) -> str:
    if k == 0:
        return ""
    return var if k == 1 else f"{var}^{k}"


def poly_gcd(a: Poly, b: Poly) -> Poly:
    """Monic gcd (zero if both are zero)."""
    while b:
        a, b = b, a % b
    return a.monic()


def poly_xgcd(a: Poly, b: Poly) -> tuple[Poly, Poly, Poly]:
    """(g, s, t) with s a + t b = g monic."""
    field = a.field
    r0, r1 = a, b
    s0, s1 = Poly.constant(field, 1), Poly(field)
    t0, t1 = Poly(field), Poly.constant(field, 1)
    while r1:
        q, r = divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    if not r0:
        return r0, s0, t0
    inv = r0.lead().inverse()
    return r0 * inv, s0 * inv, t0 * inv


def poly_inverse_mod(a: Poly, m: Poly) -> Poly:
    g, s, _ = poly_xgcd(a % m, m)
    if g.degree != 0:
        raise ZeroDivisionError(f"{a} is not invertible modulo {m}")
    return s % m


def poly_syntax(field: Field) -> RingSyntax:
    return RingSyntax(
        field=field,
        identifiers={"x": lambda: Poly.x(field)},
        from_scalar=lambda k: Poly(field, (k,)),
        name="polynomial",
    )


# --- Laurent polynomials -------------------------------------------------------


class LaurentPoly:
    """Finite sum of k_e cbar^e with integer e; stored as {e: k}."""

    __slots__ = ("field", "terms")

    def __init__(self, field: Field, terms: Mapping[int, object] | None = None):
        clean = {}
        for e, k in (terms or {}).items():
            k = field(k)
            if k:
                clean[int(e)] = k
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "terms", dict(sorted(clean.items())))

    def __setattr__(self, name, value):
        raise AttributeError("LaurentPoly is immutable")

    @classmethod
    def monomial(cls, field: Field, e: int, k=1) -> LaurentPoly:
        return cls(field, {e: k})

    @classmethod
    def from_poly(cls, p: Poly, shift: int = 0) -> LaurentPoly:
        return cls(p.field, {k + shift: c for k, c in enumerate(p.coeffs)})

    @classmethod
    def parse(cls, text: str, field: Field | None = None) -> LaurentPoly:
        """Parse ``x^-1 + 2 + x`` (variable ``x`` standing for cbar)."""
        field = field or Field.rational()
        return parse_with(text, laurent_syntax(field))

    def __bool__(self):
        return bool(self.terms)

    def _lift(self, other):
        if isinstance(other, LaurentPoly):
            if other.field != self.field:
                raise FieldMismatchError(f"cannot combine {self.field} and {other.field}")
            return other
        if isinstance(other, Poly):
            return LaurentPoly.from_poly(other)
        if isinstance(other, (FieldScalar, int, Fraction)):
            return LaurentPoly(self.field, {0: other})
        return NotImplemented

    def __add__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        out = dict(self.terms)
        for e, k in other.terms.items():
            out[e] = out.get(e, self.field.zero) + k
        return LaurentPoly(self.field, out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly(self.field, {e: -k for e, k in self.terms.items()})

    def __sub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __mul__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        out: dict[int, FieldScalar] = {}
        for a, ka in self.terms.items():
            for b, kb in other.terms.items():
                out[a + b] = out.get(a + b, self.field.zero) + ka * kb
        return LaurentPoly(self.field, out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            if len(self.terms) != 1:
                raise ValueError("only monomials are invertible in K[cbar, cbar^-1]")
            (e, k), = self.terms.items()
            return LaurentPoly(self.field, {e * n: k ** n})
        out = LaurentPoly(self.field, {0: 1})
        for _ in range(n):
            out = out * self
        return out

    def min_exp(self) -> int:
        return min(self.terms, default=0)

    def max_exp(self) -> int:
        return max(self.terms, default=0)

    def split(self) -> tuple[int, Poly]:
        """(s, g) with self = cbar^s g(cbar) and g(0) != 0 (g = 0 for zero)."""
        if not self.terms:
            return 0, Poly(self.field)
        s = self.min_exp()
        return s, Poly(self.field, [self.terms.get(e, 0) for e in range(s, self.max_exp() + 1)])

    def coeff(self, e: int) -> FieldScalar:
        return self.terms.get(e, self.field.zero)

    def __eq__(self, other):
        if isinstance(other, LaurentPoly):
            return self.field == other.field and self.terms == other.terms
        if isinstance(other, (int, Fraction, FieldScalar, Poly)):
            return self == self._lift(other)
        return NotImplemented

    def __hash__(self):
        return hash((self.field, tuple(self.terms.items())))

    def __str__(self):
        return format_terms([(_laurent_mono(e), k) for e, k in self.terms.items()])

    def __repr__(self):
        return f"LaurentPoly({self.field}, {self})"


def _laurent_mono(e: int, var: str = "cbar") -> str:
    if e == 0:
        return ""
    return var if e == 1 else f"{var}^{e}"


def laurent_syntax(field: Field) -> RingSyntax:
    return RingSyntax(
        field=field,
        identifiers={"x": lambda: LaurentPoly.monomial(field, 1)},
        from_scalar=lambda k: LaurentPoly(field, {0: k}),
        name="laurent",
    )


# --- the quotient map R -> R/J -------------------------------------------------

_J_SHAPES = (Shape.W, Shape.D, Shape.CD, Shape.DSTAR, Shape.DSTARCSTAR)


def quotient_map(x: AlgebraElement) -> LaurentPoly:
    """Image in K[cbar, cbar^-1]: c^i (c*)^j -> cbar^(i-j); words through w -> 0."""
    out: dict[int, FieldScalar] = {}
    for word, k in x.terms.items():
        if word.shape in _J_SHAPES:
            continue
        e = word.i - word.j
        out[e] = out.get(e, x.field.zero) + k
    return LaurentPoly(x.field, out)


def is_in_socle(x: AlgebraElement) -> bool:
    """Membership in J = <w>, i.e. vanishing in R/J."""
    return not quotient_map(x)


# --- power series --------------------------------------------------------------


@dataclass(frozen=True)
class SeriesPrefix:
    """b_0 + b_1 x + ... + b_N x^N, known modulo x^(N+1)."""

    field: Field
    coeffs: tuple

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, k: int) -> FieldScalar:
        if k > self.order:
            raise PrecisionError(f"b_{k} requested but series is valid only to order {self.order}")
        return self.coeffs[k] if k >= 0 else self.field.zero

    def mul_poly(self, p: Poly) -> SeriesPrefix:
        """(p * B) mod x^(N+1)."""
        n = self.order
        out = []
        for m in range(n + 1):
            acc = self.field.zero
            for j in range(min(m, p.degree) + 1):
                acc = acc + p[j] * self.coeffs[m - j]
            out.append(acc)
        return SeriesPrefix(self.field, tuple(out))

    def as_poly(self) -> Poly:
        return Poly(self.field, self.coeffs)

    def __str__(self):
        return "(" + ", ".join(str(k) for k in self.coeffs) + ")"


def series_inverse(p: Poly, order: int) -> SeriesPrefix:
    """B with p B = 1 mod x^(order+1), for p(0) = 1.

    Solved by the recurrence p_0 b_0 = 1, sum_{j=0}^{N} p_j b_{N-j} = 0.
    """
    if order < 0:
        raise ValueError("order must be >= 0")
    if p[0] != 1:
        raise ValueError(f"series_inverse needs p(0) = 1, got p(0) = {p[0]}")
    b = [p.field.one]
    for n in range(1, order + 1):
        acc = p.field.zero
        for j in range(1, min(n, p.degree) + 1):
            acc = acc + p[j] * b[n - j]
        b.append(-acc)
    return SeriesPrefix(p.field, tuple(b))


# --- truncated Laurent series --------------------------------------------------


class LaurentSeriesElement:
    """sum_{e >= -m} a_e cbar^e, principal part finite, tail known to ``order``.

    ``principal[k]`` is a_{-(k+1)}; ``tail[e]`` is a_e for 0 <= e <= order.
    With ``exact=True`` every coefficient past ``order`` is zero.
    """

    __slots__ = ("field", "principal", "tail", "order", "exact")

    def __init__(self, field: Field, principal: Sequence = (), tail: Sequence = (),
                 order: int | None = None, exact: bool = False):
        pr = [field(k) for k in principal]
        while pr and not pr[-1]:
            pr.pop()
        tl = [field(k) for k in tail]
        if order is None:
            order = len(tl) - 1
        if order < -1:
            raise PrecisionError(f"valid order {order} < -1")
        if len(tl) > order + 1:
            extra = tl[order + 1:]
            if exact and any(extra):
                order = len(tl) - 1
            else:
                tl = tl[: order + 1]
        tl += [field.zero] * (order + 1 - len(tl))
        if exact:
            while tl and not tl[-1]:
                tl.pop()
            order = len(tl) - 1
        for name, val in (("field", field), ("principal", tuple(pr)), ("tail", tuple(tl)),
                          ("order", order), ("exact", exact)):
            object.__setattr__(self, name, val)

    def __setattr__(self, name, value):
        raise AttributeError("LaurentSeriesElement is immutable")

    @classmethod
    def from_coeffs(cls, field: Field, coeffs: Mapping[int, object], order: int, exact: bool = False):
        lo = min([e for e in coeffs if e < 0], default=0)
        principal = [coeffs.get(-k, 0) for k in range(1, -lo + 1)]
        tail = [coeffs.get(e, 0) for e in range(0, order + 1)]
        return cls(field, principal, tail, order, exact)

    @classmethod
    def from_laurent(cls, x: LaurentPoly) -> LaurentSeriesElement:
        return cls.from_coeffs(x.field, x.terms, max(x.max_exp(), 0), exact=True)

    def coeff(self, e: int) -> FieldScalar:
        if e < 0:
            k = -e - 1
            return self.principal[k] if k < len(self.principal) else self.field.zero
        if e <= self.order:
            return self.tail[e]
        if self.exact:
            return self.field.zero
        raise PrecisionError(f"a'_{e} requested but series is valid only to order {self.order}")

    @property
    def low(self) -> int:
        return -len(self.principal)

    def _combine_order(self, other) -> tuple[int, bool]:
        if self.exact and other.exact:
            return max(self.order, other.order), True
        if self.exact:
            return other.order, False
        if other.exact:
            return self.order, False
        return min(self.order, other.order), False

    def __add__(self, other):
        if not isinstance(other, LaurentSeriesElement):
            return NotImplemented
        order, exact = self._combine_order(other)
        lo = min(self.low, other.low)
        coeffs = {e: self.coeff(e) + other.coeff(e) for e in range(lo, order + 1)}
        return LaurentSeriesElement.from_coeffs(self.field, coeffs, order, exact)

    def __neg__(self):
        return LaurentSeriesElement(self.field, [-k for k in self.principal], [-k for k in self.tail],
                                    self.order, self.exact)

    def __sub__(self, other):
        return self + (-other)

    def scale(self, k) -> LaurentSeriesElement:
        k = self.field(k)
        return LaurentSeriesElement(self.field, [k * a for a in self.principal], [k * a for a in self.tail],
                                    self.order, self.exact)

    def mul_laurent(self, f: LaurentPoly) -> LaurentSeriesElement:
        """Multiply by a Laurent polynomial; valid order shifts by min_exp(f)."""
        if not f:
            return LaurentSeriesElement(self.field, exact=True)
        if self.exact:
            order = max(self.order + f.max_exp(), -1)
        else:
            order = self.order + f.min_exp()
        lo = self.low + f.min_exp()
        coeffs = {}
        for e in range(lo, max(order, -1) + 1):
            acc = self.field.zero
            for s, k in f.terms.items():
                if e - s >= self.low:
                    acc = acc + k * self.coeff(e - s)
            coeffs[e] = acc
        if order < -1:
            raise PrecisionError(f"product valid order {order} < -1")
        return LaurentSeriesElement.from_coeffs(self.field, coeffs, order, self.exact)

    def shift(self, n: int) -> LaurentSeriesElement:
        """Multiply by cbar^n."""
        return self.mul_laurent(LaurentPoly.monomial(self.field, n))

    def truncate(self, order: int) -> LaurentSeriesElement:
        """Forget every coefficient past ``order``."""
        if order > self.order and not self.exact:
            raise PrecisionError(f"cannot extend valid order {self.order} to {order}")
        return LaurentSeriesElement(self.field, self.principal, [self.coeff(e) for e in range(order + 1)], order)

    def is_zero(self) -> bool:
        """Zero on every coefficient that is known."""
        return not any(self.principal) and not any(self.tail)

    def agrees(self, other: LaurentSeriesElement) -> bool:
        """Equality on the coefficients both operands know."""
        order, _ = self._combine_order(other)
        lo = min(self.low, other.low)
        return all(self.coeff(e) == other.coeff(e) for e in range(lo, order + 1))

    def __eq__(self, other):
        if not isinstance(other, LaurentSeriesElement):
            return NotImplemented
        return (self.field, self.principal, self.tail, self.order, self.exact) == (
            other.field, other.principal, other.tail, other.order, other.exact)

    def __hash__(self):
        return hash((self.field, self.principal, self.tail, self.order, self.exact))

    def to_json(self) -> dict:
        return {
            "principal": [str(k) for k in self.principal],
            "tail": [str(k) for k in self.tail],
            "order": self.order,
            "exact": self.exact,
        }

    def __str__(self):
        items = [(_laurent_mono(-(k + 1)), a) for k, a in reversed(list(enumerate(self.principal))) if a]
        items += [(_laurent_mono(e), a) for e, a in enumerate(self.tail) if a]
        body = format_terms(items)
        return body if self.exact else f"{body} + O(cbar^{self.order + 1})"

    def __repr__(self):
        return f"LaurentSeriesElement({self.field}, {self})"


def back_substitute(p: Poly, product: LaurentSeriesElement) -> LaurentSeriesElement:
    """Recover t from p(cbar) t, using the series inverse of p (p(0) = 1)."""
    n = product.order - product.low
    inv = series_inverse(p, max(n, 0))
    return product.mul_laurent(LaurentPoly.from_poly(inv.as_poly())).truncate(product.order)


# --- rational functions --------------------------------------------------------


class RationalFunc:
    """num(cbar) / den(cbar), reduced, with monic denominator."""

    __slots__ = ("field", "num", "den")

    def __init__(self, num: Poly, den: Poly | None = None):
        field = num.field
        den = den if den is not None else Poly.constant(field, 1)
        num._check(den)
        if not den:
            raise ZeroDivisionError("zero denominator")
        g = poly_gcd(num, den) if num else den.monic()
        num, den = num // g, den // g
        lc = den.lead().inverse()
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "num", num * lc)
        object.__setattr__(self, "den", den * lc)

    def __setattr__(self, name, value):
        raise AttributeError("RationalFunc is immutable")

    @classmethod
    def from_laurent(cls, x: LaurentPoly) -> RationalFunc:
        s, g = x.split()
        if s >= 0:
            return cls(g.shift(s))
        return cls(g, Poly.monomial(x.field, -s))

    def __add__(self, other):
        if not isinstance(other, RationalFunc):
            return NotImplemented
        return RationalFunc(self.num * other.den + other.num * self.den, self.den * other.den)

    def __neg__(self):
        return RationalFunc(-self.num, self.den)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, LaurentPoly):
            other = RationalFunc.from_laurent(other)
        if not isinstance(other, RationalFunc):
            return NotImplemented
        return RationalFunc(self.num * other.num, self.den * other.den)

    def __truediv__(self, other):
        if not isinstance(other, RationalFunc):
            return NotImplemented
        if not other.num:
            raise ZeroDivisionError("division by zero rational function")
        return RationalFunc(self.num * other.den, self.den * other.num)

    def __bool__(self):
        return bool(self.num)

    def __eq__(self, other):
        if isinstance(other, RationalFunc):
            return self.field == other.field and self.num * other.den == other.num * self.den
        return NotImplemented

    def __hash__(self):
        return hash((self.num, self.den))

    def to_json(self) -> dict:
        return {"num": str(self.num), "den": str(self.den)}

    def __str__(self):
        if self.den.degree == 0:
            return str(self.num).replace("x", "cbar")
        return f"({self.num}) / ({self.den})".replace("x", "cbar")

    def __repr__(self):
        return f"RationalFunc({self.field}, {self})"


# --- irreducibility ------------------------------------------------------------

GF_EXACT_DEGREE = 12
Q_EXACT_DEGREE = 4


@dataclass(frozen=True)
class FactorResult:
    """Outcome of :func:`factor_check`.

    ``status`` is ``"irreducible"``, ``"factor"`` (with ``factor`` and
    ``cofactor``) or ``"unverified"`` when the input is beyond the exact
    desk-scale range.
    """

    status: str
    factor: Poly | None = None
    cofactor: Poly | None = None
    reason: str = ""

    @property
    def irreducible(self) -> bool:
        return self.status == "irreducible"


def factor_check(f: Poly) -> FactorResult:
    """Decide irreducibility of f with f(0) = 1 and deg f >= 1.

    GF(p): exhaustive search over monic divisors up to half the degree
    (exact for deg f <= 12).  Q: rational roots plus a search for integer
    quadratic factors whose middle coefficient is limited by the Cauchy
    root bound (exact for deg f <= 4).
    """
    if f.degree < 1:
        raise ValueError("factor_check needs deg f >= 1")
    if f[0] != 1:
        raise ValueError(f"factor_check needs f(0) = 1, got {f[0]}")
    if f.degree == 1:
        return FactorResult("irreducible")
    if f.field.is_finite:
        if f.degree > GF_EXACT_DEGREE:
            return FactorResult("unverified", reason=f"degree {f.degree} > {GF_EXACT_DEGREE} over {f.field}")
        return _factor_gf(f)
    if f.degree > Q_EXACT_DEGREE:
        return FactorResult("unverified", reason=f"degree {f.degree} > {Q_EXACT_DEGREE} over Q")
    return _factor_q(f)


def _int_divmod_gf(num: list[int], den: list[int], p: int) -> list[int]:
    """Remainder of num by monic den over GF(p) (low-to-high int lists)."""
    rem = num[:]
    dq = len(den) - 1
    for k in range(len(rem) - 1, dq - 1, -1):
        t = rem[k]
        if t:
            for m in range(dq + 1):
                rem[k - dq + m] = (rem[k - dq + m] - t * den[m]) % p
    return rem[:dq]


def _factor_gf(f: Poly) -> FactorResult:
    p = f.field.p
    fm = f.monic()
    ints = [k.value for k in fm.coeffs]
    for d in range(1, f.degree // 2 + 1):
        # constant term of a divisor of f is nonzero since f(0) != 0
        for low in itertools.product(range(p), repeat=d):
            if low[0] == 0:
                continue
            cand = list(low) + [1]
            if not any(_int_divmod_gf(ints, cand, p)):
                g = Poly(f.field, cand)
                return FactorResult("factor", g, f // g)
    return FactorResult("irreducible")


def _divisors(n: int) -> list[int]:
    n = abs(n)
    small = [k for k in range(1, int(n ** 0.5) + 1) if n % k == 0]
    return sorted(set(small + [n // k for k in small]))


def _primitive_int(f: Poly) -> list[int]:
    vals = [k.value for k in f.coeffs]
    den = 1
    for v in vals:
        den = den * v.denominator // gcd(den, v.denominator)
    ints = [int(v * den) for v in vals]
    g = 0
    for v in ints:
        g = gcd(g, v)
    return [v // g for v in ints]


def _factor_q(f: Poly) -> FactorResult:
    Q = f.field
    F = _primitive_int(f)
    lc, c0 = F[-1], F[0]
    for a in _divisors(c0):
        for b in _divisors(lc):
            for r in (Fraction(a, b), Fraction(-a, b)):
                if f(Q(r)) == 0:
                    g = Poly(Q, (-r, 1))
                    return FactorResult("factor", g, f // g)
    if f.degree < 4:
        return FactorResult("irreducible")
    bound = 1 + max(abs(Fraction(v, lc)) for v in F[:-1])
    for a2 in _divisors(lc):
        span = int(2 * a2 * bound) + 1
        for a0 in _divisors(c0):
            for s0 in (a0, -a0):
                for a1 in range(-span, span + 1):
                    g = Poly(Q, (s0, a1, a2))
                    if g.divides(f):
                        return FactorResult("factor", g, f // g)
    return FactorResult("irreducible")


def ensure_one_at_zero(p: Poly, what: str = "polynomial") -> None:
    if p[0] != 1:
        raise ValueError(f"{what} must satisfy p(0) = 1, got p(0) = {p[0]}")


def parse_poly(text: str, field: Field, max_exponent: int = DEFAULT_MAX_EXPONENT) -> Poly:
    return parse_with(text, poly_syntax(field), max_exponent)
