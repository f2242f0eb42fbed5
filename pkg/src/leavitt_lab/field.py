"""Exact scalar fields: the rationals and prime fields GF(p).

A :class:`Field` is a configuration value shared by a whole computation.
Elements are :class:`FieldScalar` instances; mixing elements of different
fields raises :class:`FieldMismatchError`.

    >>> Q = Field.rational()
    >>> Q("1/2") + Q("1/3")
    FieldScalar(Q, 5/6)
    >>> F7 = Field.gf(7)
    >>> F7(3).inverse()
    FieldScalar(GF(7), 5)
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache


class FieldMismatchError(TypeError):
    """Operands belong to different fields."""


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    k = 3
    while k * k <= n:
        if n % k == 0:
            return False
        k += 2
    return True


@dataclass(frozen=True)
class Field:
    """Either Q (``p is None``) or GF(p)."""

    p: int | None = None

    def __post_init__(self):
        if self.p is not None and not _is_prime(self.p):
            raise ValueError(f"GF({self.p}): {self.p} is not prime")

    @staticmethod
    def rational() -> Field:
        return _field(None)

    @staticmethod
    def gf(p: int) -> Field:
        return _field(int(p))

    @staticmethod
    def parse(spec: str) -> Field:
        """Parse the CLI syntax ``q`` or ``gf:<p>``."""
        s = spec.strip().lower()
        if s in ("q", "qq", "rational"):
            return Field.rational()
        if s.startswith("gf:"):
            try:
                p = int(s[3:])
            except ValueError:
                raise ValueError(f"bad field spec {spec!r}") from None
            return Field.gf(p)
        raise ValueError(f"bad field spec {spec!r}; use 'q' or 'gf:<p>'")

    @property
    def characteristic(self) -> int:
        return 0 if self.p is None else self.p

    @property
    def is_finite(self) -> bool:
        return self.p is not None

    def __call__(self, value) -> FieldScalar:
        if isinstance(value, FieldScalar):
            if value.field != self:
                raise FieldMismatchError(f"{value!r} is not an element of {self}")
            return value
        if isinstance(value, str):
            return self._parse_literal(value)
        if isinstance(value, Fraction):
            return self._from_fraction(value)
        if isinstance(value, int):
            return FieldScalar(self, self._norm_int(value))
        raise TypeError(f"cannot convert {type(value).__name__} to {self}")

    def _norm_int(self, n: int):
        return Fraction(n) if self.p is None else n % self.p

    def _from_fraction(self, q: Fraction) -> FieldScalar:
        if self.p is None:
            return FieldScalar(self, q)
        den = q.denominator % self.p
        if den == 0:
            raise ZeroDivisionError(f"denominator {q.denominator} vanishes in {self}")
        return FieldScalar(self, q.numerator * pow(den, -1, self.p) % self.p)

    def _parse_literal(self, text: str) -> FieldScalar:
        try:
            q = Fraction(text.strip())
        except (ValueError, ZeroDivisionError):
            raise ValueError(f"bad scalar literal {text!r}") from None
        if q.denominator != 1 and "." in text:
            raise ValueError(f"decimal literals are not exact scalars: {text!r}")
        return self._from_fraction(q)

    @property
    def zero(self) -> FieldScalar:
        return FieldScalar(self, self._norm_int(0))

    @property
    def one(self) -> FieldScalar:
        return FieldScalar(self, self._norm_int(1))

    def elements(self):
        """Enumerate GF(p); only defined for finite fields."""
        if self.p is None:
            raise ValueError("Q is infinite")
        return [FieldScalar(self, k) for k in range(self.p)]

    def __str__(self):
        return "Q" if self.p is None else f"GF({self.p})"

    def spec(self) -> str:
        return "q" if self.p is None else f"gf:{self.p}"


@lru_cache(maxsize=None)
def _field(p):
    return Field(p)


class FieldScalar:
    """Immutable exact field element."""

    __slots__ = ("field", "value")

    def __init__(self, field: Field, value):
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "value", value)

    def __setattr__(self, name, value):
        raise AttributeError("FieldScalar is immutable")

    def _coerce(self, other) -> FieldScalar:
        if isinstance(other, FieldScalar):
            if other.field is not self.field and other.field != self.field:
                raise FieldMismatchError(f"cannot combine {self.field} and {other.field}")
            return other
        if isinstance(other, (int, Fraction)):
            return self.field(other)
        return NotImplemented

    def _wrap(self, v) -> FieldScalar:
        p = self.field.p
        return FieldScalar(self.field, v if p is None else v % p)

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self._wrap(self.value + o.value)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self._wrap(self.value - o.value)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self._wrap(o.value - self.value)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self._wrap(self.value * o.value)

    __rmul__ = __mul__

    def __neg__(self):
        return self._wrap(-self.value)

    def inverse(self) -> FieldScalar:
        if not self.value:
            raise ZeroDivisionError(f"inverse of zero in {self.field}")
        p = self.field.p
        if p is None:
            return FieldScalar(self.field, 1 / self.value)
        return FieldScalar(self.field, pow(self.value, -1, p))

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return o * self.inverse()

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        p = self.field.p
        if p is None:
            return FieldScalar(self.field, self.value ** n)
        return FieldScalar(self.field, pow(self.value, n, p))

    def __bool__(self):
        return bool(self.value)

    def __eq__(self, other):
        if isinstance(other, FieldScalar):
            return self.field == other.field and self.value == other.value
        if isinstance(other, (int, Fraction)):
            try:
                return self.value == self.field(other).value
            except ZeroDivisionError:
                return False
        return NotImplemented

    def __hash__(self):
        return hash((self.field, self.value))

    def is_one(self) -> bool:
        return self.value == 1

    def __str__(self):
        v = self.value
        if self.field.p is None and v.denominator == 1:
            return str(v.numerator)
        return str(v)

    def __repr__(self):
        return f"FieldScalar({self.field}, {self})"
