"""Bookkeeping shared by the series-like module elements.

Each element has a head coefficient (index -1) and a tail indexed 0..order.
``exact=True`` means every tail coefficient past ``order`` is zero, so the
element is fully known; otherwise coefficients past ``order`` are unknown
and asking for them raises :class:`PrecisionError`.
"""

from __future__ import annotations

from ..laurent import PrecisionError


class InconclusiveError(ValueError):
    """An element is zero on every known coefficient but is truncated."""


class TruncatedTail:
    """Mixin: subclasses define ``head``, ``tail``, ``order``, ``exact`` and
    ``_zero_coeff()``."""

    __slots__ = ()

    def tail_at(self, i: int):
        if i < 0:
            raise IndexError("tail index must be >= 0")
        if i <= self.order:
            return self.tail[i]
        if self.exact:
            return self._zero_coeff()
        raise PrecisionError(
            f"coefficient {i} needed but {type(self).__name__} is valid only to order {self.order}"
        )

    def combined_order(self, other) -> tuple[int, bool]:
        if self.exact and other.exact:
            return max(self.order, other.order), True
        if self.exact:
            return other.order, False
        if other.exact:
            return self.order, False
        return min(self.order, other.order), False

    def known_zero(self) -> bool:
        """Zero on every known coefficient."""
        return not self.head and not any(self.tail)

    def is_zero(self) -> bool:
        """Zero as an element; InconclusiveError when only known coefficients vanish."""
        if not self.known_zero():
            return False
        if self.exact:
            return True
        raise InconclusiveError(f"zero up to order {self.order}; inconclusive beyond")

    def agrees(self, other) -> bool:
        """Equality on the coefficients both sides know."""
        if self.head != other.head:
            return False
        order, _ = self.combined_order(other)
        return all(self.tail_at(i) == other.tail_at(i) for i in range(order + 1))

    def first_nonzero(self) -> int | None:
        """Least index i >= -1 with a nonzero coefficient, among known ones."""
        if self.head:
            return -1
        for i, q in enumerate(self.tail):
            if q:
                return i
        return None


def normalize_tail(tail: list, order: int | None, exact: bool, zero) -> tuple[tuple, int]:
    """Pad/trim a tail to its order; exact tails drop trailing zeros."""
    if exact:
        # the order of an exact element is read off its support
        tail = list(tail)
        while tail and not tail[-1]:
            tail.pop()
        return tuple(tail), len(tail) - 1
    if order is None:
        raise ValueError("truncated elements need an explicit order")
    if order < -1:
        raise PrecisionError(f"valid order {order} < -1")
    tail = list(tail[: order + 1])
    tail += [zero] * (order + 1 - len(tail))
    return tuple(tail), order
