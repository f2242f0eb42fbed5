"""Theta = d*c*K[c*] + [[c]](c*K[c*]), the injective envelope E(Rc*).

An element

    d* c* q_{-1}(c*) + sum_{i >= 0} c^i c* q_i(c*)

is stored as ``head = q_{-1}`` and ``tail = (q_0, ..., q_N)`` with each q_i a
:class:`Poly` in the variable x standing for c*.  The six generators act by
the maps P_v, P_w, P_c, P_{c*}, P_d, P_{d*}:

    P_v:  drop q_{-1}                 P_w:  keep only q_{-1}
    P_c:  q_i -> index i+1            P_{c*}: q_0 -> x q_0 + q_1, q_i -> index i-1
    P_d:  q_0 = q_{-1}, q_1 = -x q_{-1}  (that is (v - cc*) c* q_{-1}(c*))
    P_{d*}: q_{-1} = q_0, series cleared

Elements with ``bound`` set are declared to lie in the bounded submodule
E(Rc*)^b with every deg q_i <= bound.
"""

from __future__ import annotations

from typing import Sequence

from ..core import AlgebraElement, BasisWord, Shape
from ..field import Field
from ..laurent import (
    LaurentPoly,
    LaurentSeriesElement,
    Poly,
    PrecisionError,
    back_substitute,
    ensure_one_at_zero,
    series_inverse,
)
from .truncated import InconclusiveError, TruncatedTail, normalize_tail


class ThetaElement(TruncatedTail):
    __slots__ = ("field", "head", "tail", "order", "exact", "bound")

    def __init__(self, field: Field, head: Poly | None = None, tail: Sequence[Poly] = (),
                 order: int | None = None, exact: bool = False, bound: int | None = None):
        zero = Poly(field)
        head = head if head is not None else zero
        tl = [q if isinstance(q, Poly) else Poly(field, q) for q in tail]
        tl, order = normalize_tail(tl, order, exact, zero)
        if bound is not None:
            worst = max([head.degree] + [q.degree for q in tl])
            if worst > bound:
                raise ValueError(f"declared bound {bound} but a coefficient has degree {worst}")
        for name, val in (("field", field), ("head", head), ("tail", tl), ("order", order),
                          ("exact", exact), ("bound", bound)):
            object.__setattr__(self, name, val)

    def __setattr__(self, name, value):
        raise AttributeError("ThetaElement is immutable")

    def _zero_coeff(self):
        return Poly(self.field)

    @property
    def q_minus1(self) -> Poly:
        return self.head

    @property
    def q(self) -> tuple[Poly, ...]:
        return self.tail

    @classmethod
    def zero(cls, field: Field) -> ThetaElement:
        return cls(field, exact=True, bound=0)

    def with_bound(self, bound: int | None) -> ThetaElement:
        return ThetaElement(self.field, self.head, self.tail, self.order, self.exact, bound)

    def truncate(self, order: int) -> ThetaElement:
        if order > self.order and not self.exact:
            raise PrecisionError(f"cannot extend valid order {self.order} to {order}")
        return ThetaElement(self.field, self.head, [self.tail_at(i) for i in range(order + 1)],
                            order, False, self.bound)

    def degree(self) -> int:
        """Largest degree among the known coefficient polynomials."""
        return max([self.head.degree] + [q.degree for q in self.tail])

    @classmethod
    def from_algebra(cls, x: AlgebraElement) -> ThetaElement:
        """Embed an element of the left ideal Rc* (basis c^i (c*)^j, d*(c*)^j, j >= 1)."""
        F = x.field
        head: dict[int, object] = {}
        tail: dict[int, dict[int, object]] = {}
        for word, k in x.terms.items():
            if word.j < 1 or word.shape not in (Shape.CSTAR, Shape.CCSTAR, Shape.DSTARCSTAR):
                raise ValueError(f"{x} is not in Rc* (term {word})")
            if word.shape is Shape.DSTARCSTAR:
                head[word.j - 1] = k
            else:
                tail.setdefault(word.i, {})[word.j - 1] = k
        def poly(d):
            return Poly(F, [d.get(e, 0) for e in range(max(d, default=-1) + 1)])
        n = max(tail, default=-1)
        el = cls(F, poly(head), [poly(tail.get(i, {})) for i in range(n + 1)], exact=True)
        return el.with_bound(el.degree() if el.degree() >= 0 else 0)

    def to_algebra(self) -> AlgebraElement:
        """The element of Rc* represented by a finitely supported element."""
        if not self.exact:
            raise PrecisionError("only finitely supported elements lie in Rc*")
        terms = {}
        for e, k in enumerate(self.head.coeffs):
            terms[BasisWord.dstar_cstar(e + 1)] = k
        for i, q in enumerate(self.tail):
            for e, k in enumerate(q.coeffs):
                terms[BasisWord.cc(i, e + 1)] = k
        return AlgebraElement(self.field, terms)

    def _combine_bound(self, other):
        if self.bound is None or other.bound is None:
            return None
        return max(self.bound, other.bound)

    def __add__(self, other):
        if not isinstance(other, ThetaElement):
            return NotImplemented
        order, exact = self.combined_order(other)
        tail = [self.tail_at(i) + other.tail_at(i) for i in range(order + 1)]
        return ThetaElement(self.field, self.head + other.head, tail, order, exact, self._combine_bound(other))

    def __neg__(self):
        return ThetaElement(self.field, -self.head, [-q for q in self.tail], self.order, self.exact, self.bound)

    def __sub__(self, other):
        return self + (-other)

    def scale(self, k) -> ThetaElement:
        k = self.field(k)
        return ThetaElement(self.field, self.head * k, [q * k for q in self.tail], self.order, self.exact, self.bound)

    def __eq__(self, other):
        if not isinstance(other, ThetaElement):
            return NotImplemented
        return (self.field, self.head, self.tail, self.order, self.exact) == (
            other.field, other.head, other.tail, other.order, other.exact)

    def __hash__(self):
        return hash((self.field, self.head, self.tail, self.order, self.exact))

    def to_json(self) -> dict:
        out = {"q-1": str(self.head), "q": [str(q) for q in self.tail]}
        if not self.exact:
            out["order"] = self.order
        if self.bound is not None:
            out["bound"] = self.bound
        return out

    def __str__(self):
        def sub(q: Poly) -> str:
            return str(q).replace("x", "c*")

        items = []
        if self.head:
            items.append(f"d* c* ({sub(self.head)})")
        for i, q in enumerate(self.tail):
            if q:
                lead = "" if i == 0 else ("c " if i == 1 else f"c^{i} ")
                items.append(f"{lead}c* ({sub(q)})")
        body = " + ".join(items) if items else "0"
        return body if self.exact else f"{body} + O(c^{self.order + 1})"

    def __repr__(self):
        return f"ThetaElement({self.field}, {self})"


def _bump(bound):
    return None if bound is None else bound + 1


def p_map(g: str, t: ThetaElement) -> ThetaElement:
    """The generator action P_g on Theta."""
    F = t.field
    zero = Poly(F)
    x = Poly.x(F)
    if g == "v":
        return ThetaElement(F, zero, t.tail, t.order, t.exact, t.bound)
    if g == "w":
        return ThetaElement(F, t.head, (), exact=True, bound=t.bound)
    if g == "c":
        return ThetaElement(F, zero, (zero,) + t.tail, t.order + 1, t.exact, t.bound)
    if g == "c*":
        if t.order < 0 and not t.exact:
            raise PrecisionError("P_{c*} needs q_0 and q_1 beyond the valid order")
        if t.order == 0 and not t.exact:
            return ThetaElement(F, zero, (), -1, False, _bump(t.bound))
        new0 = x * t.tail_at(0) + t.tail_at(1)
        return ThetaElement(F, zero, (new0,) + t.tail[2:], t.order - 1, t.exact, _bump(t.bound))
    if g == "d":
        return ThetaElement(F, zero, (t.head, -(x * t.head)), exact=True, bound=_bump(t.bound))
    if g == "d*":
        return ThetaElement(F, t.tail_at(0), (), exact=True, bound=t.bound)
    raise ValueError(f"unknown generator {g!r}")


def theta_act_word(word: BasisWord, t: ThetaElement) -> ThetaElement:
    for letter in reversed(word.letters()):
        t = p_map(letter, t)
    return t


def theta_act(r, t: ThetaElement) -> ThetaElement:
    """Left action on Theta by a generator name or an :class:`AlgebraElement`."""
    if isinstance(r, str):
        return p_map(r, t)
    out = ThetaElement.zero(t.field)
    if t.bound is None:
        out = out.with_bound(None)
    for word, k in r.terms.items():
        out = out + theta_act_word(word, t).scale(k)
    return out


def theta_essential_witness(t: ThetaElement) -> tuple[AlgebraElement, ThetaElement]:
    """Multiplier r with r.t = d* c* q_ibar(c*) a nonzero element of Rc*.

    ibar is the least i >= -1 with q_i != 0; r = w if ibar = -1, otherwise
    r = d* (c*)^ibar.
    """
    idx = t.first_nonzero()
    if idx is None:
        if t.exact:
            raise ValueError("the zero element has no essentiality witness")
        raise InconclusiveError(f"element vanishes up to order {t.order}; inconclusive at this order")
    F = t.field
    if idx == -1:
        r = AlgebraElement.word(F, BasisWord(Shape.W))
        q = t.head
    else:
        r = AlgebraElement.word(F, BasisWord.dstar_cstar(idx))
        q = t.tail[idx]
    return r, ThetaElement(F, q, (), exact=True, bound=max(q.degree, 0))


def p_of_c(p: Poly) -> AlgebraElement:
    """p(c) = p_0 1_R + p_1 c + ... + p_n c^n in R."""
    F = p.field
    out = AlgebraElement.scalar(F, p[0])
    for k in range(1, p.degree + 1):
        out = out + AlgebraElement.word(F, BasisWord.cc(k, 0), p[k])
    return out


def baer_extend(p: Poly, image: ThetaElement, order: int) -> ThetaElement:
    """The extension value beta = phibar(1) for phi: Rp(c) -> Theta.

    With B = 1/p in K[[x]] and image = phi(p(c)) having coefficients q_i,
    beta has q_{-1} b_0 in the head and sum_{j<=i} b_j q_{i-j} at index i,
    so that p(c) beta = image.  Valid to ``order``.
    """
    ensure_one_at_zero(p, "Baer polynomial")
    F = image.field
    if p.degree == 0:
        return image if image.exact else image.truncate(order)
    if order > image.order and not image.exact:
        raise PrecisionError(f"image is valid to order {image.order}, extension to order {order} requested")
    b = series_inverse(p, order).coeffs
    qs = [image.tail_at(i) for i in range(order + 1)]
    tail = []
    for i in range(order + 1):
        acc = Poly(F)
        for j in range(i + 1):
            if b[j]:
                acc = acc + qs[i - j] * b[j]
        tail.append(acc)
    return ThetaElement(F, image.head * b[0], tail, order, False, image.bound)


def baer_extend_socle(head_image: Poly, images: Sequence[Poly]) -> ThetaElement:
    """Extension value psibar(1) for psi: J -> Theta.

    ``head_image`` gives psi(w) = d* c* q'_{-1}(c*) and ``images[i]`` gives
    psi(d* (c*)^i) = d* c* q'_i(c*); psibar(1) is
    d* c* q'_{-1}(c*) + sum_j c^j d d* c* q'_j(c*).
    """
    F = head_image.field
    x = Poly.x(F)
    tail = [Poly(F)] * (len(images) + 1)
    for j, q in enumerate(images):
        tail[j] = tail[j] + q
        tail[j + 1] = tail[j + 1] - x * q
    return ThetaElement(F, head_image, tail, exact=True)


# --- the bounded part and K((cbar)) -------------------------------------------


def kernel_element(head: Poly, hs: Sequence[Poly], order: int | None = None) -> ThetaElement:
    """d* c* g(c*) + sum_i c^i (v - c c*) c* h_i(c*), an element of the
    direct sum of the E(Rd*(c*)^j)."""
    F = head.field
    x = Poly.x(F)
    tail = [Poly(F)] * (len(hs) + 1)
    for i, h in enumerate(hs):
        tail[i] = tail[i] + h
        tail[i + 1] = tail[i + 1] - x * h
    exact = order is None
    el = ThetaElement(F, head, tail, order, exact)
    return el.with_bound(max(el.degree(), 0))


def representative(s: LaurentSeriesElement) -> ThetaElement:
    """(a'_{-m} (c*)^m + ... + a'_{-1} c* + a'_0 v + sum_i a'_i c^i) c* in Theta^b."""
    F = s.field
    q0 = Poly(F, [s.coeff(0)] + list(s.principal))
    tail = [q0] + [Poly.constant(F, a) for a in s.tail[1:]]
    return ThetaElement(F, Poly(F), tail, max(s.order, 0), s.exact, len(s.principal))


def reduce_bounded_to_laurent_series(t: ThetaElement, bound: int | None = None) -> LaurentSeriesElement:
    """Image of a bounded element in E(Rc*)^b / (+)_j E(Rd*(c*)^j) = K((cbar)).

    Writing q_i(x) = sum_k a_{k,i} x^k, the coefficient of cbar^e is the
    anti-diagonal sum of a_{k,i} over i - k = e.  q_{-1} is dropped.  A
    truncated input valid to N gives a result valid to N - bound.
    """
    if bound is None:
        bound = t.bound
    if bound is None:
        raise ValueError("element is not declared bounded; pass bound= or set ThetaElement.bound")
    if bound < 0:
        raise ValueError("bound must be >= 0")
    if t.bound is not None and bound < t.bound:
        raise ValueError(f"bound {bound} is below the declared bound {t.bound}")
    worst = max([q.degree for q in t.tail], default=-1)
    if worst > bound:
        raise ValueError(f"coefficient of degree {worst} exceeds bound {bound}")
    F = t.field
    if t.exact:
        out_order = max(len(t.tail) - 1, 0)
    else:
        out_order = t.order - bound
        if out_order < -1:
            raise PrecisionError(f"element valid to order {t.order} is too short for bound {bound}")
    coeffs: dict[int, object] = {}
    for e in range(-bound, out_order + 1):
        acc = F.zero
        for k in range(bound + 1):
            i = e + k
            if i < 0:
                continue
            if not t.exact and i > t.order:
                raise PrecisionError(f"a'_{e} needs q_{i}")
            acc = acc + t.tail_at(i)[k]
        coeffs[e] = acc
    return LaurentSeriesElement.from_coeffs(F, coeffs, out_order, t.exact)


def torsion_probe(p: Poly, t, modulo_kernel: bool = False) -> bool:
    """Whether p(c) kills t, on every known coefficient.

    ``t`` may be a :class:`ThetaElement` or a :class:`LaurentSeriesElement`.
    With ``modulo_kernel=True`` a bounded ThetaElement is tested in the
    quotient by the direct sum of the E(Rd*(c*)^j), i.e. after reduction to
    K((cbar)).
    """
    ensure_one_at_zero(p, "torsion polynomial")
    if isinstance(t, LaurentSeriesElement):
        prod = t.mul_laurent(LaurentPoly.from_poly(p))
        if prod.is_zero():
            # p(0) = 1 makes p invertible in K[[cbar]]: t itself must vanish
            assert back_substitute(p, prod).is_zero()
            return True
        return False
    prod = theta_act(p_of_c(p), t)
    if modulo_kernel:
        return reduce_bounded_to_laurent_series(prod).is_zero()
    return prod.known_zero()
