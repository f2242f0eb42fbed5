"""Normal-form arithmetic in the Leavitt path algebra R of the Toeplitz graph.

The graph has vertices v, w, a loop c at v and an edge d from v to w.
R is generated by v, w, c, c*, d, d* subject to

    c*c = v,  d*d = w,  c*d = d*c = 0,  cc* + dd* = v

plus the usual vertex/edge compatibility relations.  Every element has a
unique expansion in the basis

    v, w, c^i, (c*)^j, c^i (c*)^j, d, c^i d, d*, d* (c*)^j      (i, j >= 1)

which :class:`BasisWord` encodes.  :func:`word_mul` multiplies two basis
words through the path calculus (``p q* . r s*``); :func:`rewrite_oracle`
reduces an arbitrary letter string by the relations alone and serves as an
independent check of that table.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import IntEnum
from functools import lru_cache
from typing import Iterable, Mapping, Sequence

from .field import Field, FieldMismatchError, FieldScalar


class Shape(IntEnum):
    # declaration order is the serialization order
    V = 0
    W = 1
    C = 2
    CSTAR = 3
    CCSTAR = 4
    D = 5
    CD = 6
    DSTAR = 7
    DSTARCSTAR = 8


@dataclass(frozen=True, order=True)
class BasisWord:
    """One of the nine canonical monomials.

    ``i`` counts leading c's and ``j`` trailing c*'s; both are 0 where the
    shape has no such factor.  Use the constructors below, which fold the
    degenerate exponents into V, D and Dstar.
    """

    shape: Shape
    i: int = 0
    j: int = 0

    def __post_init__(self):
        s, i, j = self.shape, self.i, self.j
        ok = {
            Shape.V: i == 0 and j == 0,
            Shape.W: i == 0 and j == 0,
            Shape.C: i >= 1 and j == 0,
            Shape.CSTAR: i == 0 and j >= 1,
            Shape.CCSTAR: i >= 1 and j >= 1,
            Shape.D: i == 0 and j == 0,
            Shape.CD: i >= 1 and j == 0,
            Shape.DSTAR: i == 0 and j == 0,
            Shape.DSTARCSTAR: i == 0 and j >= 1,
        }[s]
        if not ok:
            raise ValueError(f"invalid exponents for {s.name}: i={i}, j={j}")

    @staticmethod
    def cc(i: int, j: int) -> BasisWord:
        """c^i (c*)^j with c^0 (c*)^0 = v."""
        if i < 0 or j < 0:
            raise ValueError("negative exponent")
        if i == 0 and j == 0:
            return V
        if j == 0:
            return BasisWord(Shape.C, i, 0)
        if i == 0:
            return BasisWord(Shape.CSTAR, 0, j)
        return BasisWord(Shape.CCSTAR, i, j)

    @staticmethod
    def cd(i: int) -> BasisWord:
        """c^i d."""
        if i < 0:
            raise ValueError("negative exponent")
        return D if i == 0 else BasisWord(Shape.CD, i, 0)

    @staticmethod
    def dstar_cstar(j: int) -> BasisWord:
        """d* (c*)^j."""
        if j < 0:
            raise ValueError("negative exponent")
        return DSTAR if j == 0 else BasisWord(Shape.DSTARCSTAR, 0, j)

    # path decomposition p q*: a path is (number of c's, tail) with tail in
    # {"v", "d", "w"}; "w" is the trivial path at w.
    def path_pair(self) -> tuple[tuple[int, str], tuple[int, str]]:
        s = self.shape
        if s is Shape.W:
            return (0, "w"), (0, "w")
        if s in (Shape.D, Shape.CD):
            return (self.i, "d"), (0, "w")
        if s in (Shape.DSTAR, Shape.DSTARCSTAR):
            return (0, "w"), (self.j, "d")
        return (self.i, "v"), (self.j, "v")

    def letters(self) -> tuple[str, ...]:
        """The word spelled out in generators, e.g. ``('c', 'c', 'c*')``."""
        s = self.shape
        if s is Shape.V:
            return ("v",)
        if s is Shape.W:
            return ("w",)
        if s in (Shape.D, Shape.CD):
            return ("c",) * self.i + ("d",)
        if s in (Shape.DSTAR, Shape.DSTARCSTAR):
            return ("d*",) + ("c*",) * self.j
        return ("c",) * self.i + ("c*",) * self.j

    @property
    def c_degree(self) -> int:
        return self.i

    @property
    def cstar_degree(self) -> int:
        return self.j

    def __str__(self):
        s = self.shape
        parts = []
        if s is Shape.V:
            return "v"
        if s is Shape.W:
            return "w"
        if s in (Shape.DSTAR, Shape.DSTARCSTAR):
            parts.append("d*")
        if self.i:
            parts.append(_power("c", self.i))
        if s in (Shape.D, Shape.CD):
            parts.append("d")
        if self.j:
            parts.append(_power("c*", self.j))
        return " ".join(parts)


def _power(letter: str, n: int) -> str:
    return letter if n == 1 else f"{letter}^{n}"


V = BasisWord(Shape.V)
W = BasisWord(Shape.W)
D = BasisWord(Shape.D)
DSTAR = BasisWord(Shape.DSTAR)


def _from_paths(p: tuple[int, str], q: tuple[int, str]) -> BasisWord:
    """Basis word p q* for compatible paths with not both ending in d."""
    (a, tp), (b, tq) = p, q
    if tp == "w" and tq == "w":
        return W
    if tp == "d":
        return BasisWord.cd(a)
    if tq == "d":
        return BasisWord.dstar_cstar(b)
    return BasisWord.cc(a, b)


def _source(path):
    return "w" if path[1] == "w" else "v"


def _concat(p, r):
    """Path concatenation p.r, assuming range(p) == source(r)."""
    if r[1] == "w":
        return p
    return (p[0] + r[0], r[1])


def _ghost_times_path(q, p):
    """Reduce q* p for paths q, p.

    Returns ("path", r) if p = q r, ("ghost", s) if q = p s, or None for 0.
    """
    if _source(q) != _source(p):
        return None
    if q[1] == "w":
        return ("path", p)
    if p[1] == "w":
        return ("ghost", q)
    a, tq = q
    b, tp = p
    if b >= a:
        # q = c^a [d]; p = c^b [d]
        if tq == "d":
            if b > a:
                return None
            # b == a: d* against d, or d* left over
            return ("path", (0, "w")) if tp == "d" else ("ghost", (0, "d"))
        return ("path", (b - a, tp))
    # b < a: leftover ghost (c*)^(a-b) or d*(c*)^(a-b)
    if tp == "d":
        return None
    return ("ghost", (a - b, tq))


@lru_cache(maxsize=None)
def _word_mul_table(a: BasisWord, b: BasisWord) -> tuple[tuple[BasisWord, int], ...]:
    p1, q1 = a.path_pair()
    p2, q2 = b.path_pair()
    red = _ghost_times_path(q1, p2)
    if red is None:
        return ()
    kind, r = red
    if kind == "path":
        p, q = _concat(p1, r), q2
    else:
        p, q = p1, _concat(q2, r)
    if p[1] == "d" and q[1] == "d":
        # c^i d d* (c*)^j = c^i (c*)^j - c^(i+1) (c*)^(j+1)
        i, j = p[0], q[0]
        return ((BasisWord.cc(i, j), 1), (BasisWord.cc(i + 1, j + 1), -1))
    return ((_from_paths(p, q), 1),)


class AlgebraElement:
    """A finite K-linear combination of basis words (immutable).

    ``terms`` maps :class:`BasisWord` to nonzero :class:`FieldScalar`.
    """

    __slots__ = ("field", "terms")

    def __init__(self, field: Field, terms: Mapping[BasisWord, FieldScalar] | None = None):
        clean = {}
        for word, k in (terms or {}).items():
            k = field(k)
            if k:
                clean[word] = k
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "terms", dict(sorted(clean.items())))

    def __setattr__(self, name, value):
        raise AttributeError("AlgebraElement is immutable")

    @classmethod
    def _raw(cls, field, terms):
        obj = cls.__new__(cls)
        object.__setattr__(obj, "field", field)
        object.__setattr__(obj, "terms", dict(sorted((w, k) for w, k in terms.items() if k)))
        return obj

    @classmethod
    def zero(cls, field: Field) -> AlgebraElement:
        return cls(field)

    @classmethod
    def one(cls, field: Field) -> AlgebraElement:
        return cls(field, {V: field.one, W: field.one})

    @classmethod
    def word(cls, field: Field, word: BasisWord, coeff=1) -> AlgebraElement:
        return cls(field, {word: field(coeff)})

    @classmethod
    def scalar(cls, field: Field, k) -> AlgebraElement:
        k = field(k)
        return cls(field, {V: k, W: k})

    def _check(self, other: AlgebraElement):
        if self.field != other.field:
            raise FieldMismatchError(f"cannot combine {self.field} and {other.field}")

    def __add__(self, other):
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        self._check(other)
        out = dict(self.terms)
        for w, k in other.terms.items():
            out[w] = out[w] + k if w in out else k
        return AlgebraElement._raw(self.field, out)

    def __neg__(self):
        return AlgebraElement._raw(self.field, {w: -k for w, k in self.terms.items()})

    def __sub__(self, other):
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        return self + (-other)

    def scale(self, k) -> AlgebraElement:
        k = self.field(k)
        return AlgebraElement._raw(self.field, {w: k * c for w, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, AlgebraElement):
            return mul(self, other)
        if isinstance(other, (FieldScalar, int)):
            return self.scale(other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (FieldScalar, int)):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative powers are not defined in R")
        result = AlgebraElement.one(self.field)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, AlgebraElement):
            return self.field == other.field and self.terms == other.terms
        if other == 0:
            return not self.terms
        return NotImplemented

    def __hash__(self):
        return hash((self.field, tuple(self.terms.items())))

    def __bool__(self):
        return bool(self.terms)

    def __iter__(self):
        return iter(self.terms.items())

    def __len__(self):
        return len(self.terms)

    def coeff(self, word: BasisWord) -> FieldScalar:
        return self.terms.get(word, self.field.zero)

    def max_exponent(self) -> int:
        return max((max(w.i, w.j) for w in self.terms), default=0)

    def to_json(self) -> dict:
        return {"terms": [{"word": _json_word(w), "coeff": str(k)} for w, k in self.terms.items()]}

    def __str__(self):
        return format_terms([(str(w), k) for w, k in self.terms.items()])

    def __repr__(self):
        return f"AlgebraElement({self.field}, {self})"


def _json_word(w: BasisWord) -> str:
    s = w.shape
    if s is Shape.V:
        return "v"
    if s is Shape.W:
        return "w"
    if s in (Shape.D, Shape.CD):
        return f"c^{w.i} d" if w.i else "d"
    if s in (Shape.DSTAR, Shape.DSTARCSTAR):
        return f"d* c*^{w.j}" if w.j else "d*"
    return " ".join(p for p in (f"c^{w.i}" if w.i else "", f"c*^{w.j}" if w.j else "") if p)


def format_terms(items: Sequence[tuple[str, FieldScalar]]) -> str:
    """Render ``[(monomial, coeff), ...]`` as ``3*c^2 d - 1/2*d*``.

    The empty monomial ``""`` stands for a bare scalar.
    """
    if not items:
        return "0"
    out = []
    for n, (mono, k) in enumerate(items):
        field = k.field
        neg = field.p is None and k.value < 0
        mag = -k if neg else k
        if not mono:
            body = str(mag)
        elif mag.is_one():
            body = mono
        else:
            body = f"{mag}*{mono}"
        if n == 0:
            out.append(f"-{body}" if neg else body)
        else:
            out.append(f" - {body}" if neg else f" + {body}")
    return "".join(out)


def word_mul(a: BasisWord, b: BasisWord, field: Field | None = None) -> AlgebraElement:
    """Normal form of the product of two basis words (at most two terms)."""
    field = field or Field.rational()
    return AlgebraElement._raw(field, {w: field(k) for w, k in _word_mul_table(a, b)})


def mul(x: AlgebraElement, y: AlgebraElement) -> AlgebraElement:
    """Bilinear extension of :func:`word_mul`."""
    x._check(y)
    field = x.field
    acc: dict[BasisWord, FieldScalar] = {}
    for a, ka in x.terms.items():
        for b, kb in y.terms.items():
            prod = _word_mul_table(a, b)
            if not prod:
                continue
            kab = ka * kb
            for w, sign in prod:
                term = kab if sign == 1 else -kab
                acc[w] = acc[w] + term if w in acc else term
    return AlgebraElement._raw(field, acc)


# --- string rewriting oracle -------------------------------------------------

LETTERS = ("v", "w", "c", "c*", "d", "d*")
_SOURCE = {"v": "v", "w": "w", "c": "v", "c*": "v", "d": "v", "d*": "w"}
_RANGE = {"v": "v", "w": "w", "c": "v", "c*": "v", "d": "w", "d*": "v"}
_VERTICES = ("v", "w")

# Pair rules; the value is a list of (coefficient, replacement letters).
# Vertex idempotence/orthogonality and absorption are the listed relations
# vw = wv = 0, v^2 = v, w^2 = w, vc = cv = c, vc* = c*v = c*, vd = d = dw,
# wd* = d* = d*v.  A letter pair whose range/source vertices differ is
# rewritten to 0; this follows from those relations (x = x.r(x),
# y = s(y).y, r(x)s(y) = 0) and is needed to reach the basis.
_EXPAND = ("d", "d*")


def _pair_rule(x: str, y: str):
    if x in _VERTICES and y in _VERTICES:
        return [(1, (x,))] if x == y else []
    if x in _VERTICES:
        return [(1, (y,))] if _SOURCE[y] == x else []
    if y in _VERTICES:
        return [(1, (x,))] if _RANGE[x] == y else []
    if _RANGE[x] != _SOURCE[y]:
        return []
    if (x, y) == ("c*", "c"):
        return [(1, ("v",))]
    if (x, y) == ("d*", "d"):
        return [(1, ("w",))]
    if (x, y) in (("c*", "d"), ("d*", "c")):
        return []
    if (x, y) == _EXPAND:
        return [(1, ("v",)), (-1, ("c", "c*"))]
    return None


_RULES = {(x, y): _pair_rule(x, y) for x in LETTERS for y in LETTERS}


class RewriteBudgetExceeded(RuntimeError):
    """The rewriting oracle did not reach a fixpoint within its step budget."""


@dataclass(frozen=True)
class FreeWord:
    """An unreduced word in the free algebra on v, w, c, c*, d, d*."""

    letters: tuple[str, ...]

    def __post_init__(self):
        bad = [x for x in self.letters if x not in LETTERS]
        if bad:
            raise ValueError(f"unknown letters {bad}")

    @classmethod
    def parse(cls, text: str) -> FreeWord:
        """Whitespace-separated letters with optional ``^n`` powers."""
        letters: list[str] = []
        for tok in text.split():
            base, _, exp = tok.partition("^")
            letters.extend([base] * (int(exp) if exp else 1))
        return cls(tuple(letters))

    def __len__(self):
        return len(self.letters)

    def __str__(self):
        return " ".join(self.letters)


def _find_redex(word: tuple[str, ...]):
    """Position of the leftmost non-expanding redex, else of an expanding one."""
    expand_at = None
    for k in range(len(word) - 1):
        pair = (word[k], word[k + 1])
        rule = _RULES[pair]
        if rule is None:
            continue
        if pair == _EXPAND:
            if expand_at is None:
                expand_at = k
            continue
        return k
    return expand_at


def _irreducible_to_basis(word: tuple[str, ...]) -> BasisWord:
    if word in (("v",), ("w",)):
        return V if word == ("v",) else W
    n = len(word)
    k = 0
    lead_dstar = word and word[0] == "d*"
    if lead_dstar:
        k = 1
    i = 0
    while k < n and word[k] == "c":
        i += 1
        k += 1
    if k < n and word[k] == "d":
        if k != n - 1 or lead_dstar:
            raise AssertionError(f"irreducible word outside basis: {word}")
        return BasisWord.cd(i)
    j = 0
    while k < n and word[k] == "c*":
        j += 1
        k += 1
    if k != n or (lead_dstar and i):
        raise AssertionError(f"irreducible word outside basis: {word}")
    if lead_dstar:
        return BasisWord.dstar_cstar(j)
    return BasisWord.cc(i, j)


def rewrite_oracle(
    word: FreeWord | Iterable[str],
    field: Field | None = None,
    budget: int | None = None,
) -> AlgebraElement:
    """Reduce a letter string to normal form by exhaustive rewriting.

    Independent of :func:`word_mul`.  Shrinking rules are applied before
    the expansion dd* -> v - cc*.  The default step budget is
    ``10 * len(word)**2``.
    """
    field = field or Field.rational()
    if not isinstance(word, FreeWord):
        word = FreeWord(tuple(word))
    letters = word.letters
    if not letters:
        return AlgebraElement.one(field)
    if budget is None:
        budget = 10 * len(letters) ** 2
    pending: dict[tuple[str, ...], FieldScalar] = {letters: field.one}
    done: dict[BasisWord, FieldScalar] = {}
    steps = 0
    while pending:
        w, k = pending.popitem()
        if not k:
            continue
        pos = _find_redex(w)
        if pos is None:
            b = _irreducible_to_basis(w)
            done[b] = done[b] + k if b in done else k
            continue
        steps += 1
        if steps > budget:
            raise RewriteBudgetExceeded(f"no fixpoint for {word} after {budget} steps")
        for sign, repl in _RULES[(w[pos], w[pos + 1])]:
            nw = w[:pos] + repl + w[pos + 2:]
            term = k if sign == 1 else -k
            pending[nw] = pending[nw] + term if nw in pending else term
    return AlgebraElement._raw(field, done)


def word_element(field: Field, letters: Iterable[str]) -> AlgebraElement:
    """Product of generators computed with :func:`mul` (not the oracle)."""
    out = AlgebraElement.one(field)
    for x in letters:
        out = out * generator(field, x)
    return out


def generator(field: Field, name: str) -> AlgebraElement:
    table = {
        "v": V,
        "w": W,
        "c": BasisWord.cc(1, 0),
        "c*": BasisWord.cc(0, 1),
        "d": D,
        "d*": DSTAR,
    }
    if name not in table:
        raise ValueError(f"unknown generator {name!r}")
    return AlgebraElement.word(field, table[name])


def all_basis_words(max_exp: int) -> list[BasisWord]:
    """Every basis word with exponents <= max_exp, in canonical order."""
    words = [V, W, D, DSTAR]
    for i in range(1, max_exp + 1):
        words += [BasisWord.cc(i, 0), BasisWord.cc(0, i), BasisWord.cd(i), BasisWord.dstar_cstar(i)]
        for j in range(1, max_exp + 1):
            words.append(BasisWord.cc(i, j))
    return sorted(words)
