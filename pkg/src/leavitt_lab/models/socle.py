"""The socle J = Rw (+) (+)_{i>=0} R d*(c*)^i and its projections.

Each summand R d*(c*)^i is identified with Rw by right multiplication with
d*(c*)^i, so every component is stored as an :class:`EWElement` in Rw.
The projection onto R d*(c*)^i is right multiplication by the idempotent
e_i = c^i d d* (c*)^i; onto Rw it is right multiplication by w.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field

from ..core import W, AlgebraElement, BasisWord
from ..laurent import is_in_socle
from .ew import EWElement


@dataclass(frozen=True)
class SocleVector:
    w_component: EWElement
    summand_components: dict[int, EWElement] = dc_field(default_factory=dict)

    def reassemble(self) -> AlgebraElement:
        F = self.w_component.field
        out = self.w_component.to_algebra()
        for i, comp in self.summand_components.items():
            out = out + comp.to_algebra() * AlgebraElement.word(F, BasisWord.dstar_cstar(i))
        return out

    def to_json(self) -> dict:
        return {
            "w": self.w_component.to_json(),
            "summands": {str(i): comp.to_json() for i, comp in self.summand_components.items()},
        }


def socle_idempotent(field, i: int) -> AlgebraElement:
    """e_i = c^i d d* (c*)^i = c^i (c*)^i - c^(i+1) (c*)^(i+1)."""
    return AlgebraElement.word(field, BasisWord.cd(i)) * AlgebraElement.word(field, BasisWord.dstar_cstar(i))


def project_w(x: AlgebraElement) -> AlgebraElement:
    return x * AlgebraElement.word(x.field, W)


def project_summand(x: AlgebraElement, i: int) -> AlgebraElement:
    return x * socle_idempotent(x.field, i)


def _components(x: AlgebraElement) -> SocleVector:
    F = x.field
    w_comp = EWElement.from_algebra(project_w(x))
    comps = {}
    for i in range(x.max_exponent() + 1):
        part = x * AlgebraElement.word(F, BasisWord.cd(i))
        if part:
            comps[i] = EWElement.from_algebra(part)
    return SocleVector(w_comp, comps)


def socle_decompose(x: AlgebraElement) -> SocleVector:
    """Components of x in J; raises ValueError when x is not in J."""
    if not is_in_socle(x):
        raise ValueError(f"{x} is not in the socle J")
    vec = _components(x)
    if vec.reassemble() != x:
        raise AssertionError(f"socle components of {x} do not sum back to it")
    return vec


def decomposes(x: AlgebraElement) -> bool:
    """Whether the projections onto the summands of J reassemble x.

    Computed without consulting the quotient map, so it is an independent
    membership test for J.
    """
    return _components(x).reassemble() == x
