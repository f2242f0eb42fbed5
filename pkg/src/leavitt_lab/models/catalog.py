"""The indecomposable injective left R-modules, up to isomorphism."""

from __future__ import annotations

import itertools
from dataclasses import asdict, dataclass

from ..field import Field
from ..laurent import Poly, factor_check


@dataclass(frozen=True)
class ModuleFamily:
    family: str
    element_type: str
    jacobson_name: str
    parameter: str = ""
    description: str = ""

    def to_json(self) -> dict:
        return asdict(self)


def catalog() -> list[ModuleFamily]:
    return [
        ModuleFamily(
            family="E(Rw)",
            element_type="EWElement",
            jacobson_name="K[[Y]](1-YX)",
            description="formal series k_{-1} w + sum_i k_i c^i d; envelope of the simple module Rw",
        ),
        ModuleFamily(
            family="K(cbar)",
            element_type="RationalFunc",
            jacobson_name="K(Xbar)",
            description="fraction field of R/J = K[cbar, cbar^-1]",
        ),
        ModuleFamily(
            family="U^f",
            element_type="PruferElement",
            jacobson_name="lim K[Xbar, Xbar^-1]/f^n(Xbar)",
            parameter="f irreducible in K[x] with f(0) = 1",
            description="Prufer module, envelope of the simple module R/Rf(c)",
        ),
    ]


def prufer_parameters(field: Field, max_degree: int) -> list[Poly]:
    """All certified irreducible f with f(0) = 1 and deg f <= max_degree over GF(p)."""
    if not field.is_finite:
        raise ValueError("parameters can only be enumerated over a finite field")
    out = []
    for deg in range(1, max_degree + 1):
        for mid in itertools.product(range(field.p), repeat=deg - 1):
            for lead in range(1, field.p):
                f = Poly(field, (1,) + mid + (lead,))
                if factor_check(f).irreducible:
                    out.append(f)
    return out
