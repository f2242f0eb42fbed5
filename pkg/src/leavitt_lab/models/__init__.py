"""Truncation-scale models of the injective R-modules."""

from .catalog import ModuleFamily, catalog, prufer_parameters
from .ew import EWElement, ew_act, ew_essential_witness
from .prufer import (
    PruferElement,
    ReducibleParameterError,
    certify,
    prufer_act,
    prufer_divisibility_witness,
    prufer_element,
    rational_act,
)
from .socle import SocleVector, decomposes, project_summand, project_w, socle_decompose, socle_idempotent
from .theta import (
    ThetaElement,
    baer_extend,
    baer_extend_socle,
    kernel_element,
    p_map,
    p_of_c,
    reduce_bounded_to_laurent_series,
    representative,
    theta_act,
    theta_essential_witness,
    torsion_probe,
)
from .truncated import InconclusiveError
