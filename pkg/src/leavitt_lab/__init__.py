"""Exact computations in the Jacobson algebra K<X,Y | XY=1> = L_K(T) and its
indecomposable injective modules."""

from .core import AlgebraElement, BasisWord, FreeWord, Shape, mul, rewrite_oracle, word_mul
from .field import Field, FieldMismatchError, FieldScalar
from .jacobson import JacobsonElement, ew_word_to_jacobson, parse_expr, to_jacobson, to_leavitt
from .laurent import (
    LaurentPoly,
    LaurentSeriesElement,
    Poly,
    PrecisionError,
    RationalFunc,
    SeriesPrefix,
    factor_check,
    is_in_socle,
    quotient_map,
    series_inverse,
)
from .parser import ParseError

__version__ = "0.1.0"
