"""
Exact Euclidean division of formal power series sigma_z(A) and the
Schur-function closed forms of its remainders.
"""
from .alphabets import EMPTY, VirtualAlphabet, parse_alphabet, sigma
from .arith import DensePoly, Series
from .closedform import eq8_solve, pade, remainder_one_by_sigma, remainder_sigma_by_one, remainder_sigma_by_sigma
from .contfrac import cf_verify
from .errors import (
    DivisionTerminated,
    InsufficientPrecision,
    NonGeneric,
    ParseError,
    SeriesEuclidError,
    SingularSystem,
    ZeroConstantTerm,
)
from .euclid import divide_iterate, divide_step
from .schur import Partition, schur
from .wronskian import WronskianQuery, bazin_check, wronskian_closed, wronskian_det

__version__ = "1.0.0"

__all__ = [
    "EMPTY",
    "DensePoly",
    "DivisionTerminated",
    "InsufficientPrecision",
    "NonGeneric",
    "ParseError",
    "Partition",
    "Series",
    "SeriesEuclidError",
    "SingularSystem",
    "VirtualAlphabet",
    "WronskianQuery",
    "ZeroConstantTerm",
    "bazin_check",
    "cf_verify",
    "divide_iterate",
    "divide_step",
    "eq8_solve",
    "pade",
    "parse_alphabet",
    "remainder_one_by_sigma",
    "remainder_sigma_by_one",
    "remainder_sigma_by_sigma",
    "schur",
    "sigma",
    "wronskian_closed",
    "wronskian_det",
]
