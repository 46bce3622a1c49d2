"""Jones/Alexander interpolating link invariants from Lawrence-representation traces."""

from .braidword import BraidWord, ParseError, parse_braid
from .invariants import compute_report, interpolation_decompose, omega_closed, omega_open
from .polyring import BivariatePoly, OneVarPoly, QuotientPoly, q_reduce, spec_alex, spec_jones

__all__ = [
    "BivariatePoly",
    "BraidWord",
    "OneVarPoly",
    "ParseError",
    "QuotientPoly",
    "compute_report",
    "interpolation_decompose",
    "omega_closed",
    "omega_open",
    "parse_braid",
    "q_reduce",
    "spec_alex",
    "spec_jones",
]
