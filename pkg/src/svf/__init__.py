"""Exact rational six-vertex partition functions: lattice contraction and closed forms."""

from .closed_forms import (
    beta,
    gdw_determinant,
    gdw_specialized,
    gdw_subset_sum,
    trapezoid_factorized,
    triangular_factorized,
    z11_explicit,
)
from .contraction import (
    ModelParams,
    StateVector,
    apply_gate,
    degree_profile,
    gdw_contract,
    gdw_contract_fixed_east,
    trapezoid_direct,
    trapezoid_value,
    triangular_contract,
)
from .efp import EfpParams, efp_components, efp_determinant, gamma
from .errors import DegeneracyError, ParameterError, ParseError, PoleError, SVFError, UnsupportedRangeError
from .scalar import Rational, format_rational, parse_rational
from .vertex import BoundaryVector, BoundaryVectors, RMatrix, check_unitarity, check_yang_baxter, pairing, r_matrix

__version__ = "0.1.0"

__all__ = [
    "BoundaryVector",
    "BoundaryVectors",
    "DegeneracyError",
    "EfpParams",
    "ModelParams",
    "ParameterError",
    "ParseError",
    "PoleError",
    "RMatrix",
    "Rational",
    "SVFError",
    "StateVector",
    "UnsupportedRangeError",
    "apply_gate",
    "beta",
    "check_unitarity",
    "check_yang_baxter",
    "degree_profile",
    "efp_components",
    "efp_determinant",
    "format_rational",
    "gamma",
    "gdw_contract",
    "gdw_contract_fixed_east",
    "gdw_determinant",
    "gdw_specialized",
    "gdw_subset_sum",
    "pairing",
    "parse_rational",
    "r_matrix",
    "trapezoid_direct",
    "trapezoid_factorized",
    "trapezoid_value",
    "triangular_contract",
    "triangular_factorized",
    "z11_explicit",
]
