"""Modified A-hypergeometric systems: toric data, indicial polynomials along t=0,
and Gamma-series solutions, in exact rational arithmetic."""

__version__ = "0.1.0"

from .errors import (
    GKZError,
    InputError,
    NonGenericParameter,
    NonGenericWeight,
    ResonantExponent,
    RouteDisagreement,
    UnitIndicialIdeal,
)
from .groebner import Ideal, buchberger, eliminate, initial_ideal, normal_form, saturate
from .indicial import (
    IndicialPolynomial,
    distraction,
    fake_exponents,
    indicial,
    indicial_by_elimination,
    indicial_by_pairs,
    t_initial_monomial_ideal,
)
from .polyalgebra import Polynomial, TermOrder, parse_polynomial
from .series import build_system, gamma_series, residual_check
from .standard_pairs import MonomialIdeal, StandardPair, rank_lower_bound, standard_pairs, top_pairs
from .toric import ProblemSpec, build_atilde, in_tau, lattice_kernel, toric_ideal

__all__ = [
    "GKZError",
    "Ideal",
    "IndicialPolynomial",
    "InputError",
    "MonomialIdeal",
    "NonGenericParameter",
    "NonGenericWeight",
    "Polynomial",
    "ProblemSpec",
    "ResonantExponent",
    "RouteDisagreement",
    "StandardPair",
    "TermOrder",
    "UnitIndicialIdeal",
    "buchberger",
    "build_atilde",
    "build_system",
    "distraction",
    "eliminate",
    "fake_exponents",
    "gamma_series",
    "in_tau",
    "indicial",
    "indicial_by_elimination",
    "indicial_by_pairs",
    "initial_ideal",
    "lattice_kernel",
    "normal_form",
    "parse_polynomial",
    "rank_lower_bound",
    "residual_check",
    "saturate",
    "standard_pairs",
    "t_initial_monomial_ideal",
    "top_pairs",
    "toric_ideal",
]
