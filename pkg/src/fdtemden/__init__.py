"""Fractional differential transform solver for fractional Emden-Fowler problems."""

from .fdt_algebra import (
    CoeffSeq,
    Monomial,
    caputo_transform,
    cauchy_product,
    evaluate,
    monomial_transform,
    polynomial_of_u,
    shift_divide,
)
from .gamma import gamma, gamma_ratio
from .oracle import ResidualReport, caputo_power_derivative, reference_lane_emden, residual
from .order_arith import RationalOrder, index_of, normalize, parse_order, select_alpha
from .solver import ProblemSpec, SeriesSolution, choose_grid, denominator, ic_transform, solve

__version__ = "0.1.0"
