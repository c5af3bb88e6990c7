"""Independent checks on series solutions.

The residual substitutes the truncated series back into the equation,
differentiating term by term with the Caputo power rule

    D^λ t^γ = Γ(γ+1)/Γ(γ-λ+1) t^(γ-λ),

and evaluating f(t) g(u(t)) pointwise rather than through transforms.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional, Sequence

from .fdt_algebra import CoeffSeq, evaluate
from .gamma import gamma_ratio
from .order_arith import OrderLike, RationalOrder, index_of
from .solver import SeriesSolution

__all__ = [
    "ResidualReport",
    "caputo_power_derivative",
    "residual",
    "geometric_points",
    "reference_lane_emden",
]


@dataclass(frozen=True)
class ResidualReport:
    sample_points: tuple
    residuals: tuple
    truncation_index: int
    max_abs_residual: float


def caputo_power_derivative(s: CoeffSeq, lam: OrderLike) -> CoeffSeq:
    """Caputo derivative of order ``lam`` applied to each term of ``s``.

    Integer powers below ``ceil(lam)`` are annihilated; a nonzero term with a
    fractional power below ``lam`` has no Caputo image in this class.
    """
    lam = RationalOrder.of(lam)
    b = index_of(lam, s.alpha)
    if b > s.K:
        raise ValueError(f"derivative order {lam} exceeds series truncation t^{s.exponent(s.K)}")
    lam_f = float(lam)
    n = -(-lam.numerator // lam.denominator)
    out = [0.0] * (s.K - b + 1)
    for k, c in enumerate(s.coeffs):
        power = s.exponent(k)
        if power.is_integer() and power.numerator < n:
            continue
        if power.value < lam.value:
            if c != 0.0:
                raise ValueError(
                    f"series not in the Caputo domain: term t^{power} with order {lam}"
                )
            continue
        gam = float(power)
        out[k - b] = c * gamma_ratio(gam + 1.0, gam - lam_f + 1.0)
    return CoeffSeq(s.alpha, out)


def geometric_points(t_max: float, n: int = 8) -> list:
    """``t_max * 2**-j`` for j = 0..n-1, ascending."""
    if not t_max > 0:
        raise ValueError("t_max must be positive")
    return sorted(t_max * 2.0 ** -j for j in range(n))


def residual(sol: SeriesSolution, points: Optional[Sequence[float]] = None) -> ResidualReport:
    """Residual of the equation for the truncated series at ``points`` (t > 0)."""
    if points is None:
        points = geometric_points(1.0)
    points = [float(t) for t in points]
    if any(not t > 0 for t in points):
        raise ValueError("residual sample points must be > 0 (2/t^beta is singular at 0)")
    p = sol.problem
    beta = p.beta
    d2 = caputo_power_derivative(sol.coeffs, beta * 2)
    d1 = caputo_power_derivative(sol.coeffs, beta)
    bf = float(beta)
    res = []
    for t in points:
        u = evaluate(sol.coeffs, t)
        terms = (evaluate(d2, t), 2.0 * t ** -bf * evaluate(d1, t), p.f(t) * p.g(u))
        res.append(math.fsum(terms))
    return ResidualReport(
        sample_points=tuple(points),
        residuals=tuple(res),
        truncation_index=sol.truncation_index,
        max_abs_residual=max((abs(r) for r in res), default=0.0),
    )


def reference_lane_emden(t: float) -> float:
    """sin(t)/t, the solution of u'' + (2/t) u' + u = 0 with u(0) = 1."""
    if t == 0:
        return 1.0
    return math.sin(t) / t
