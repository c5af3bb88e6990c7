"""Series solution of the fractional Emden-Fowler initial value problem

    D^{2β} u + (2 / t^β) D^β u + f(t) g(u) = 0,    u(0) = A,  u'(0) = 0,

with Caputo derivatives of rational order 1/2 < β <= 1, ``f`` a finite sum
of monomials ``c t^r`` and ``g`` a polynomial in ``u``.

Transforming the equation term by term yields an explicit recurrence for
the coefficient ``U(k + 2β/α)`` in terms of ``U(0..k)``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

from .fdt_algebra import CoeffSeq, Monomial, evaluate, monomial_transform
from .gamma import gamma_ratio
from .order_arith import OrderLike, RationalOrder, index_of, select_alpha

__all__ = [
    "ProblemSpec",
    "SeriesSolution",
    "choose_grid",
    "ic_transform",
    "denominator",
    "solve",
]


@dataclass(frozen=True)
class ProblemSpec:
    """One Emden-Fowler instance.

    ``f_monomials`` encodes f(t) = sum c_i t^{r_i}; ``g_poly`` holds the
    coefficients of g(u), lowest degree first.
    """

    beta: RationalOrder
    A: float
    f_monomials: tuple = field(default=(Monomial(1.0, 0),))
    g_poly: tuple = (0.0, 1.0)

    def __post_init__(self):
        beta = RationalOrder.of(self.beta)
        if not (Fraction(1, 2) < beta.value <= 1):
            raise ValueError(f"beta out of range: {beta} not in (1/2, 1]")
        f = tuple(
            m if isinstance(m, Monomial) else Monomial(*m) for m in self.f_monomials
        )
        if not f:
            raise ValueError("f must have at least one monomial")
        g = tuple(float(c) for c in self.g_poly)
        if not g:
            raise ValueError("g must have at least one coefficient")
        if not math.isfinite(self.A):
            raise ValueError("initial value A must be finite")
        object.__setattr__(self, "beta", beta)
        object.__setattr__(self, "A", float(self.A))
        object.__setattr__(self, "f_monomials", f)
        object.__setattr__(self, "g_poly", g)

    def f(self, t: float) -> float:
        return math.fsum(m(t) for m in self.f_monomials)

    def g(self, u: float) -> float:
        acc = 0.0
        for c in reversed(self.g_poly):
            acc = acc * u + c
        return acc


@dataclass(frozen=True)
class SeriesSolution:
    problem: ProblemSpec
    alpha: RationalOrder
    coeffs: CoeffSeq
    truncation_index: int

    def __call__(self, t: float) -> float:
        return evaluate(self.coeffs, t)

    def evaluate(self, t: float) -> float:
        return evaluate(self.coeffs, t)

    @property
    def shift(self) -> int:
        """Index distance 2β/α between a coefficient and the one it determines."""
        return 2 * index_of(self.problem.beta, self.alpha)


def choose_grid(p: ProblemSpec) -> RationalOrder:
    """Grid step covering β, 2β, 1 and every exponent of f."""
    orders: list = [p.beta, p.beta * 2, RationalOrder(1)]
    orders += [m.exponent for m in p.f_monomials if m.exponent.numerator > 0]
    return select_alpha(orders)


def ic_transform(p: ProblemSpec, alpha: OrderLike) -> list:
    """Seed coefficients ``U(0..2β/α - 1)`` from u(0) = A, u'(0) = 0.

    Integer powers take the scaled classical derivative at 0, all
    fractional powers are 0.
    """
    n = 2 * index_of(p.beta, alpha)
    seeds = [0.0] * n
    seeds[0] = p.A
    # u'(0) = 0 lands on index 1/alpha, which is < n because beta > 1/2
    seeds[index_of(1, alpha)] = 0.0
    return seeds


def denominator(k: int, beta: OrderLike, alpha: OrderLike) -> float:
    """Combined coefficient of ``U(k + 2β/α)`` in the transformed equation."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    b = float(RationalOrder.of(beta))
    ak = float(RationalOrder.of(alpha)) * k
    value = gamma_ratio(ak + 2 * b + 1, ak + 1) + 2 * gamma_ratio(ak + 2 * b + 1, ak + b + 1)
    if not math.isfinite(value):
        raise OverflowError(f"recurrence denominator overflows at k={k}")
    return value


def _f_transform(p: ProblemSpec, alpha: RationalOrder, K: int) -> dict:
    """Nonzero entries of F up to index K, as {index: coefficient}."""
    F: dict = {}
    for m in p.f_monomials:
        j = index_of(m.exponent, alpha)
        if j > K:
            continue
        seq = monomial_transform(m, alpha, j)
        F[j] = F.get(j, 0.0) + seq[j]
    return {j: c for j, c in sorted(F.items()) if c != 0.0}


def solve(p: ProblemSpec, K: int) -> SeriesSolution:
    """Coefficients ``U(0..K)`` of the truncated series solution.

    G = g(u) is built incrementally: entry k of every power u^m depends only
    on U(0..k), all of which are known before U(k + 2β/α) is needed.
    """
    alpha = choose_grid(p)
    shift = 2 * index_of(p.beta, alpha)
    if K < shift:
        raise ValueError(f"K={K} too small: need K >= {shift} (= 2 beta/alpha)")

    U = [0.0] * (K + 1)
    U[:shift] = ic_transform(p, alpha)
    F = _f_transform(p, alpha, K)
    g = p.g_poly
    M = len(g) - 1
    # powers[m][k] = (u^m)(k) for m >= 1; powers[1] aliases U
    powers = [None, U] + [[0.0] * (K + 1) for _ in range(M - 1)]
    G = [0.0] * (K + 1)
    nonzero_u: list = []

    for k in range(K - shift + 1):
        if U[k] != 0.0:
            nonzero_u.append(k)
        for m in range(2, M + 1):
            prev = powers[m - 1]
            powers[m][k] = math.fsum(U[l] * prev[k - l] for l in nonzero_u)
        terms = [g[m] * powers[m][k] for m in range(1, M + 1)]
        if k == 0:
            terms.append(g[0])
        G[k] = math.fsum(terms)
        fg = math.fsum(c * G[k - l] for l, c in F.items() if l <= k)
        d = denominator(k, p.beta, alpha)
        # keep exact zeros positive so they serialize as 0.0
        U[k + shift] = 0.0 if fg == 0.0 else -fg / d

    return SeriesSolution(p, alpha, CoeffSeq(alpha, U), K)
