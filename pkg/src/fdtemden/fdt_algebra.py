"""Fractional differential transforms of functions at the origin.

A function ``u`` analytic in ``t**alpha`` near 0 is represented by the
finite sequence ``U(0..K)`` with ``u(t) ~ sum_k U(k) t**(alpha*k)``.  The
operations here are the transform images of monomials, products, division
by a power of ``t`` and Caputo differentiation, plus evaluation of the
inverse transform.

Binary operations return the shortest length fully determined by their
inputs; nothing is padded.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

from .gamma import gamma_ratio
from .order_arith import OrderLike, RationalOrder, index_of

__all__ = [
    "CoeffSeq",
    "Monomial",
    "monomial_transform",
    "cauchy_product",
    "shift_divide",
    "caputo_transform",
    "polynomial_of_u",
    "evaluate",
]


@dataclass(frozen=True)
class CoeffSeq:
    """Coefficients ``U(0..K)`` on the grid ``t**(alpha*k)`` about ``t = 0``."""

    alpha: RationalOrder
    coeffs: tuple
    base_point: float = 0.0

    def __init__(self, alpha: OrderLike, coeffs: Iterable[float], base_point: float = 0.0):
        alpha = RationalOrder.of(alpha)
        coeffs = tuple(float(c) for c in coeffs)
        if not (0 < alpha.value <= 1):
            raise ValueError(f"grid step alpha must lie in (0, 1], got {alpha}")
        if not coeffs:
            raise ValueError("coefficient sequence must not be empty")
        if not all(math.isfinite(c) for c in coeffs):
            raise ValueError("coefficient sequence contains non-finite entries")
        if base_point != 0.0:
            raise ValueError("only base point t0 = 0 is supported")
        object.__setattr__(self, "alpha", alpha)
        object.__setattr__(self, "coeffs", coeffs)
        object.__setattr__(self, "base_point", 0.0)

    @property
    def K(self) -> int:
        """Truncation index (last stored k)."""
        return len(self.coeffs) - 1

    def __len__(self) -> int:
        return len(self.coeffs)

    def __getitem__(self, k):
        return self.coeffs[k]

    def __iter__(self):
        return iter(self.coeffs)

    def truncate(self, K: int) -> "CoeffSeq":
        if K < 0:
            raise ValueError("truncation index must be nonnegative")
        return CoeffSeq(self.alpha, self.coeffs[: K + 1])

    def exponent(self, k: int) -> RationalOrder:
        """Exact power of ``t`` carried by entry ``k``."""
        return self.alpha * k


@dataclass(frozen=True)
class Monomial:
    """``coefficient * t**exponent``."""

    coefficient: float
    exponent: RationalOrder

    def __init__(self, coefficient: float, exponent: OrderLike = 0):
        object.__setattr__(self, "coefficient", float(coefficient))
        object.__setattr__(self, "exponent", RationalOrder.of(exponent))

    def __call__(self, t: float) -> float:
        if self.exponent.numerator == 0:
            return self.coefficient
        return self.coefficient * t ** float(self.exponent)


def _check_grid(g: CoeffSeq, h: CoeffSeq):
    if g.alpha != h.alpha or g.base_point != h.base_point:
        raise ValueError(f"grid mismatch: alpha {g.alpha} vs {h.alpha}")


def monomial_transform(m: Monomial, alpha: OrderLike, K: int) -> CoeffSeq:
    """Kronecker delta at ``exponent/alpha`` scaled by the coefficient."""
    j = index_of(m.exponent, alpha)
    if K < j:
        raise ValueError(f"K={K} too small for exponent {m.exponent} (index {j})")
    coeffs = [0.0] * (K + 1)
    coeffs[j] = m.coefficient
    return CoeffSeq(alpha, coeffs)


def cauchy_product(g: CoeffSeq, h: CoeffSeq) -> CoeffSeq:
    """Transform of the pointwise product ``g(t) h(t)``."""
    _check_grid(g, h)
    n = min(len(g), len(h))
    gc, hc = g.coeffs, h.coeffs
    out = [math.fsum(gc[l] * hc[k - l] for l in range(k + 1)) for k in range(n)]
    return CoeffSeq(g.alpha, out)


def shift_divide(g: CoeffSeq, r: OrderLike, tol: Optional[float] = None) -> CoeffSeq:
    """Transform of ``g(t) / t**r``.

    The ``s = r/alpha`` leading coefficients must vanish (up to ``tol``,
    default ``1e-12 * max|g|``), otherwise the quotient has negative powers.
    """
    s = index_of(r, g.alpha)
    if s > g.K:
        raise ValueError(f"shift {s} exceeds truncation index {g.K}")
    if tol is None:
        tol = 1e-12 * max(abs(c) for c in g.coeffs)
    dropped = g.coeffs[:s]
    if any(abs(c) > tol for c in dropped):
        raise ValueError(
            f"result has negative-power terms: dividing by t^{RationalOrder.of(r)} "
            f"drops nonzero coefficients {dropped}"
        )
    return CoeffSeq(g.alpha, g.coeffs[s:])


def caputo_transform(g: CoeffSeq, beta: OrderLike) -> CoeffSeq:
    """Transform of the Caputo derivative of order ``beta`` of ``g``.

    ``result[k] = Γ(αk+β+1)/Γ(αk+1) * g[k + β/α]``
    """
    beta = RationalOrder.of(beta)
    b = index_of(beta, g.alpha)
    if b > g.K:
        raise ValueError(f"derivative order {beta} (index {b}) exceeds truncation index {g.K}")
    a, bf = float(g.alpha), float(beta)
    out = [
        gamma_ratio(a * k + bf + 1.0, a * k + 1.0) * g.coeffs[k + b]
        for k in range(g.K - b + 1)
    ]
    return CoeffSeq(g.alpha, out)


def polynomial_of_u(u: CoeffSeq, poly: Sequence[float]) -> CoeffSeq:
    """Transform of ``sum_m poly[m] * u(t)**m`` (lowest degree first)."""
    if len(poly) == 0:
        raise ValueError("polynomial g(u) needs at least one coefficient")
    n = len(u)
    # Horner: acc <- acc * u + c_m, from the top degree down.
    acc = [0.0] * n
    acc[0] = float(poly[-1])
    for c in reversed(poly[:-1]):
        acc = list(cauchy_product(CoeffSeq(u.alpha, acc), u).coeffs)
        acc[0] += float(c)
    return CoeffSeq(u.alpha, acc)


def evaluate(s: CoeffSeq, t: float) -> float:
    """Inverse transform: ``sum_k s[k] * t**(alpha*k)`` with compensated summation."""
    t = float(t)
    if t == 0.0:
        return s.coeffs[0]
    if t < 0.0 and not s.alpha.is_integer():
        raise ValueError(f"fractional power of negative base t={t} with alpha={s.alpha}")
    a = float(s.alpha)
    return math.fsum(c * t ** (a * k) for k, c in enumerate(s.coeffs) if c != 0.0)
