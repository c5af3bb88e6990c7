"""Gamma function on the positive real axis."""

from __future__ import annotations

import math

__all__ = ["GAMMA_MAX_ARG", "gamma", "gamma_ratio"]

#: Largest argument accepted by :func:`gamma`; Γ(171.7) already overflows.
GAMMA_MAX_ARG = 170.0
_LOG_MAX = math.log(1.7976931348623157e308)


def gamma(x: float) -> float:
    """Γ(x) for ``0 < x <= 170``.

    Integer arguments give exact factorials while they are representable
    (n! for n <= 22).
    """
    x = float(x)
    if not x > 0:
        raise ValueError(f"gamma: nonpositive argument {x!r}")
    if x > GAMMA_MAX_ARG:
        raise OverflowError(f"gamma: overflow for argument {x!r}")
    return math.gamma(x)


def gamma_ratio(a: float, b: float) -> float:
    """Γ(a)/Γ(b) without forming either factor when they would overflow."""
    a, b = float(a), float(b)
    for x in (a, b):
        if not x > 0:
            raise ValueError(f"gamma: nonpositive argument {x!r}")
    if a == b:
        return 1.0
    if max(a, b) <= GAMMA_MAX_ARG:
        return math.gamma(a) / math.gamma(b)
    log_ratio = math.lgamma(a) - math.lgamma(b)
    if log_ratio > _LOG_MAX:
        raise OverflowError(f"gamma_ratio: Γ({a})/Γ({b}) overflows")
    return math.exp(log_ratio)
