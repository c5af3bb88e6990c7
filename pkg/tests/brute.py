"""Brute-force reference computations kept separate from the package code."""

import math
from fractions import Fraction


def poly_mul(a, b, n):
    """First n coefficients of the product of two coefficient lists, plain double loop."""
    out = [0.0] * n
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            if i + j < n:
                out[i + j] += x * y
    return out


def poly_compose(u, poly, n):
    """First n coefficients of sum_m poly[m] * u**m by repeated multiplication."""
    out = [0.0] * n
    power = [1.0] + [0.0] * (n - 1)
    for c in poly:
        for k in range(n):
            out[k] += c * power[k]
        power = poly_mul(power, u, n)
    return out


def half_integer_gamma(n):
    """Γ(n + 1/2) = (2n)! √π / (4^n n!)."""
    return math.factorial(2 * n) * math.sqrt(math.pi) / (4 ** n * math.factorial(n))


def rel_err(x, ref):
    if ref == 0:
        return abs(x)
    return abs(x - ref) / abs(ref)


def lane_emden_coeff(k):
    """U(k) of sin(t)/t at alpha = 1."""
    if k % 2:
        return 0.0
    j = k // 2
    return float(Fraction((-1) ** j, math.factorial(2 * j + 1)))
