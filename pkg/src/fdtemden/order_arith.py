"""Exact rational orders and selection of the series grid step.

Orders and exponents are kept as integer pairs so that grid indices are
decided exactly; no floating point is involved here.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Union

__all__ = ["RationalOrder", "normalize", "parse_order", "select_alpha", "index_of"]

_FRACTION_RE = re.compile(r"^\s*(\d+)\s*(?:/\s*(\d+)\s*)?$")


@dataclass(frozen=True, order=True)
class RationalOrder:
    """Nonnegative rational ``numerator/denominator`` in lowest terms.

    Use :func:`normalize` or :meth:`of` to build one; the constructor only
    validates.
    """

    numerator: int
    denominator: int = 1

    def __post_init__(self):
        if self.denominator < 1 or self.numerator < 0:
            raise ValueError(f"invalid order {self.numerator}/{self.denominator}")
        if math.gcd(self.numerator, self.denominator) != 1:
            raise ValueError(
                f"order {self.numerator}/{self.denominator} is not in lowest terms"
            )

    @classmethod
    def of(cls, value: "OrderLike") -> "RationalOrder":
        if isinstance(value, RationalOrder):
            return value
        if isinstance(value, str):
            return parse_order(value)
        if isinstance(value, bool) or not isinstance(value, (int, Fraction)):
            raise TypeError(f"cannot use {value!r} as an exact order")
        value = Fraction(value)
        return normalize(value.numerator, value.denominator)

    @property
    def value(self) -> Fraction:
        return Fraction(self.numerator, self.denominator)

    def is_integer(self) -> bool:
        return self.denominator == 1

    def __float__(self) -> float:
        return self.numerator / self.denominator

    def __str__(self) -> str:
        return f"{self.numerator}/{self.denominator}"

    def __mul__(self, other: int) -> "RationalOrder":
        if not isinstance(other, int):
            return NotImplemented
        return normalize(self.numerator * other, self.denominator)

    __rmul__ = __mul__


OrderLike = Union[RationalOrder, Fraction, int, str]


def normalize(num: int, den: int) -> RationalOrder:
    """Reduce ``num/den`` to lowest terms with a positive denominator."""
    if den == 0:
        raise ValueError("invalid order: zero denominator")
    if den < 0:
        num, den = -num, -den
    if num < 0:
        raise ValueError(f"invalid order: {num}/{den} is negative")
    g = math.gcd(num, den)
    return RationalOrder(num // g, den // g)


def parse_order(text: str) -> RationalOrder:
    """Parse ``"p/q"`` or ``"p"`` into an exact order."""
    m = _FRACTION_RE.match(text)
    if m is None:
        raise ValueError(f"malformed fraction {text!r}, expected 'p/q'")
    return normalize(int(m.group(1)), int(m.group(2) or 1))


def select_alpha(orders: Iterable[OrderLike]) -> RationalOrder:
    """Return ``1/L`` with ``L`` the lcm of all denominators (and of 1).

    Every input order is then an integer multiple of the result, and so is 1,
    which lets integer-order initial data sit on the grid.
    """
    orders = [RationalOrder.of(o) for o in orders]
    if not orders:
        raise ValueError("select_alpha needs at least one order")
    lcm = 1
    for o in orders:
        if o.numerator == 0:
            raise ValueError(f"order must be positive, got {o}")
        lcm = math.lcm(lcm, o.denominator)
    return RationalOrder(1, lcm)


def index_of(order: OrderLike, alpha: OrderLike) -> int:
    """Return ``k`` with ``k * alpha == order`` exactly."""
    order = RationalOrder.of(order)
    alpha = RationalOrder.of(alpha)
    if alpha.numerator == 0:
        raise ValueError("grid step must be positive")
    k, rem = divmod(order.value, alpha.value)
    if rem != 0:
        raise ValueError(f"order not on grid: {order} is not a multiple of {alpha}")
    return int(k)
