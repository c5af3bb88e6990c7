import math
import random

import pytest
from hypothesis import given, settings, strategies as st

from brute import lane_emden_coeff, poly_compose, poly_mul, rel_err
from fdtemden.fdt_algebra import (
    CoeffSeq,
    Monomial,
    caputo_transform,
    cauchy_product,
    evaluate,
    monomial_transform,
    polynomial_of_u,
    shift_divide,
)
from fdtemden.gamma import gamma_ratio
from fdtemden.order_arith import RationalOrder

finite = st.floats(-10, 10, allow_nan=False)
seqs = st.lists(finite, min_size=1, max_size=16)


def seq(coeffs, alpha="1/1"):
    return CoeffSeq(alpha, coeffs)


def close(a, b, rel=1e-12):
    scale = max(1.0, max(map(abs, b), default=0.0))
    return len(a) == len(b) and all(abs(x - y) <= rel * scale for x, y in zip(a, b))


class TestCoeffSeq:
    def test_rejects_empty_and_nonfinite(self):
        with pytest.raises(ValueError):
            seq([])
        with pytest.raises(ValueError):
            seq([1.0, math.inf])

    def test_rejects_alpha_above_one(self):
        with pytest.raises(ValueError):
            CoeffSeq("3/2", [1.0])

    def test_immutable(self):
        s = seq([1, 2])
        with pytest.raises(AttributeError):
            s.coeffs = (3.0,)


@pytest.mark.parametrize(
    "m, alpha, K, expected",
    [
        (Monomial(1, "1/1"), "1/2", 4, [0, 0, 1, 0, 0]),
        (Monomial(5, 0), "1/4", 2, [5, 0, 0]),
        (Monomial(1, "3/4"), "1/4", 4, [0, 0, 0, 1, 0]),
    ],
)
def test_monomial_transform(m, alpha, K, expected):
    assert list(monomial_transform(m, alpha, K)) == expected


def test_monomial_transform_off_grid():
    with pytest.raises(ValueError, match="not on grid"):
        monomial_transform(Monomial(1, "1/3"), "1/2", 4)


class TestCauchyProduct:
    def test_binomial_square(self):
        assert list(cauchy_product(seq([1, 1, 0]), seq([1, 1, 0]))) == [1, 2, 1]
        assert list(cauchy_product(seq([1, 1]), seq([1, 1]))) == [1, 2]

    def test_identity(self):
        assert list(cauchy_product(seq([3.5, 0, 0]), seq([1, 0, 0]))) == [3.5, 0, 0]

    def test_against_brute_force_value(self):
        assert list(cauchy_product(seq([1, 2, 3]), seq([4, 5, 6]))) == [4, 13, 28]

    def test_shortest_length(self):
        assert len(cauchy_product(seq([1, 2, 3, 4]), seq([1, 1]))) == 2

    def test_grid_mismatch(self):
        with pytest.raises(ValueError, match="grid mismatch"):
            cauchy_product(seq([1], "1/2"), seq([1], "1/3"))

    @given(seqs, seqs)
    def test_matches_double_loop(self, a, b):
        n = min(len(a), len(b))
        assert close(list(cauchy_product(seq(a), seq(b))), poly_mul(a, b, n))

    @given(seqs, seqs, seqs)
    def test_commutative_associative_distributive(self, a, b, c):
        A, B, C = seq(a), seq(b), seq(c)
        assert close(list(cauchy_product(A, B)), list(cauchy_product(B, A)))
        lhs = cauchy_product(cauchy_product(A, B), C)
        rhs = cauchy_product(A, cauchy_product(B, C))
        assert close(list(lhs), list(rhs), 1e-11)
        n = min(len(b), len(c))
        bc = seq([x + y for x, y in zip(b[:n], c[:n])])
        dist = [x + y for x, y in zip(cauchy_product(A, B), cauchy_product(A, C))]
        assert close(list(cauchy_product(A, bc)), dist, 1e-11)


class TestShiftDivide:
    def test_t_over_t(self):
        assert list(shift_divide(seq([0, 0, 1, 0], "1/2"), "1/1")) == [1, 0]

    def test_shift_three(self):
        assert list(shift_divide(seq([0, 0, 0, 2, 5], "1/4"), "3/4")) == [2, 5]

    def test_negative_power_rejected(self):
        with pytest.raises(ValueError, match="negative-power"):
            shift_divide(seq([1, 0, 0], "1/2"), "1/2", tol=1e-14)

    def test_default_tolerance_is_relative(self):
        out = shift_divide(seq([1e-15, 3.0], "1/2"), "1/2")
        assert list(out) == [3.0]

    @given(st.integers(0, 8), st.integers(0, 8))
    def test_monomial_shift_exact(self, r, s):
        alpha = RationalOrder(1, 4)
        K = r + s + 2
        lhs = shift_divide(monomial_transform(Monomial(1, alpha * (r + s)), alpha, K), alpha * r)
        rhs = monomial_transform(Monomial(1, alpha * s), alpha, K - r)
        assert lhs == rhs


class TestCaputoTransform:
    def test_first_derivative_of_square(self):
        assert list(caputo_transform(seq([0, 0, 1]), "1/1")) == [0, 2]

    def test_half_derivative_of_t(self):
        out = caputo_transform(seq([0, 0, 1], "1/2"), "1/2")
        assert out[0] == 0
        assert rel_err(out[1], 1.1283791670955126) <= 1e-12

    def test_constant_annihilated(self):
        assert list(caputo_transform(seq([4.0, 0.0]), "1/1")) == [0.0]
        assert list(caputo_transform(seq([4.0, 0, 0, 0], "1/4"), "3/4")) == [0.0]

    def test_off_grid(self):
        with pytest.raises(ValueError):
            caputo_transform(seq([0, 0, 1], "1/2"), "1/3")

    @given(st.integers(1, 8), st.integers(0, 12), st.sampled_from(["1/2", "1/3", "1/4", "1/5"]))
    def test_power_rule_on_monomials(self, b, j, alpha):
        alpha = RationalOrder.of(alpha)
        j = j + b  # power at least the derivative order
        beta = alpha * b
        out = caputo_transform(monomial_transform(Monomial(1, alpha * j), alpha, j + 2), beta)
        ref = gamma_ratio(float(alpha * j) + 1, float(alpha * j) - float(beta) + 1)
        assert rel_err(out[j - b], ref) <= 1e-11
        assert all(c == 0 for k, c in enumerate(out) if k != j - b)


class TestPolynomialOfU:
    def test_identity(self):
        u = seq([0.3, -1.2, 4.0])
        assert polynomial_of_u(u, [0, 1]) == u

    def test_square_of_one(self):
        assert list(polynomial_of_u(seq([1, 0, 0]), [0, 0, 1])) == [1, 0, 0]

    def test_brute_force_value(self):
        assert list(polynomial_of_u(seq([1, 2, 0]), [3, 0, 1])) == [4, 4, 4]

    def test_empty_poly(self):
        with pytest.raises(ValueError):
            polynomial_of_u(seq([1]), [])

    @settings(max_examples=60)
    @given(seqs, st.lists(st.floats(-3, 3), min_size=1, max_size=4), st.integers(0, 15))
    def test_prefix_causality(self, u, poly, k):
        k = min(k, len(u) - 1)
        full = polynomial_of_u(seq(u), poly)
        head = polynomial_of_u(seq(u[: k + 1]), poly)
        assert list(full)[: k + 1] == list(head)

    def test_against_brute_force_random(self):
        rng = random.Random(3)
        for _ in range(100):
            n = rng.randint(1, 16)
            u = [rng.uniform(-1, 1) for _ in range(n)]
            poly = [rng.uniform(-2, 2) for _ in range(rng.randint(1, 5))]
            assert close(list(polynomial_of_u(seq(u), poly)), poly_compose(u, poly, n))


class TestEvaluate:
    def test_at_zero(self):
        assert evaluate(seq([2.5, 7, 9], "1/3"), 0.0) == 2.5

    def test_sqrt_term(self):
        assert evaluate(seq([1, 1], "1/2"), 4.0) == 3.0

    def test_lane_emden_series(self):
        s = seq([lane_emden_coeff(k) for k in range(21)])
        assert abs(evaluate(s, 1.0) - 0.8414709848078965) <= 1e-12

    def test_negative_t(self):
        with pytest.raises(ValueError, match="negative base"):
            evaluate(seq([1, 1], "1/2"), -1.0)
        assert evaluate(seq([1, 1, 1]), -2.0) == 3.0

    @given(seqs, st.floats(-5, 5), st.floats(0, 2))
    def test_linear(self, a, c, t):
        s1 = seq(a, "1/3")
        s2 = seq([c * x for x in a], "1/3")
        lhs = evaluate(s2, t)
        rhs = c * evaluate(s1, t)
        scale = max(1.0, sum(abs(c * x) * t ** (k / 3) for k, x in enumerate(a)))
        assert abs(lhs - rhs) <= 1e-12 * scale
