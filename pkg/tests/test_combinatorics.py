import math
from fractions import Fraction
from itertools import product

import pytest
from hypothesis import given, strategies as st

from poisson_bargmann.algebra import DomainError, Poly, TruncatedSeries
from poisson_bargmann.combinatorics import (
    falling_factorial,
    gaussian_moment,
    generalized_factorial,
    poisson_type_moment,
    stirling_first,
    stirling_second,
    touchard,
    touchard_scaled,
)
from poisson_bargmann.params import STANDARD_PARAMS, ModelParams

from conftest import positive_rationals

Z = Poly([0, 1])


def _product(roots):
    out = Poly([1])
    for r in roots:
        out = out * (Z - r)
    return out


def _set_partitions(n, k):
    """Count surjections onto k unlabelled blocks by brute force (oracle for S(n,k))."""
    if n == 0:
        return int(k == 0)
    hits = sum(1 for f in product(range(k), repeat=n) if len(set(f)) == k)
    return hits // math.factorial(k)


class TestStirling:
    def test_first_kind_values(self):
        assert stirling_first(3, 2) == -3
        assert stirling_first(3, 1) == 2
        assert all(stirling_first(n, n) == 1 for n in range(10))

    def test_second_kind_values(self):
        assert stirling_second(3, 2) == 3
        assert stirling_second(4, 2) == 7
        assert all(stirling_second(n, n) == 1 for n in range(10))

    @pytest.mark.parametrize("n", range(1, 7))
    def test_second_kind_counts_partitions(self, n):
        assert [stirling_second(n, k) for k in range(n + 1)] == [_set_partitions(n, k) for k in range(n + 1)]

    @pytest.mark.parametrize("n", range(9))
    def test_first_kind_expands_falling_factorial(self, n):
        assert falling_factorial(n) == _product(range(n))
        assert falling_factorial(n).coeffs == tuple(stirling_first(n, k) for k in range(n + 1))

    def test_out_of_range(self):
        for fn in (stirling_first, stirling_second):
            with pytest.raises(DomainError):
                fn(2, 3)
            with pytest.raises(DomainError):
                fn(-1, 0)

    def test_tables_grow_past_default_cap(self):
        # S(40, 2) = 2**39 - 1
        assert stirling_second(40, 2) == 2**39 - 1
        assert stirling_first(40, 39) == -math.comb(40, 2)

    def test_inverse_relation(self):
        for n in range(25):
            for m in range(25):
                total = sum(stirling_second(n, k) * stirling_first(k, m) for k in range(m, n + 1))
                assert total == (n == m)

    def test_bell_numbers(self):
        bell = [1, 1, 2, 5, 15, 52, 203, 877, 4140]
        assert [touchard(n)(1) for n in range(9)] == bell


class TestFactorials:
    def test_falling(self):
        assert falling_factorial(0) == Poly([1])
        assert falling_factorial(2) == Poly([0, -1, 1])
        assert falling_factorial(3) == Poly([0, 2, -3, 1])

    def test_generalized(self):
        assert generalized_factorial(2, Fraction(1, 2)) == Poly([0, Fraction(-1, 2), 1])
        assert generalized_factorial(0, 3) == Poly([1])
        assert all(generalized_factorial(n, 1) == falling_factorial(n) for n in range(10))

    @given(positive_rationals, st.integers(0, 16))
    def test_generalized_coefficients(self, alpha, n):
        g = generalized_factorial(n, alpha)
        assert g == _product(j * alpha for j in range(n))
        assert all(g.coeff(k) == stirling_first(n, k) * alpha ** (n - k) for k in range(n + 1))


class TestTouchard:
    def test_values(self):
        assert touchard(0) == Poly([1])
        assert touchard(2) == Poly([0, 1, 1])
        assert touchard(3) == Poly([0, 1, 3, 1])

    def test_scaled(self):
        assert touchard_scaled(2, Fraction(1, 2)) == Poly([0, Fraction(1, 2), 1])
        assert all(touchard_scaled(n, 1) == touchard(n) for n in range(10))
        assert all(touchard_scaled(1, a) == Z for a in (Fraction(1, 3), 2, 7))

    @given(positive_rationals, st.integers(0, 12))
    def test_scaled_is_rescaled_touchard(self, alpha, n):
        assert touchard_scaled(n, alpha) == touchard(n).compose(Z / alpha) * alpha**n

    @pytest.mark.parametrize("x", [Fraction(0), Fraction(1, 2), Fraction(-2), Fraction(3), Fraction(5, 7)])
    def test_exponential_generating_function(self, x):
        order = 12
        gf = (TruncatedSeries([0] + [Fraction(1, math.factorial(k)) for k in range(1, order + 1)], order) * x).exp()
        assert all(gf[n] * math.factorial(n) == touchard(n)(x) for n in range(order + 1))


class TestMoments:
    def test_examples(self):
        assert poisson_type_moment(0, ModelParams(2, 5)) == 1
        assert poisson_type_moment(1, ModelParams(1, 1)) == 1
        assert poisson_type_moment(2, ModelParams(2, 5)) == Fraction(45, 4)

    def test_gaussian(self):
        assert gaussian_moment(1, 3) == 0
        assert gaussian_moment(2, Fraction(3, 4)) == Fraction(3, 4)
        assert gaussian_moment(4, 1) == 3
        assert gaussian_moment(6, 2) == 15 * 8
        with pytest.raises(DomainError):
            gaussian_moment(2, 0)

    @pytest.mark.parametrize("p", STANDARD_PARAMS, ids=str)
    def test_against_float_summation(self, p):
        # direct sum over the atoms alpha*n with Poisson(lam) weights
        a, lam = float(p.alpha), float(p.intensity)
        for m in range(11):
            total = sum(
                (a * n) ** m * math.exp(-lam + n * math.log(lam) - math.lgamma(n + 1)) for n in range(200)
            )
            want = float(poisson_type_moment(m, p))
            assert abs(total - want) <= 1e-10 * want

    def test_mean_and_variance(self, params):
        m1 = poisson_type_moment(1, params)
        assert m1 == params.sigma / params.alpha
        assert poisson_type_moment(2, params) - m1**2 == params.sigma
