import math
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from poisson_bargmann.algebra import DomainError, Poly
from poisson_bargmann.combinatorics import touchard
from poisson_bargmann.orthogonal import (
    charlier_expanded,
    charlier_explicit,
    charlier_recurrence,
    generating_function_check,
    generating_function_polys,
    hermite_recurrence,
    hermite_tilde,
    hermite_tilde_twist,
    monomial_in_charlier,
)
from poisson_bargmann.params import STANDARD_PARAMS, ModelParams
from poisson_bargmann.transform import inner_product_gaussian, inner_product_L2pi, op_gaussian_transform

from conftest import polys

Z = Poly([0, 1])
UNIT = ModelParams(1, 1)


def _float_charlier(n, x, a, s):
    """Classical Charlier values by float recurrence, rescaled: oracle for small cases."""
    prev, cur = 0.0, 1.0
    for k in range(n):
        prev, cur = cur, (x - a * k - s / a) * cur - s * k * prev
    return cur


class TestCharlier:
    def test_examples(self):
        c = charlier_recurrence(UNIT, 3).polys
        assert c[0] == Poly([1]) and c[1] == Z - 1 and c[2] == Poly([1, -3, 1])
        assert c[3] == Poly([-1, 8, -6, 1])

    def test_explicit_examples(self, params):
        assert charlier_explicit(params, 1) == Z - params.shift
        assert charlier_explicit(UNIT, 2) == Poly([1, -3, 1])
        for n in range(8):
            assert charlier_explicit(params, n).coeff(0) == (-params.shift) ** n

    def test_monic(self, params):
        assert all(p.is_monic and p.degree == n for n, p in enumerate(charlier_recurrence(params, 12).polys))

    def test_triple_agreement(self, params):
        basis = charlier_recurrence(params, 16)
        for n, c in enumerate(basis.polys):
            assert c == charlier_explicit(params, n) == charlier_expanded(params, n)

    def test_against_float_recurrence(self, params):
        a, s = float(params.alpha), float(params.sigma)
        basis = charlier_recurrence(params, 10)
        for n, c in enumerate(basis.polys):
            for x in (0.0, a, 3 * a, 0.37):
                want = _float_charlier(n, x, a, s)
                assert abs(c.eval_complex(x) - want) <= 1e-9 * (1 + abs(want))

    def test_monomial_examples(self, params):
        assert monomial_in_charlier(params, 0) == [1]
        assert monomial_in_charlier(params, 1) == [params.shift, 1]
        assert monomial_in_charlier(UNIT, 3)[0] == touchard(3)(1) == 5

    def test_monomial_expansion_matches_table(self, params):
        basis = charlier_recurrence(params, 16)
        for n in range(17):
            coeffs = monomial_in_charlier(params, n)
            assert list(basis.from_monomial[n]) == coeffs
            assert basis.combine(coeffs) == Z**n

    def test_conversion_tables_are_inverse(self, params):
        basis = charlier_recurrence(params, 10)
        for n in range(11):
            assert basis.expand(basis.polys[n]) == [0] * n + [1]

    @given(polys(10), st.sampled_from(STANDARD_PARAMS))
    def test_expand_combine_roundtrip(self, p, params):
        basis = charlier_recurrence(params, 10)
        assert basis.combine(basis.expand(p)) == p

    def test_expand_beyond_cap(self):
        with pytest.raises(DomainError):
            charlier_recurrence(UNIT, 2).expand(Z**3)

    def test_orthogonality(self, params):
        c = charlier_recurrence(params, 12).polys
        for m in range(13):
            for n in range(13):
                want = math.factorial(n) * params.sigma**n if m == n else 0
                assert inner_product_L2pi(c[m], c[n], params) == want

    def test_inner_product_examples(self):
        c = charlier_recurrence(UNIT, 1).polys
        assert inner_product_L2pi(c[1], c[0], UNIT) == 0
        assert inner_product_L2pi(c[1], c[1], UNIT) == 1
        assert inner_product_L2pi(Poly([1]), Poly([1]), UNIT) == 1


class TestHermite:
    def test_examples(self):
        s = Fraction(3, 4)
        h = hermite_recurrence(s, 3).polys
        assert h[0] == Poly([1]) and h[2] == Z**2 - s and h[3] == Z**3 - Z * (3 * s)

    def test_rejects_nonpositive_sigma(self):
        with pytest.raises(DomainError):
            hermite_recurrence(0, 3)
        with pytest.raises(DomainError):
            hermite_tilde(-1, 3)

    def test_tilde_examples(self):
        s = Fraction(3, 4)
        assert hermite_tilde(s, 2) == Z**2 + s
        assert hermite_tilde(s, 1) == Z

    @pytest.mark.parametrize("sigma", [Fraction(1), Fraction(3, 4), Fraction(5)])
    def test_twist(self, sigma):
        basis = hermite_recurrence(sigma, 16)
        for n, h in enumerate(basis.polys):
            assert hermite_tilde_twist(h) == hermite_tilde(sigma, n)

    def test_twist_needs_parity(self):
        with pytest.raises(DomainError):
            hermite_tilde_twist(Z**2 + Z)

    def test_classical_values(self):
        # probabilists' Hermite He_4(x) = x^4 - 6x^2 + 3
        assert hermite_recurrence(1, 4).polys[4] == Poly([3, 0, -6, 0, 1])

    @pytest.mark.parametrize("sigma", [Fraction(1), Fraction(3, 4)])
    def test_transform_consistency(self, sigma):
        op = op_gaussian_transform(sigma, 12)
        for n, h in enumerate(hermite_recurrence(sigma, 12).polys):
            assert op(h) == Z**n

    @pytest.mark.parametrize("sigma", [Fraction(1), Fraction(3, 4), Fraction(5)])
    def test_orthogonality(self, sigma):
        h = hermite_recurrence(sigma, 12).polys
        for m in range(13):
            for n in range(13):
                want = math.factorial(n) * sigma**n if m == n else 0
                assert inner_product_gaussian(h[m], h[n], sigma) == want


class TestGeneratingFunctions:
    def test_charlier_order_six(self):
        assert generating_function_check("charlier", UNIT, 6)

    def test_hermite_order_six(self):
        assert generating_function_check("hermite", Fraction(1), 6)

    def test_order_zero(self):
        assert generating_function_polys("charlier", UNIT, 0) == [Poly([1])]

    def test_charlier_order_twelve(self, params):
        assert generating_function_check("charlier", params, 12)

    @pytest.mark.parametrize("family", ["hermite", "hermite-tilde"])
    @pytest.mark.parametrize("sigma", [Fraction(1), Fraction(3, 4), Fraction(5)])
    def test_hermite_order_ten(self, family, sigma):
        assert generating_function_check(family, sigma, 10)

    def test_unit_charlier_float_oracle(self):
        # sum_n c_n(x) t^n / n! = exp(-t) (1 + t)^x, checked numerically at x = 2.5, t = 0.3
        x, t = 2.5, 0.3
        basis = charlier_recurrence(UNIT, 30)
        total = sum(float(p(Fraction(5, 2))) * t**n / math.factorial(n) for n, p in enumerate(basis.polys))
        assert abs(total - math.exp(-t) * (1 + t) ** x) < 1e-13

    def test_unknown_family(self):
        with pytest.raises(DomainError):
            generating_function_check("legendre", UNIT, 3)
        with pytest.raises(DomainError):
            generating_function_polys("legendre", UNIT, 3)
