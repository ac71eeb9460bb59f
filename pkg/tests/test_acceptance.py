"""Acceptance criteria, one test each, at their stated tolerances.

A PASS/FAIL line per criterion is printed in the terminal summary. Run alone with
``pytest tests/test_acceptance.py`` or ``python tests/test_acceptance.py``.
"""
import cmath
import math
import random
import sys
import time
from fractions import Fraction
from math import factorial

import pytest

from poisson_bargmann import operators as ops
from poisson_bargmann.algebra import Poly, TruncatedSeries, expm1_scaled, log1p_scaled
from poisson_bargmann.orthogonal import (
    charlier_expanded,
    charlier_explicit,
    charlier_recurrence,
    generating_function_check,
    hermite_recurrence,
    hermite_tilde,
    hermite_tilde_twist,
    monomial_in_charlier,
)
from poisson_bargmann.params import STANDARD_PARAMS, ModelParams
from poisson_bargmann.transform import (
    GridFunction,
    characteristic_gap,
    coherent_state_charlier,
    coherent_state_charlier_series,
    coherent_state_hermite,
    coherent_state_hermite_series,
    inner_product_gaussian,
    inner_product_L2pi,
    lowering_eigenfunction_check,
    nu_sigma_monomial_inner,
    op_gaussian_transform,
    transform_apply,
    transform_apply_fixed,
    transform_evaluate,
)
from poisson_bargmann.verify import DEFAULT_SEED, sample_points

SIGMAS = (Fraction(1), Fraction(3, 4), Fraction(5))


def test_01_charlier_gram_matrix(acceptance):
    start = time.perf_counter()
    ok = True
    for p in STANDARD_PARAMS:
        c = charlier_recurrence(p, 12).polys
        gram = [[inner_product_L2pi(c[m], c[n], p) for n in range(13)] for m in range(13)]
        want = [[factorial(n) * p.sigma**n if m == n else 0 for n in range(13)] for m in range(13)]
        ok &= gram == want
    elapsed = time.perf_counter() - start
    ok &= elapsed < 10
    acceptance("1  Gram matrix of c_0..c_12 = diag(n! sigma^n), exact", ok, f"{elapsed:.2f}s")
    assert ok


def test_02_transform_factorization(acceptance):
    cap = 16
    ok = True
    for p in STANDARD_PARAMS:
        s = ops.op_sheffer_S(p, cap)
        s_inv = ops.op_sheffer_S_inv(p, cap)
        ok &= s == ops.op_shift(p.shift, cap) @ ops.op_umbral_touchard(p, cap)
        ok &= s_inv == ops.op_umbral_factorial(p, cap) @ ops.op_shift(-p.shift, cap)
        ok &= s @ s_inv == ops.identity(cap)
    acceptance("2  S = E_{s/a} T_a, S^-1 = F_a E_{-s/a}, S S^-1 = id on cap 16, exact", ok)
    assert ok


def test_03_weyl_and_katriel(acceptance):
    ok = True
    for p in STANDARD_PARAMS:
        u, v = ops.op_weyl_pair(p, 21)
        comm = ops.op_commutator(v, u)
        ok &= comm.cap == 20 and comm == ops.identity(20) * p.alpha
        ok &= all(ops.katriel_check(p, n, 24) for n in range(1, 9))
    acceptance("3  [V,U] = alpha on cap 20; Katriel ordering for n <= 8, exact", ok)
    assert ok


def test_04_shift_form_identities(acceptance):
    cap = 16
    ok = True
    for p in STANDARD_PARAMS:
        c = charlier_recurrence(p, cap + 1).polys
        lower = ops.op_lowering_charlier(p, cap + 1)
        big_v = lower * p.alpha + 1
        big_u = ops.op_raising_charlier(p, cap + 1) + p.shift
        ok &= lower == (ops.op_shift(p.alpha, cap + 1) - ops.identity(cap + 1)) / p.alpha
        ok &= big_v == ops.op_shift(p.alpha, cap + 1)
        ok &= big_u.restrict(cap) == ops.op_mulz(cap + 1) @ ops.op_shift(-p.alpha, cap)
        ok &= big_u @ big_v.restrict(cap) == ops.op_mulz(cap)
        ok &= all(lower(c[n]) == c[n - 1] * n for n in range(1, cap + 1))
    acceptance("4  V = E_a, U = Z E_-a, Z = U V, lowering = (E_a - 1)/a on cap 16, exact", ok)
    assert ok


def test_05_series_inverse_pair(acceptance):
    order = 24
    t = TruncatedSeries.variable(order)
    ok = True
    for a in (Fraction(1), Fraction(1, 2), Fraction(2)):
        b, c = log1p_scaled(a, order), expm1_scaled(a, order)
        ok &= b.compose(c) == t and c.compose(b) == t
    acceptance("5  B_a(C_a(t)) = C_a(B_a(t)) = t to order 24, exact", ok)
    assert ok


def test_06_charlier_constructions(acceptance):
    ok = True
    for p in STANDARD_PARAMS:
        basis = charlier_recurrence(p, 16)
        for n, c in enumerate(basis.polys):
            ok &= c == charlier_explicit(p, n) == charlier_expanded(p, n)
            coeffs = monomial_in_charlier(p, n)
            ok &= basis.combine(coeffs) == Poly.monomial(n)
        ok &= bool(generating_function_check("charlier", p, 12))
    acceptance("6  Charlier triple agreement and monomial expansion n <= 16; generating function order 12", ok)
    assert ok


def test_07_hermite_block(acceptance):
    ok = True
    z = Poly([0, 1])
    for s in SIGMAS:
        h = hermite_recurrence(s, 16).polys
        ok &= all(hermite_tilde_twist(h[n]) == hermite_tilde(s, n) for n in range(17))
        ok &= bool(generating_function_check("hermite", s, 10))
        ok &= bool(generating_function_check("hermite-tilde", s, 10))
        gauss_op = op_gaussian_transform(s, 12)
        ok &= all(gauss_op(h[n]) == z**n for n in range(13))
        ok &= all(
            inner_product_gaussian(h[m], h[n], s) == (factorial(n) * s**n if m == n else 0)
            for m in range(13)
            for n in range(13)
        )
    acceptance("7  Hermite twist n <= 16, generating functions order 10, consistency and Gram n <= 12", ok)
    assert ok


def test_08_transform_summation(acceptance):
    worst = 0.0
    for p in STANDARD_PARAMS:
        for n, c in enumerate(charlier_recurrence(p, 6).polys):
            g = GridFunction.from_poly(c, p, 80)
            for zz in sample_points(20, 0.5, 2.0):
                worst = max(worst, abs(transform_apply(g, p, zz) - zz**n) / abs(zz) ** n)
    one_err = max(
        abs(transform_evaluate(lambda x: 1.0, p, zz).value - 1)
        for p in STANDARD_PARAMS
        for zz in sample_points(20, 0.0, 2.0)
    )
    rng = random.Random(DEFAULT_SEED)
    tail_failures = 0
    for i in range(100):
        p = STANDARD_PARAMS[i % 3]
        f = Poly(Fraction(rng.randint(-9, 9), rng.randint(1, 6)) for _ in range(rng.randint(1, 6)))
        zz = cmath.rect(2 * rng.random() ** 0.5, 2 * math.pi * rng.random())
        res = transform_evaluate(f.eval_complex, p, zz)
        doubled = transform_apply_fixed(f.eval_complex, p, zz, 2 * res.terms)
        if abs(doubled - res.value) > res.tail_bound + 1e-15 * abs(doubled):
            tail_failures += 1
    ok = worst <= 1e-9 and one_err <= 1e-12 and tail_failures == 0
    acceptance(
        "8  S c_n = z^n (rel 1e-9), S1 = 1 (1e-12), tail bounds on 100 cases",
        ok,
        f"rel {worst:.1e}, S1 {one_err:.1e}, tail failures {tail_failures}",
    )
    assert ok


def test_09_coherent_states(acceptance):
    worst = 0.0
    zs = sample_points(10, 0.0, 1.0)
    for p in STANDARD_PARAMS:
        for n in range(8):
            for zz in zs:
                worst = max(worst, abs(coherent_state_charlier(p, n, zz) - coherent_state_charlier_series(p, n, zz, 40)))
        for x in (-1.5, 0.0, 0.5, 2.0):
            for zz in zs:
                worst = max(
                    worst, abs(coherent_state_hermite(p.sigma, x, zz) - coherent_state_hermite_series(p.sigma, x, zz, 40))
                )
    eigen = all(
        lowering_eigenfunction_check(p, complex(0.6, -0.9), n) for p in STANDARD_PARAMS for n in range(1, 13)
    )
    ok = worst <= 1e-10 and eigen
    acceptance("9  coherent-state closed forms (1e-10); sigma * lowering(E_N) = z E_{N-1} for N <= 12", ok,
               f"max error {worst:.1e}")
    assert ok


def test_10_nu_sigma_orthogonality(acceptance):
    worst = 0.0
    for s in (Fraction(1), Fraction(3, 4)):
        for m in range(9):
            for n in range(9):
                want = factorial(n) * float(s) ** n if m == n else 0.0
                worst = max(worst, abs(nu_sigma_monomial_inner(m, n, s) - want))
    ok = worst <= 1e-8
    acceptance("10 nu_sigma monomial orthogonality for m, n <= 8 (1e-8)", ok, f"max error {worst:.1e}")
    assert ok


def test_11_weak_convergence(acceptance):
    ys = [0.25 * k for k in range(1, 13)]
    ratios = []
    ok = True
    for s in SIGMAS:
        gaps = [characteristic_gap(ModelParams(Fraction(1, 2**k), s), ys) for k in range(4)]
        ok &= all(a >= b for a, b in zip(gaps, gaps[1:]))
        ratios += [a / b for a, b in zip(gaps, gaps[1:])]
    ok &= min(ratios) >= 1.6
    acceptance("11 characteristic-function gap nonincreasing and shrinking >= 1.6x per halving", ok,
               f"smallest ratio {min(ratios):.2f}")
    assert ok


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-q"]))
