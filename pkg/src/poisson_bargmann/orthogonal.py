"""Charlier-type and Hermite polynomial families.

Each family has a canonical three-term recurrence construction; the explicit
formulas below exist as independent cross-checks against it.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property, lru_cache
from math import comb, factorial
from typing import Sequence, Union

from .algebra import DomainError, Poly, Scalar, TruncatedSeries, interpolate, log1p_scaled
from .combinatorics import (
    gaussian_moment,
    generalized_factorial,
    stirling_first,
    stirling_second,
    touchard_scaled,
)
from .params import ModelParams


@dataclass(frozen=True)
class OrthogonalBasis:
    """Monic family ``polys[0..cap]`` with exact conversions to and from monomials.

    ``to_monomial[n]`` is the coefficient list of ``polys[n]``;
    ``from_monomial[n]`` lists the coefficients of ``z**n`` in the family.
    """

    family: str
    params: Union[ModelParams, Fraction]
    polys: tuple = field(repr=False)

    @property
    def cap(self) -> int:
        return len(self.polys) - 1

    @cached_property
    def to_monomial(self) -> tuple:
        return tuple(
            tuple(p.coeff(k) for k in range(n + 1)) for n, p in enumerate(self.polys)
        )

    @cached_property
    def from_monomial(self) -> tuple:
        # back-substitution: z^n = p_n - sum_{k<n} [z^k]p_n * z^k, all lower rows known
        rows = []
        for n, p in enumerate(self.polys):
            row = [Fraction(0)] * (n + 1)
            row[n] = Fraction(1)
            for k in range(n):
                a = p.coeff(k)
                if a:
                    for i, b in enumerate(rows[k]):
                        row[i] -= a * b
            rows.append(tuple(row))
        return tuple(rows)

    def expand(self, p: Poly) -> list:
        """Coefficients of ``p`` in this family."""
        if p.degree > self.cap:
            raise DomainError(f"degree {p.degree} exceeds basis cap {self.cap}")
        out = [Fraction(0)] * (p.degree + 1)
        for n, a in enumerate(p.coeffs):
            if a:
                for i, b in enumerate(self.from_monomial[n]):
                    out[i] += a * b
        return out

    def combine(self, coeffs: Sequence[Scalar]) -> Poly:
        """``sum_n coeffs[n] * polys[n]``."""
        if len(coeffs) > len(self.polys):
            raise DomainError(f"{len(coeffs)} coefficients exceed basis cap {self.cap}")
        out = Poly()
        for a, p in zip(coeffs, self.polys):
            if a:
                out = out + p * Fraction(a)
        return out


@lru_cache(maxsize=256)
def charlier_recurrence(params: ModelParams, cap: int) -> OrthogonalBasis:
    """``z c_n = c_{n+1} + (alpha n + sigma/alpha) c_n + sigma n c_{n-1}``, ``c_0 = 1``."""
    alpha, sigma, shift = params.alpha, params.sigma, params.shift
    z = Poly([0, 1])
    polys = [Poly([1])]
    prev = Poly()
    for n in range(cap):
        cur = polys[-1]
        nxt = z * cur - cur * (alpha * n + shift) - prev * (sigma * n)
        prev = cur
        polys.append(nxt)
    return OrthogonalBasis("charlier", params, tuple(polys))


def charlier_explicit(params: ModelParams, n: int) -> Poly:
    """``c_n = sum_k C(n,k) (-sigma/alpha)**(n-k) (z | alpha)_k``."""
    h = -params.shift
    out = Poly()
    for k in range(n + 1):
        out = out + generalized_factorial(k, params.alpha) * (comb(n, k) * h ** (n - k))
    return out


def charlier_expanded(params: ModelParams, n: int) -> Poly:
    """Monomial coefficients of ``c_n`` written out through Stirling numbers of the first kind."""
    alpha, sigma = params.alpha, params.sigma
    coeffs = [(-params.shift) ** n]
    for i in range(1, n + 1):
        coeffs.append(
            sum(
                (
                    comb(n, k) * stirling_first(n - k, i) * alpha ** (n - 2 * k - i)
                    * (-1) ** k * sigma**k
                    for k in range(n - i + 1)
                ),
                Fraction(0),
            )
        )
    return Poly(coeffs)


def monomial_in_charlier(params: ModelParams, n: int) -> list:
    """Coefficients ``[a_0, ..., a_n]`` with ``z**n = sum_i a_i c_i(z)``.

    ``a_0 = T_{alpha,n}(sigma/alpha)`` and, for ``i >= 1``,
    ``a_i = sum_{k=i}^n C(n,k) T_{alpha,n-k}(sigma/alpha) S(k,i) alpha**(k-i)``.
    """
    alpha, h = params.alpha, params.shift
    t_at = [touchard_scaled(j, alpha)(h) for j in range(n + 1)]
    out = [t_at[n]]
    for i in range(1, n + 1):
        out.append(
            sum(
                (comb(n, k) * t_at[n - k] * stirling_second(k, i) * alpha ** (k - i)
                 for k in range(i, n + 1)),
                Fraction(0),
            )
        )
    return out


def _positive_sigma(sigma) -> Fraction:
    sigma = Fraction(sigma)
    if sigma <= 0:
        raise DomainError(f"sigma must be positive, got {sigma}")
    return sigma


@lru_cache(maxsize=256)
def hermite_recurrence(sigma: Scalar, cap: int) -> OrthogonalBasis:
    """Monic Hermite polynomials for variance ``sigma``: ``z h_n = h_{n+1} + sigma n h_{n-1}``."""
    sigma = _positive_sigma(sigma)
    z = Poly([0, 1])
    polys = [Poly([1])]
    prev = Poly()
    for n in range(cap):
        cur = polys[-1]
        polys.append(z * cur - prev * (sigma * n))
        prev = cur
    return OrthogonalBasis("hermite", sigma, tuple(polys))


def hermite_tilde(sigma: Scalar, n: int) -> Poly:
    """``sum_k C(n,k) z**(n-k) m_k``, with ``m_k`` the Gaussian moments (variance sigma)."""
    sigma = _positive_sigma(sigma)
    coeffs = [Fraction(0)] * (n + 1)
    for k in range(n + 1):
        coeffs[n - k] = comb(n, k) * gaussian_moment(k, sigma)
    return Poly(coeffs)


def hermite_tilde_twist(h_n: Poly) -> Poly:
    """``i**n h_n(-i z)`` for a polynomial of definite parity.

    Coefficient ``k`` picks up ``i**(n-k)``; for Hermite polynomials ``n - k`` is
    even on every nonzero coefficient, so the factor is ``(-1)**((n-k)/2)``.
    """
    n = h_n.degree
    coeffs = []
    for k, a in enumerate(h_n.coeffs):
        if a and (n - k) % 2:
            raise DomainError("twist is only rational for polynomials of definite parity")
        coeffs.append(a * (-1) ** ((n - k) // 2))
    return Poly(coeffs)


# Exponential generating functions: each entry maps (params, order) to (A(t), B(t))
# with sum_n p_n(z) t^n/n! = A(t) exp(z B(t)).
def _gf_charlier(params, order):
    a = TruncatedSeries([0, -params.shift], order).exp()
    return a, log1p_scaled(params.alpha, order)


def _gf_hermite(sigma, order):
    return TruncatedSeries([0, 0, -Fraction(sigma) / 2], order).exp(), TruncatedSeries([0, 1], order)


def _gf_hermite_tilde(sigma, order):
    return TruncatedSeries([0, 0, Fraction(sigma) / 2], order).exp(), TruncatedSeries([0, 1], order)


_GENERATING = {
    "charlier": _gf_charlier,
    "hermite": _gf_hermite,
    "hermite-tilde": _gf_hermite_tilde,
}


@dataclass(frozen=True)
class GeneratingFunctionReport:
    family: str
    order: int
    passed: bool
    mismatches: tuple

    def __bool__(self) -> bool:
        return self.passed


def generating_function_polys(family: str, params, order: int) -> list:
    """Expand the generating function into exact polynomials ``p_0..p_order``.

    ``z`` is instantiated at the nodes ``0..order``, each instance is a scalar
    series, and the coefficient of ``t**n / n!`` is interpolated back to a
    polynomial of degree ``<= order``.
    """
    try:
        build = _GENERATING[family]
    except KeyError:
        raise DomainError(f"no generating function for family {family!r}") from None
    a, b = build(params, order)
    nodes = list(range(order + 1))
    columns = []
    for x in nodes:
        series = a * (b * x).exp()
        columns.append([series[n] * factorial(n) for n in range(order + 1)])
    return [interpolate(nodes, [col[n] for col in columns]) for n in range(order + 1)]


def generating_function_check(family: str, params, order: int) -> GeneratingFunctionReport:
    """Compare the recurrence-built family with its generating function through ``order``."""
    if family == "charlier":
        polys = charlier_recurrence(params, order).polys
    elif family == "hermite":
        polys = hermite_recurrence(params, order).polys
    elif family == "hermite-tilde":
        polys = tuple(hermite_tilde(params, n) for n in range(order + 1))
    else:
        raise DomainError(f"no generating function for family {family!r}")
    expanded = generating_function_polys(family, params, order)
    bad = tuple(n for n, (p, q) in enumerate(zip(polys, expanded)) if p != q)
    return GeneratingFunctionReport(family, order, not bad, bad)
