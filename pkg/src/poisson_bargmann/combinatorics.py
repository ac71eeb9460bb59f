"""Stirling numbers, factorial-type polynomials, Touchard polynomials and moments."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import prod

from .algebra import DomainError, Poly, Scalar
from .params import ModelParams

DEFAULT_CAP = 32


@dataclass(frozen=True)
class StirlingTable:
    """Triangular table of Stirling numbers for ``0 <= k <= n <= cap``.

    ``kind="first"`` holds the signed numbers ``s(n, k)`` expanding falling
    factorials into powers; ``kind="second"`` holds ``S(n, k)`` expanding powers
    into falling factorials.
    """

    kind: str
    cap: int
    values: tuple

    @classmethod
    def build(cls, kind: str, cap: int) -> "StirlingTable":
        if kind not in ("first", "second"):
            raise DomainError(f"unknown Stirling kind {kind!r}")
        if cap < 0:
            raise DomainError("cap must be non-negative")
        rows = [[1]]
        for n in range(1, cap + 1):
            prev = rows[-1]
            row = [0] * (n + 1)
            for k in range(1, n + 1):
                left = prev[k - 1]
                right = prev[k] if k < n else 0
                if kind == "second":
                    row[k] = k * right + left
                else:
                    row[k] = left - (n - 1) * right
            rows.append(row)
        return cls(kind, cap, tuple(tuple(r) for r in rows))

    def __call__(self, n: int, k: int) -> int:
        if not (0 <= k <= n <= self.cap):
            raise DomainError(f"Stirling index ({n}, {k}) outside 0 <= k <= n <= {self.cap}")
        return self.values[n][k]

    def row(self, n: int) -> tuple:
        if not 0 <= n <= self.cap:
            raise DomainError(f"row {n} outside table of cap {self.cap}")
        return self.values[n]


@lru_cache(maxsize=None)
def stirling_table(kind: str, cap: int = DEFAULT_CAP) -> StirlingTable:
    return StirlingTable.build(kind, cap)


def _table_for(kind: str, n: int) -> StirlingTable:
    # grow in blocks so repeated calls share a handful of cached tables
    cap = DEFAULT_CAP
    while cap < n:
        cap *= 2
    return stirling_table(kind, cap)


def stirling_first(n: int, k: int) -> int:
    """Signed Stirling number of the first kind ``s(n, k)``."""
    if n < 0 or k < 0 or k > n:
        raise DomainError(f"s({n}, {k}) needs 0 <= k <= n")
    return _table_for("first", n)(n, k)


def stirling_second(n: int, k: int) -> int:
    """Stirling number of the second kind ``S(n, k)``."""
    if n < 0 or k < 0 or k > n:
        raise DomainError(f"S({n}, {k}) needs 0 <= k <= n")
    return _table_for("second", n)(n, k)


def _check_degree(n: int):
    if n < 0:
        raise DomainError(f"degree must be non-negative, got {n}")


def _check_alpha(alpha) -> Fraction:
    alpha = Fraction(alpha)
    if alpha <= 0:
        raise DomainError(f"alpha must be positive, got {alpha}")
    return alpha


def falling_factorial(n: int) -> Poly:
    """``(z)_n = z (z - 1) ... (z - n + 1)``, with ``(z)_0 = 1``."""
    _check_degree(n)
    return Poly(_table_for("first", n).row(n))


def generalized_factorial(n: int, alpha: Scalar) -> Poly:
    """``(z | alpha)_n = z (z - alpha) ... (z - (n - 1) alpha)`` as a direct product."""
    _check_degree(n)
    alpha = _check_alpha(alpha)
    return prod((Poly([-j * alpha, 1]) for j in range(n)), start=Poly([1]))


def touchard(n: int) -> Poly:
    """Touchard polynomial ``T_n(z) = sum_k S(n, k) z**k``."""
    _check_degree(n)
    return Poly(_table_for("second", n).row(n))


def touchard_scaled(n: int, alpha: Scalar) -> Poly:
    """``T_{alpha,n}(z) = sum_k S(n, k) alpha**(n-k) z**k = alpha**n T_n(z / alpha)``."""
    _check_degree(n)
    alpha = _check_alpha(alpha)
    row = _table_for("second", n).row(n)
    return Poly(S * alpha ** (n - k) for k, S in enumerate(row))


def poisson_type_moment(m: int, params: ModelParams) -> Fraction:
    """Raw moment ``E[X**m]`` of the lattice Poisson measure, exactly.

    The atom index is Poisson with mean ``sigma / alpha**2`` and ``X = alpha N``,
    so the moment is ``alpha**m T_m(sigma / alpha**2)``.
    """
    _check_degree(m)
    return params.alpha**m * touchard(m)(params.intensity)


@lru_cache(maxsize=None)
def _double_factorial_odd(k: int) -> int:
    return prod(range(1, 2 * k, 2))


def gaussian_moment(m: int, sigma: Scalar) -> Fraction:
    """``E[X**m]`` for ``X ~ N(0, sigma)``: zero for odd m, ``(2k-1)!! sigma**k`` for m = 2k."""
    _check_degree(m)
    sigma = Fraction(sigma)
    if sigma <= 0:
        raise DomainError(f"sigma must be positive, got {sigma}")
    if m % 2:
        return Fraction(0)
    return _double_factorial_odd(m // 2) * sigma ** (m // 2)
