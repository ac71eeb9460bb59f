"""Linear operators on polynomials, stored as exact images of monomials.

A :class:`PolyOperator` knows the images of ``1, z, ..., z**cap`` and a declared
degree growth ``g`` (``deg A z**n <= n + g``). Composition checks that the left
factor knows enough monomials to absorb the growth of the right factor, so a
too-small cap surfaces as :class:`CapError` instead of a silently wrong result.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial
from typing import Optional, Sequence

from .algebra import DomainError, Poly, Scalar
from .combinatorics import generalized_factorial, stirling_second, touchard_scaled
from .params import ModelParams


class CapError(ValueError):
    """An operator was applied or composed beyond the monomials it stores."""


class PolyOperator:
    __slots__ = ("images", "growth")

    def __init__(self, images: Sequence[Poly], growth: int = 0):
        if growth < 0:
            raise DomainError("degree growth must be non-negative")
        images = tuple(images)
        if not images:
            raise DomainError("an operator needs at least the image of 1")
        for n, p in enumerate(images):
            if p.degree > n + growth:
                raise DomainError(
                    f"image of z^{n} has degree {p.degree} > {n} + declared growth {growth}"
                )
        self.images = images
        self.growth = growth

    @property
    def cap(self) -> int:
        return len(self.images) - 1

    def __repr__(self) -> str:
        return f"PolyOperator(cap={self.cap}, growth={self.growth})"

    def __eq__(self, other) -> bool:
        # growth is a declared bound, not part of the operator's identity
        if not isinstance(other, PolyOperator):
            return NotImplemented
        return self.images == other.images

    def __hash__(self) -> int:
        return hash(self.images)

    def __call__(self, p: Poly) -> Poly:
        if p.degree > self.cap:
            raise CapError(f"degree {p.degree} exceeds operator cap {self.cap}")
        out = Poly()
        for k, a in enumerate(p.coeffs):
            if a:
                out = out + self.images[k] * a
        return out

    def restrict(self, cap: int) -> "PolyOperator":
        if cap > self.cap:
            raise CapError(f"cannot restrict cap {self.cap} up to {cap}")
        if cap < 0:
            raise CapError("cap must be non-negative")
        return PolyOperator(self.images[: cap + 1], self.growth)

    def __matmul__(self, other: "PolyOperator") -> "PolyOperator":
        if not isinstance(other, PolyOperator):
            return NotImplemented
        need = other.cap + other.growth
        if self.cap < need:
            raise CapError(
                f"left factor needs cap >= {need} (right cap {other.cap} + growth "
                f"{other.growth}); has {self.cap}"
            )
        return PolyOperator([self(p) for p in other.images], self.growth + other.growth)

    def _common(self, other: "PolyOperator"):
        cap = min(self.cap, other.cap)
        return self.restrict(cap), other.restrict(cap)

    def __add__(self, other) -> "PolyOperator":
        if isinstance(other, (int, Fraction)):
            other = identity(self.cap) * other
        if not isinstance(other, PolyOperator):
            return NotImplemented
        a, b = self._common(other)
        return PolyOperator([p + q for p, q in zip(a.images, b.images)], max(a.growth, b.growth))

    __radd__ = __add__

    def __neg__(self) -> "PolyOperator":
        return PolyOperator([-p for p in self.images], self.growth)

    def __sub__(self, other) -> "PolyOperator":
        if isinstance(other, (int, Fraction)):
            other = identity(self.cap) * other
        if not isinstance(other, PolyOperator):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "PolyOperator":
        return (-self) + other

    def __mul__(self, s) -> "PolyOperator":
        if not isinstance(s, (int, Fraction)):
            return NotImplemented
        return PolyOperator([p * s for p in self.images], self.growth)

    __rmul__ = __mul__

    def __truediv__(self, s: Scalar) -> "PolyOperator":
        s = Fraction(s)
        if s == 0:
            raise ZeroDivisionError("operator division by zero")
        return PolyOperator([p / s for p in self.images], self.growth)

    def power(self, n: int, cap: int) -> "PolyOperator":
        """``self**n`` on monomials up to ``cap`` (needs ``self.cap >= cap + (n-1) g``)."""
        if n < 0:
            raise DomainError("negative operator power")
        if n == 0:
            return identity(cap)
        out = self.restrict(cap)
        for _ in range(n - 1):
            out = self @ out
        return out

    def first_discrepancy(self, other: "PolyOperator") -> Optional[int]:
        """Smallest ``n`` where the images of ``z**n`` differ, or ``None``."""
        if self.cap != other.cap:
            return min(self.cap, other.cap) + 1
        for n, (p, q) in enumerate(zip(self.images, other.images)):
            if p != q:
                return n
        return None


def identity(cap: int) -> PolyOperator:
    return PolyOperator([Poly.monomial(n) for n in range(cap + 1)], 0)


def zero_operator(cap: int) -> PolyOperator:
    return PolyOperator([Poly()] * (cap + 1), 0)


def op_diff(cap: int) -> PolyOperator:
    """Differentiation ``D z**n = n z**(n-1)``."""
    return PolyOperator([Poly.monomial(n - 1, n) if n else Poly() for n in range(cap + 1)], 0)


def op_mulz(cap: int) -> PolyOperator:
    """Multiplication by the variable."""
    return PolyOperator([Poly.monomial(n + 1) for n in range(cap + 1)], 1)


def op_shift(h: Scalar, cap: int) -> PolyOperator:
    """``(E_h p)(z) = p(z + h)`` by binomial expansion."""
    h = Fraction(h)
    return PolyOperator(
        [Poly(comb(n, k) * h ** (n - k) for k in range(n + 1)) for n in range(cap + 1)], 0
    )


def op_shift_boole(h: Scalar, cap: int) -> PolyOperator:
    """``sum_k h**k D**k / k!``, which equals the shift on polynomials of degree <= cap."""
    h = Fraction(h)
    d = op_diff(cap)
    term = identity(cap)
    out = identity(cap)
    for k in range(1, cap + 1):
        term = d @ term
        out = out + term * (h**k / factorial(k))
    return out


def op_compose(a: PolyOperator, b: PolyOperator) -> PolyOperator:
    return a @ b


def op_commutator(a: PolyOperator, b: PolyOperator) -> PolyOperator:
    """``AB - BA`` on the largest cap where both products are defined."""
    cap = min(a.cap - b.growth, b.cap - a.growth)
    if cap < 0:
        raise CapError(f"no common cap for commutator of {a!r} and {b!r}")
    return a @ b.restrict(cap) - b @ a.restrict(cap)


def op_umbral_touchard(params: ModelParams, cap: int) -> PolyOperator:
    """Umbral operator ``z**n -> T_{alpha,n}(z)``."""
    return PolyOperator([touchard_scaled(n, params.alpha) for n in range(cap + 1)], 0)


def op_umbral_factorial(params: ModelParams, cap: int) -> PolyOperator:
    """Umbral operator ``z**n -> (z | alpha)_n``, inverse of the Touchard one."""
    return PolyOperator([generalized_factorial(n, params.alpha) for n in range(cap + 1)], 0)


def op_sheffer_S(params: ModelParams, cap: int, route: str = "direct") -> PolyOperator:
    """The transform restricted to polynomials: ``z**n -> T_{alpha,n}(z + sigma/alpha)``.

    ``route="factored"`` builds it as the shift by ``sigma/alpha`` after the
    Touchard umbral operator instead; both routes give the same images.
    """
    if route == "direct":
        h = params.shift
        return PolyOperator(
            [touchard_scaled(n, params.alpha).shift(h) for n in range(cap + 1)], 0
        )
    if route == "factored":
        return op_shift(params.shift, cap) @ op_umbral_touchard(params, cap)
    raise DomainError(f"unknown route {route!r}")


def op_sheffer_S_inv(params: ModelParams, cap: int) -> PolyOperator:
    """Inverse transform on polynomials, ``z**n -> c_n(z)``, as ``F_alpha E_{-sigma/alpha}``."""
    return op_umbral_factorial(params, cap) @ op_shift(-params.shift, cap)


def op_weyl_pair(params: ModelParams, cap: int):
    """``(U, V)`` with ``U = Z + sigma/alpha`` and ``V = alpha D + 1``; ``[V, U] = alpha``."""
    u = op_mulz(cap) + identity(cap) * params.shift
    v = op_diff(cap) * params.alpha + identity(cap)
    return u, v


def op_rho(params: ModelParams, cap: int) -> PolyOperator:
    """``rho = U V``, the image of multiplication by ``z`` under the transform."""
    u, v = op_weyl_pair(params, cap)
    return u @ v


@dataclass(frozen=True)
class KatrielReport:
    n: int
    degree: int
    passed: bool
    first_discrepancy: Optional[int]

    def __bool__(self) -> bool:
        return self.passed


def katriel_check(params: ModelParams, n: int, cap: int) -> KatrielReport:
    """Compare ``(UV)**n`` with ``sum_k S(n,k) alpha**(n-k) U**k V**k`` exactly.

    ``U`` and ``V`` are built on ``cap`` monomials; both sides are compared on
    the working degree ``cap - n`` that survives ``n`` factors of growth one.
    """
    if n < 1:
        raise DomainError("Katriel identity needs n >= 1")
    degree = cap - n
    if degree < 0:
        raise CapError(f"cap {cap} too small for n = {n}; need cap >= n")
    u, v = op_weyl_pair(params, cap)
    rho = u @ v.restrict(cap - 1)
    lhs = rho.power(n, degree)
    rhs = zero_operator(degree)
    alpha = params.alpha
    for k in range(1, n + 1):
        vk = v.power(k, degree)
        uk_vk = vk
        for _ in range(k):
            uk_vk = u @ uk_vk
        rhs = rhs + uk_vk * (stirling_second(n, k) * alpha ** (n - k))
    bad = lhs.first_discrepancy(rhs)
    return KatrielReport(n=n, degree=degree, passed=bad is None, first_discrepancy=bad)


def op_lowering_charlier(params: ModelParams, cap: int) -> PolyOperator:
    """``(E_alpha - 1) / alpha``, which lowers ``c_n`` to ``n c_{n-1}``."""
    return (op_shift(params.alpha, cap) - identity(cap)) / params.alpha


def op_raising_charlier(params: ModelParams, cap: int) -> PolyOperator:
    """Raising operator ``c_n -> c_{n+1}`` through the Charlier basis."""
    from .orthogonal import charlier_recurrence

    basis = charlier_recurrence(params, cap + 1)
    images = []
    for n in range(cap + 1):
        coeffs = basis.from_monomial[n]
        images.append(basis.combine([0] + list(coeffs)))
    return PolyOperator(images, 1)
