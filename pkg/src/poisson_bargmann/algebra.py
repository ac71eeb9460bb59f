"""Exact rational polynomials and truncated formal power series.

Coefficients are :class:`fractions.Fraction` throughout; floating point only
enters when a polynomial is evaluated at a complex point.
"""
from __future__ import annotations

import cmath
from fractions import Fraction
from numbers import Rational
from typing import Iterable, Sequence, Union

Scalar = Union[int, Fraction]


class DomainError(ValueError):
    """An argument lies outside the domain of an operation."""


def parse_rational(value) -> Fraction:
    """Convert ``value`` to an exact rational.

    Accepts ints, Fractions and strings such as ``"3/4"``, ``"-2"`` or
    ``"0.25"`` (decimals are converted exactly, so ``"0.1"`` is ``1/10``).
    Floats are rejected: their binary expansion is rarely what was meant.
    """
    if isinstance(value, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(value, Rational):
        return Fraction(value)
    if isinstance(value, str):
        text = value.strip().replace(" ", "")
        if not text:
            raise ValueError("empty rational literal")
        try:
            return Fraction(text)
        except (ValueError, ZeroDivisionError) as exc:
            raise ValueError(f"invalid rational literal {value!r}") from exc
    raise TypeError(f"cannot interpret {type(value).__name__} as an exact rational")


def format_rational(x: Fraction) -> str:
    """``"p/q"`` with the denominator always present."""
    return f"{x.numerator}/{x.denominator}"


def _finite(z: complex) -> complex:
    if not (cmath.isfinite(z)):
        raise OverflowError(f"non-finite result {z!r}")
    return z


class Poly:
    """Polynomial in one variable with exact rational coefficients.

    ``coeffs[k]`` is the coefficient of ``z**k``; trailing zeros are trimmed so
    the zero polynomial has an empty coefficient tuple. Instances are
    immutable and hashable.
    """

    __slots__ = ("_c",)

    def __init__(self, coeffs: Iterable[Scalar] = ()):
        c = [Fraction(a) for a in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self._c = tuple(c)

    @classmethod
    def monomial(cls, n: int, coeff: Scalar = 1) -> "Poly":
        return cls([0] * n + [coeff])

    @classmethod
    def constant(cls, c: Scalar) -> "Poly":
        return cls([c])

    @property
    def coeffs(self) -> tuple:
        return self._c

    @property
    def degree(self) -> int:
        """Degree, with ``-1`` for the zero polynomial."""
        return len(self._c) - 1

    def coeff(self, k: int) -> Fraction:
        return self._c[k] if 0 <= k < len(self._c) else Fraction(0)

    def is_monic(self) -> bool:
        return bool(self._c) and self._c[-1] == 1

    def __bool__(self) -> bool:
        return bool(self._c)

    def __eq__(self, other) -> bool:
        if isinstance(other, Poly):
            return self._c == other._c
        if isinstance(other, (int, Fraction)):
            return self._c == Poly([other])._c
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self._c)

    def __repr__(self) -> str:
        return f"Poly({[str(a) for a in self._c]})"

    def __str__(self) -> str:
        if not self._c:
            return "0"
        parts = []
        for k in range(len(self._c) - 1, -1, -1):
            a = self._c[k]
            if a == 0:
                continue
            mono = "" if k == 0 else ("z" if k == 1 else f"z^{k}")
            if mono and abs(a) == 1:
                body = mono
            else:
                body = f"{abs(a)}" + (f"*{mono}" if mono else "")
            sign = "-" if a < 0 else "+"
            parts.append((sign, body))
        head_sign, head = parts[0]
        out = ("-" if head_sign == "-" else "") + head
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out

    def __neg__(self) -> "Poly":
        return Poly(-a for a in self._c)

    def __add__(self, other) -> "Poly":
        if isinstance(other, (int, Fraction)):
            other = Poly([other])
        if not isinstance(other, Poly):
            return NotImplemented
        a, b = self._c, other._c
        if len(a) < len(b):
            a, b = b, a
        return Poly([x + (b[i] if i < len(b) else 0) for i, x in enumerate(a)])

    __radd__ = __add__

    def __sub__(self, other) -> "Poly":
        if isinstance(other, (int, Fraction)):
            other = Poly([other])
        if not isinstance(other, Poly):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "Poly":
        return (-self) + other

    def __mul__(self, other) -> "Poly":
        if isinstance(other, (int, Fraction)):
            return Poly(a * other for a in self._c)
        if not isinstance(other, Poly):
            return NotImplemented
        if not self._c or not other._c:
            return Poly()
        out = [Fraction(0)] * (len(self._c) + len(other._c) - 1)
        for i, a in enumerate(self._c):
            if a == 0:
                continue
            for j, b in enumerate(other._c):
                out[i + j] += a * b
        return Poly(out)

    __rmul__ = __mul__

    def __truediv__(self, s: Scalar) -> "Poly":
        s = Fraction(s)
        if s == 0:
            raise ZeroDivisionError("polynomial division by zero scalar")
        return Poly(a / s for a in self._c)

    def __pow__(self, n: int) -> "Poly":
        if n < 0:
            raise DomainError("negative polynomial power")
        out, base = Poly([1]), self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __call__(self, x):
        """Exact Horner evaluation at a rational (or any ring element)."""
        acc = Fraction(0) if isinstance(x, (int, Fraction)) else 0
        for a in reversed(self._c):
            acc = acc * x + a
        return acc

    def eval_complex(self, z: complex) -> complex:
        """Horner evaluation in double precision."""
        z = complex(z)
        acc = 0j
        for a in reversed(self._c):
            acc = acc * z + float(a)
        return _finite(acc)

    def derivative(self) -> "Poly":
        return Poly(k * a for k, a in enumerate(self._c) if k)

    def compose(self, other: "Poly") -> "Poly":
        """``self(other(z))``."""
        acc = Poly()
        for a in reversed(self._c):
            acc = acc * other + a
        return acc

    def shift(self, h: Scalar) -> "Poly":
        """``p(z + h)``."""
        return self.compose(Poly([h, 1]))


def poly_eval_exact(p: Poly, x: Scalar) -> Fraction:
    return Fraction(p(Fraction(x)))


def poly_eval_complex(p: Poly, z: complex) -> complex:
    return p.eval_complex(z)


def interpolate(nodes: Sequence[Scalar], values: Sequence[Scalar]) -> Poly:
    """Exact Lagrange interpolation through ``(nodes[i], values[i])``."""
    if len(nodes) != len(values):
        raise ValueError("nodes and values differ in length")
    xs = [Fraction(x) for x in nodes]
    if len(set(xs)) != len(xs):
        raise DomainError("interpolation nodes must be distinct")
    out = Poly()
    for i, (xi, yi) in enumerate(zip(xs, values)):
        if yi == 0:
            continue
        basis = Poly([1])
        denom = Fraction(1)
        for j, xj in enumerate(xs):
            if j != i:
                basis = basis * Poly([-xj, 1])
                denom *= xi - xj
        out = out + basis * (Fraction(yi) / denom)
    return out


class TruncatedSeries:
    """Formal power series in ``t`` known through ``t**order``.

    Binary operations truncate to the smaller order of the two operands.
    """

    __slots__ = ("_c", "_order")

    def __init__(self, coeffs: Iterable[Scalar], order: int):
        if order < 0:
            raise DomainError("series order must be non-negative")
        c = [Fraction(a) for a in coeffs][: order + 1]
        c += [Fraction(0)] * (order + 1 - len(c))
        self._c = tuple(c)
        self._order = order

    @classmethod
    def variable(cls, order: int) -> "TruncatedSeries":
        return cls([0, 1], order)

    @classmethod
    def from_poly(cls, p: Poly, order: int) -> "TruncatedSeries":
        return cls(p.coeffs, order)

    @property
    def order(self) -> int:
        return self._order

    @property
    def coeffs(self) -> tuple:
        return self._c

    def __getitem__(self, k: int) -> Fraction:
        return self._c[k]

    def __eq__(self, other) -> bool:
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self._order == other._order and self._c == other._c

    def __hash__(self) -> int:
        return hash((self._c, self._order))

    def __repr__(self) -> str:
        return f"TruncatedSeries({[str(a) for a in self._c]}, order={self._order})"

    def truncate(self, order: int) -> "TruncatedSeries":
        if order > self._order:
            raise DomainError(f"cannot raise order {self._order} to {order}")
        return TruncatedSeries(self._c, order)

    def _coerce(self, other) -> "TruncatedSeries":
        if isinstance(other, TruncatedSeries):
            return other
        if isinstance(other, (int, Fraction)):
            return TruncatedSeries([other], self._order)
        return NotImplemented

    def __add__(self, other) -> "TruncatedSeries":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        n = min(self._order, other._order)
        return TruncatedSeries((self._c[k] + other._c[k] for k in range(n + 1)), n)

    __radd__ = __add__

    def __neg__(self) -> "TruncatedSeries":
        return TruncatedSeries((-a for a in self._c), self._order)

    def __sub__(self, other) -> "TruncatedSeries":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other) -> "TruncatedSeries":
        return (-self) + other

    def __mul__(self, other) -> "TruncatedSeries":
        if isinstance(other, (int, Fraction)):
            return TruncatedSeries((a * other for a in self._c), self._order)
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        n = min(self._order, other._order)
        a, b = self._c, other._c
        return TruncatedSeries(
            (sum((a[i] * b[k - i] for i in range(k + 1)), Fraction(0)) for k in range(n + 1)),
            n,
        )

    __rmul__ = __mul__

    def __truediv__(self, s: Scalar) -> "TruncatedSeries":
        return self * (1 / Fraction(s))

    def reciprocal(self) -> "TruncatedSeries":
        a = self._c
        if a[0] == 0:
            raise DomainError("reciprocal needs a nonzero constant term")
        b = [1 / a[0]]
        for k in range(1, self._order + 1):
            b.append(-sum((a[i] * b[k - i] for i in range(1, k + 1)), Fraction(0)) / a[0])
        return TruncatedSeries(b, self._order)

    def derivative(self) -> "TruncatedSeries":
        """Term-wise derivative; the order drops by one (floor at zero)."""
        n = max(self._order - 1, 0)
        return TruncatedSeries((k * self._c[k] for k in range(1, self._order + 1)), n)

    def exp(self) -> "TruncatedSeries":
        """``exp(A)`` for ``A(0) = 0`` via ``n e_n = sum_k k a_k e_{n-k}``."""
        a = self._c
        if a[0] != 0:
            raise DomainError("series exp requires a zero constant term")
        e = [Fraction(1)]
        for n in range(1, self._order + 1):
            e.append(sum((k * a[k] * e[n - k] for k in range(1, n + 1)), Fraction(0)) / n)
        return TruncatedSeries(e, self._order)

    def log(self) -> "TruncatedSeries":
        """``log(A)`` for ``A(0) = 1`` via ``n a_n = sum_k k l_k a_{n-k}``."""
        a = self._c
        if a[0] != 1:
            raise DomainError("series log requires constant term 1")
        lg = [Fraction(0)]
        for n in range(1, self._order + 1):
            s = sum((k * lg[k] * a[n - k] for k in range(1, n)), Fraction(0))
            lg.append(a[n] - s / n)
        return TruncatedSeries(lg, self._order)

    def compose(self, inner: "TruncatedSeries") -> "TruncatedSeries":
        """``self(inner(t))``; ``inner`` must have zero constant term."""
        if inner._c[0] != 0:
            raise DomainError("composition requires inner series with zero constant term")
        n = min(self._order, inner._order)
        inner = inner.truncate(n)
        acc = TruncatedSeries([self._c[n]], n)
        for k in range(n - 1, -1, -1):
            acc = acc * inner + self._c[k]
        return acc

    def reversion(self) -> "TruncatedSeries":
        """Compositional inverse ``C`` with ``self(C(t)) = t``.

        Solved order by order: once ``C`` is right through ``t**(n-1)``, the
        ``t**n`` coefficient of ``self(C)`` is off by ``b_1 * delta``.
        """
        b = self._c
        if b[0] != 0:
            raise DomainError("reversion requires a zero constant term")
        if self._order < 1 or b[1] == 0:
            raise DomainError("reversion requires a nonzero linear coefficient")
        n = self._order
        c = [Fraction(0), 1 / b[1]] + [Fraction(0)] * (n - 1)
        for k in range(2, n + 1):
            partial = self.truncate(k).compose(TruncatedSeries(c, k))
            c[k] = -partial[k] / b[1]
        return TruncatedSeries(c, n)


def series_exp(a: TruncatedSeries) -> TruncatedSeries:
    return a.exp()


def series_log(a: TruncatedSeries) -> TruncatedSeries:
    return a.log()


def series_compose(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    return a.compose(b)


def series_reversion(b: TruncatedSeries) -> TruncatedSeries:
    return b.reversion()


def log1p_scaled(alpha: Scalar, order: int) -> TruncatedSeries:
    """``log(1 + alpha t) / alpha``, the exponent of the generalized factorials."""
    alpha = Fraction(alpha)
    return TruncatedSeries(
        [0] + [(-1) ** (k + 1) * alpha ** (k - 1) / k for k in range(1, order + 1)], order
    )


def expm1_scaled(alpha: Scalar, order: int) -> TruncatedSeries:
    """``(exp(alpha t) - 1) / alpha``, the exponent of the scaled Touchard sequence."""
    alpha = Fraction(alpha)
    coeffs = [Fraction(0)]
    fact = 1
    for k in range(1, order + 1):
        fact *= k
        coeffs.append(alpha ** (k - 1) / fact)
    return TruncatedSeries(coeffs, order)
