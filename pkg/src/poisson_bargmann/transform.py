"""The lattice Poisson measure, its Segal-Bargmann transform, and the Gaussian analogue.

Exact routes (polynomials, inner products via moments) return Fractions.
Numeric routes (evaluation at complex points, quadrature) return Python
complex numbers in double precision.
"""
from __future__ import annotations

import cmath
import json
import math
import re
from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial
from typing import Callable, Optional, Sequence, Union

import numpy as np
from scipy.special import roots_laguerre

from .algebra import DomainError, Poly, Scalar
from .combinatorics import gaussian_moment, poisson_type_moment
from .operators import PolyOperator, op_lowering_charlier, op_sheffer_S
from .orthogonal import charlier_recurrence, hermite_recurrence, hermite_tilde
from .params import ModelParams

RELATIVE_STOP = 1e-14


@dataclass(frozen=True)
class PoissonTypeMeasure:
    """Weights ``exp(-lam) lam**n / n!`` at the atoms ``alpha n``, ``lam = sigma / alpha**2``."""

    params: ModelParams

    @property
    def intensity(self) -> Fraction:
        return self.params.intensity

    @property
    def spacing(self) -> Fraction:
        return self.params.alpha

    def atom(self, n: int) -> Fraction:
        return self.params.alpha * n

    def weight_exact(self, n: int) -> Fraction:
        """``lam**n / n!``; the common factor ``exp(-lam)`` is left out."""
        return self.intensity**n / factorial(n)

    def weight(self, n: int) -> float:
        lam = float(self.intensity)
        return math.exp(-lam + n * math.log(lam) - math.lgamma(n + 1))

    def moment(self, m: int) -> Fraction:
        return poisson_type_moment(m, self.params)

    @property
    def mean(self) -> Fraction:
        return self.moment(1)

    @property
    def variance(self) -> Fraction:
        return self.moment(2) - self.moment(1) ** 2

    def tail_bound(self, m: int) -> float:
        """Bound on the mass beyond atom ``m``: ``2 weight(m)`` once ``m > 2 lam``."""
        if m <= 2 * self.intensity:
            return math.inf
        return 2 * self.weight(m)


def measure_weight(params: ModelParams, n: int):
    """``(lam**n / n!, full numeric weight)`` for the atom ``alpha n``."""
    m = PoissonTypeMeasure(params)
    return m.weight_exact(n), m.weight(n)


def inner_product_L2pi(p: Poly, q: Poly, params: ModelParams) -> Fraction:
    """Exact ``int p q dpi`` for real rational polynomials, contracted against moments."""
    if not p or not q:
        return Fraction(0)
    moments = [poisson_type_moment(m, params) for m in range(p.degree + q.degree + 1)]
    total = Fraction(0)
    for i, a in enumerate(p.coeffs):
        if a:
            for j, b in enumerate(q.coeffs):
                if b:
                    total += a * b * moments[i + j]
    return total


def inner_product_gaussian(p: Poly, q: Poly, sigma: Scalar) -> Fraction:
    """Exact ``int p q dmu_sigma`` for the centred Gaussian of variance ``sigma``."""
    if not p or not q:
        return Fraction(0)
    total = Fraction(0)
    for i, a in enumerate(p.coeffs):
        if a:
            for j, b in enumerate(q.coeffs):
                if b:
                    total += a * b * gaussian_moment(i + j, sigma)
    return total


# -- functions on the lattice and in the Bargmann space -------------------------------


@dataclass(frozen=True)
class GridFunction:
    """Samples ``values[n] = f(alpha n)`` for ``n = 0..M``; zero beyond ``M``."""

    values: tuple

    def __post_init__(self):
        vals = tuple(complex(v) for v in self.values)
        for v in vals:
            if not cmath.isfinite(v):
                raise DomainError("grid values must be finite")
        object.__setattr__(self, "values", vals)

    @property
    def support(self) -> int:
        return len(self.values) - 1

    @classmethod
    def from_poly(cls, p: Poly, params: ModelParams, m: int) -> "GridFunction":
        alpha = params.alpha
        return cls(tuple(float(p(alpha * n)) for n in range(m + 1)))

    @classmethod
    def from_callable(cls, f: Callable, params: ModelParams, m: int) -> "GridFunction":
        alpha = float(params.alpha)
        return cls(tuple(f(alpha * n) for n in range(m + 1)))


class GridFileError(ValueError):
    """Malformed grid-function file; carries the offending line number."""

    def __init__(self, message: str, line: int):
        super().__init__(f"line {line}: {message}")
        self.line = line


def _line_of(text: str, pos: int) -> int:
    return text.count("\n", 0, pos) + 1


def _value_positions(text: str) -> list:
    # start offsets of each element of the top-level "values" array
    match = re.search(r'"values"\s*:\s*\[', text)
    if not match:
        return []
    decoder = json.JSONDecoder()
    pos = match.end()
    starts = []
    while True:
        while pos < len(text) and text[pos] in " \t\r\n,":
            pos += 1
        if pos >= len(text) or text[pos] == "]":
            return starts
        starts.append(pos)
        try:
            _, pos = decoder.raw_decode(text, pos)
        except json.JSONDecodeError:
            return starts


def parse_grid_function(text: str):
    """Parse ``{"alpha": "p/q", "sigma": "p/q", "values": [[re, im], ...]}``.

    Returns ``(ModelParams, GridFunction)``. Plain numbers are accepted as real
    values. Errors raise :class:`GridFileError` naming the line.
    """
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise GridFileError(exc.msg, exc.lineno) from exc
    if not isinstance(doc, dict):
        raise GridFileError("top level must be a JSON object", 1)
    for key in ("alpha", "sigma", "values"):
        if key not in doc:
            raise GridFileError(f"missing key {key!r}", 1)
    try:
        params = ModelParams(str(doc["alpha"]), str(doc["sigma"]))
    except (ValueError, TypeError) as exc:
        line = _line_of(text, text.find('"alpha"')) if '"alpha"' in text else 1
        raise GridFileError(str(exc), line) from exc
    values = doc["values"]
    if not isinstance(values, list):
        raise GridFileError('"values" must be an array', _line_of(text, text.find('"values"')))
    positions = _value_positions(text)
    out = []
    for n, item in enumerate(values):
        line = _line_of(text, positions[n]) if n < len(positions) else 1
        if isinstance(item, (int, float)) and not isinstance(item, bool):
            z = complex(item)
        elif (
            isinstance(item, list)
            and len(item) == 2
            and all(isinstance(x, (int, float)) and not isinstance(x, bool) for x in item)
        ):
            z = complex(item[0], item[1])
        else:
            raise GridFileError(f"values[{n}] must be a number or a [re, im] pair", line)
        if not cmath.isfinite(z):
            raise GridFileError(f"values[{n}] is not finite", line)
        out.append(z)
    return params, GridFunction(tuple(out))


def dump_grid_function(f: GridFunction, params: ModelParams) -> str:
    rows = ",\n    ".join(f"[{v.real!r}, {v.imag!r}]" for v in f.values)
    return (
        "{\n"
        f'  "alpha": "{params.alpha}",\n'
        f'  "sigma": "{params.sigma}",\n'
        f'  "values": [\n    {rows}\n  ]\n'
        "}\n"
    )


@dataclass(frozen=True)
class BargmannElement:
    """Finite Taylor coefficients of an entire function in the space weighted by ``n! sigma**n``."""

    coeffs: tuple
    sigma: Fraction

    def __post_init__(self):
        object.__setattr__(self, "coeffs", tuple(complex(c) for c in self.coeffs))
        object.__setattr__(self, "sigma", Fraction(self.sigma))

    def __call__(self, z: complex) -> complex:
        acc = 0j
        for c in reversed(self.coeffs):
            acc = acc * z + c
        return acc

    def norm(self) -> float:
        return math.sqrt(bargmann_inner(self, self).real)


def bargmann_inner(f: BargmannElement, g: BargmannElement) -> complex:
    """``sum_n f_n conj(g_n) n! sigma**n``."""
    if f.sigma != g.sigma:
        raise DomainError(f"sigma mismatch: {f.sigma} vs {g.sigma}")
    s = float(f.sigma)
    return sum(
        (a * b.conjugate() * math.factorial(n) * s**n
         for n, (a, b) in enumerate(zip(f.coeffs, g.coeffs))),
        0j,
    )


def hilbertian_norm(coeffs: Sequence[complex], level: int) -> float:
    """``(sum_n |f_n|**2 (n!)**2 2**(n level))**(1/2)`` for an expansion ``sum f_n s_n``.

    Only a diagnostic: no constant relating it to the L2 norm is claimed.
    """
    return math.sqrt(
        sum(abs(c) ** 2 * math.factorial(n) ** 2 * 2.0 ** (n * level) for n, c in enumerate(coeffs))
    )


# -- coherent states --------------------------------------------------------------------


def coherent_state_charlier(params: ModelParams, n: int, z: complex) -> complex:
    """Closed form ``(1 + alpha z / sigma)**n exp(-z / alpha)`` at the atom ``alpha n``."""
    a, s = float(params.alpha), float(params.sigma)
    return (1 + a * z / s) ** n * cmath.exp(-z / a)


def coherent_state_charlier_series(
    params: ModelParams, n: int, z: complex, truncation: int = 40
) -> complex:
    """Partial sum ``sum_{k<=N} z**k / (k! sigma**k) c_k(alpha n)``."""
    basis = charlier_recurrence(params, truncation)
    x = params.alpha * n
    s = float(params.sigma)
    total = 0j
    zk = 1 + 0j
    for k, c in enumerate(basis.polys):
        total += zk / (math.factorial(k) * s**k) * float(c(x))
        zk *= z
    return total


def coherent_state_hermite(sigma: Scalar, x: complex, z: complex) -> complex:
    """Closed form ``exp(-(z**2 - 2 x z) / (2 sigma))``."""
    s = float(sigma)
    if s <= 0:
        raise DomainError("sigma must be positive")
    return cmath.exp(-(z * z - 2 * x * z) / (2 * s))


def coherent_state_hermite_series(sigma: Scalar, x: complex, z: complex, truncation: int = 40) -> complex:
    basis = hermite_recurrence(sigma, truncation)
    s = float(sigma)
    total = 0j
    zk = 1 + 0j
    for k, h in enumerate(basis.polys):
        total += zk / (math.factorial(k) * s**k) * h.eval_complex(x)
        zk *= z
    return total


# -- the transform ----------------------------------------------------------------------


@dataclass(frozen=True)
class TransformResult:
    value: complex
    tail_bound: float
    terms: int


def _transformed_intensity(params: ModelParams, z: complex) -> complex:
    a = float(params.alpha)
    return (float(params.sigma) + a * z) / (a * a)


def _poisson_tail(lam_abs: float, m: int) -> float:
    """Bound on ``sum_{n>m} lam**n / n!`` (magnitudes)."""
    if m + 1 > 2 * lam_abs:
        return 2 * math.exp((m + 1) * math.log(lam_abs) - math.lgamma(m + 2)) if lam_abs else 0.0
    return math.exp(lam_abs)


def transform_evaluate(
    f: Union[GridFunction, Callable[[float], complex]],
    params: ModelParams,
    z: complex,
    max_terms: int = 10_000,
) -> TransformResult:
    """Evaluate ``(Sf)(z) = exp(-lam') sum_n f(alpha n) lam'**n / n!``, ``lam' = (sigma + alpha z)/alpha**2``.

    A :class:`GridFunction` is summed exactly over its support; ``tail_bound``
    then reports how far the value could move if ``f`` kept its largest sampled
    magnitude beyond the grid. A callable is summed until ``n > 2|lam'|`` and
    the latest term falls below ``1e-14`` of the absolute partial sum; the ratio
    of successive weights is then below 1/2, so the remainder is bounded by
    twice the last term.
    """
    z = complex(z)
    lam = _transformed_intensity(params, z)
    lam_abs = abs(lam)
    alpha = float(params.alpha)
    prefactor = cmath.exp(-lam)
    w = 1 + 0j
    total = 0j
    if isinstance(f, GridFunction):
        peak = 0.0
        for n, v in enumerate(f.values):
            if n:
                w *= lam / n
            total += v * w
            peak = max(peak, abs(v))
        tail = abs(prefactor) * peak * _poisson_tail(lam_abs, f.support)
        return TransformResult(prefactor * total, tail, len(f.values))

    scale = 0.0
    last = math.inf
    for n in range(max_terms):
        if n:
            w *= lam / n
        term = complex(f(alpha * n)) * w
        total += term
        scale += abs(term)
        mag = abs(term)
        if n > 2 * lam_abs and mag <= last and mag < RELATIVE_STOP * scale:
            return TransformResult(prefactor * total, abs(prefactor) * 2 * mag, n + 1)
        last = mag
    raise ArithmeticError(f"transform series did not settle within {max_terms} terms")


def transform_apply(f, params: ModelParams, z: complex) -> complex:
    return transform_evaluate(f, params, z).value


def transform_apply_fixed(
    f: Callable[[float], complex], params: ModelParams, z: complex, terms: int
) -> complex:
    """Plain partial sum with a fixed number of terms (used to audit tail bounds)."""
    lam = _transformed_intensity(params, complex(z))
    alpha = float(params.alpha)
    w = 1 + 0j
    total = 0j
    for n in range(terms):
        if n:
            w *= lam / n
        total += complex(f(alpha * n)) * w
    return cmath.exp(-lam) * total


def transform_poly(p: Poly, params: ModelParams) -> Poly:
    """Exact image of a polynomial, through ``z**n -> T_{alpha,n}(z + sigma/alpha)``."""
    if not p:
        return Poly()
    return op_sheffer_S(params, p.degree)(p)


def inverse_transform_poly(q: Poly, params: ModelParams) -> Poly:
    """Exact preimage: replace ``z**n`` by ``c_n``."""
    if not q:
        return Poly()
    return charlier_recurrence(params, q.degree).combine(q.coeffs)


def inverse_transform(g: BargmannElement, params: ModelParams, m: int) -> GridFunction:
    """Coefficient route ``sum_n g_n c_n`` sampled at ``alpha k`` for ``k <= m``."""
    if g.sigma != params.sigma:
        raise DomainError("Bargmann element and model use different sigma")
    basis = charlier_recurrence(params, max(len(g.coeffs) - 1, 0))
    alpha = params.alpha
    values = []
    for k in range(m + 1):
        x = alpha * k
        values.append(sum((c * float(p(x)) for c, p in zip(g.coeffs, basis.polys)), 0j))
    return GridFunction(tuple(values))


@dataclass(frozen=True)
class UnitarityReport:
    passed: bool
    l2_side: Fraction
    bargmann_side: Fraction

    def __bool__(self) -> bool:
        return self.passed


def transform_unitarity_check(p: Poly, q: Poly, params: ModelParams) -> UnitarityReport:
    """``<p, q>_pi`` against ``sum_n a_n b_n n! sigma**n`` in the Charlier coordinates."""
    lhs = inner_product_L2pi(p, q, params)
    cap = max(p.degree, q.degree, 0)
    basis = charlier_recurrence(params, cap)
    a = basis.expand(p) if p else []
    b = basis.expand(q) if q else []
    s = params.sigma
    rhs = sum((x * y * factorial(n) * s**n for n, (x, y) in enumerate(zip(a, b))), Fraction(0))
    return UnitarityReport(lhs == rhs, lhs, rhs)


def gaussian_transform_poly(p: Poly, sigma: Scalar) -> Poly:
    """``int p(x + z) mu_sigma(dx)``: expand in ``x`` and replace ``x**k`` by its moment."""
    out = [Fraction(0)] * max(p.degree + 1, 0)
    for n, a in enumerate(p.coeffs):
        if not a:
            continue
        for k in range(n + 1):
            m = gaussian_moment(k, sigma)
            if m:
                out[n - k] += a * comb(n, k) * m
    return Poly(out)


def op_gaussian_transform(sigma: Scalar, cap: int) -> PolyOperator:
    """The Gaussian transform on polynomials as an operator, ``z**n -> h~_n``."""
    return PolyOperator([hermite_tilde(sigma, n) for n in range(cap + 1)], 0)


def nu_sigma_monomial_inner(
    m: int, n: int, sigma: Scalar, radial_nodes: int = 32, angular_nodes: Optional[int] = None
) -> complex:
    """``int z**m conj(z)**n dnu_sigma`` by polar quadrature.

    The angle uses the trapezoid rule, exact for ``exp(i k theta)`` with
    ``|k| < angular_nodes``; the radius, after ``u = r**2 / sigma``, is
    ``sigma**((m+n)/2) / (2 pi) * int u**((m+n)/2) exp(-u) du`` and uses
    Gauss-Laguerre nodes.
    """
    s = float(sigma)
    if s <= 0:
        raise DomainError("sigma must be positive")
    k = angular_nodes if angular_nodes is not None else m + n + 1
    theta = 2 * np.pi * np.arange(k) / k
    angular = np.exp(1j * (m - n) * theta).sum() * (2 * np.pi / k)
    u, w = roots_laguerre(radial_nodes)
    radial = s ** ((m + n) / 2) / (2 * np.pi) * float(np.dot(w, u ** ((m + n) / 2)))
    return complex(angular * radial)


def centered_char_function(params: ModelParams, y: float):
    """Characteristic function of the centred lattice measure, and ``exp(-sigma y**2 / 2)``."""
    a, s = float(params.alpha), float(params.sigma)
    phi = cmath.exp(s / a**2 * (cmath.exp(1j * a * y) - 1 - 1j * a * y))
    return phi, math.exp(-s * y * y / 2)


def characteristic_gap(params: ModelParams, ys: Sequence[float]) -> float:
    """``max_y |phi(y) - exp(-sigma y**2 / 2)|`` over the given grid."""
    return max((abs(p - g) for p, g in (centered_char_function(params, y) for y in ys)), default=0.0)


@dataclass(frozen=True)
class EigenfunctionReport:
    passed: bool
    truncation: int
    first_mismatch: Optional[int]
    lhs_value: complex
    rhs_value: complex
    note: str

    def __bool__(self) -> bool:
        return self.passed


EIGENVALUE_NOTE = (
    "term-wise, the lowering operator maps the coherent state to (z / sigma) times itself; "
    "the identity checked is sigma * lowering(E_N) = z * E_{N-1}"
)


def lowering_eigenfunction_check(
    params: ModelParams, z: complex, truncation: int, x: Optional[Scalar] = None
) -> EigenfunctionReport:
    """Exact partial-sum identity ``sigma dE_N = z E_{N-1}`` for the coherent state.

    Both sides are polynomials in ``z`` with polynomial coefficients in ``x``;
    they are compared power by power in ``z`` (so the check is exact for every
    complex ``z``), then evaluated at ``(x, z)`` for the report.
    """
    if truncation < 1:
        raise DomainError("truncation must be at least 1")
    sigma = params.sigma
    basis = charlier_recurrence(params, truncation)
    lower = op_lowering_charlier(params, truncation)
    mismatch = None
    lhs_terms, rhs_terms = [], []
    for n in range(truncation + 1):
        lhs = lower(basis.polys[n]) * (sigma / (factorial(n) * sigma**n))
        rhs = basis.polys[n - 1] / (factorial(n - 1) * sigma ** (n - 1)) if n else Poly()
        if lhs != rhs and mismatch is None:
            mismatch = n
        lhs_terms.append(lhs)
        rhs_terms.append(rhs)
    x = params.alpha if x is None else Fraction(x)
    z = complex(z)
    lhs_val = sum((float(p(x)) * z**n for n, p in enumerate(lhs_terms)), 0j)
    rhs_val = sum((float(p(x)) * z**n for n, p in enumerate(rhs_terms)), 0j)
    return EigenfunctionReport(mismatch is None, truncation, mismatch, lhs_val, rhs_val, EIGENVALUE_NOTE)
