"""Identity checks grouped into suites, as run by ``sbt verify``.

Every check is a pure function of a :class:`RunConfig` returning
``(passed, details)``; :func:`run_suite` times them and collects outcomes.
"""
from __future__ import annotations

import cmath
import math
import random
import time
from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial
from typing import Callable, Dict, List, Tuple

from . import operators as ops
from .algebra import Poly, TruncatedSeries, expm1_scaled, log1p_scaled
from .orthogonal import (
    charlier_expanded,
    charlier_explicit,
    charlier_recurrence,
    generating_function_check,
    hermite_recurrence,
    hermite_tilde,
    hermite_tilde_twist,
    monomial_in_charlier,
)
from .params import STANDARD_PARAMS, ModelParams
from .transform import (
    GridFunction,
    characteristic_gap,
    coherent_state_charlier,
    coherent_state_charlier_series,
    coherent_state_hermite,
    coherent_state_hermite_series,
    gaussian_transform_poly,
    inner_product_gaussian,
    inner_product_L2pi,
    lowering_eigenfunction_check,
    nu_sigma_monomial_inner,
    op_gaussian_transform,
    transform_apply,
    transform_apply_fixed,
    transform_evaluate,
    transform_poly,
    transform_unitarity_check,
)

DEFAULT_SEED = 20240611

DEFAULT_TOLERANCES = {
    "transform_rel": 1e-9,
    "transform_one": 1e-12,
    "coherent": 1e-10,
    "nu_sigma": 1e-8,
    "char_ratio": 1.6,
}


@dataclass(frozen=True)
class RunConfig:
    params: ModelParams = ModelParams(1, 1)
    cap: int = 16
    seed: int = DEFAULT_SEED
    tolerances: Dict[str, float] = field(default_factory=dict)

    def __post_init__(self):
        if not 0 <= self.cap <= 64:
            raise ValueError(f"cap must lie in 0..64, got {self.cap}")
        unknown = set(self.tolerances) - set(DEFAULT_TOLERANCES)
        if unknown:
            raise ValueError(f"unknown tolerance names: {', '.join(sorted(unknown))}")

    def tol(self, name: str) -> float:
        return self.tolerances.get(name, DEFAULT_TOLERANCES[name])

    def param_sets(self) -> Tuple[ModelParams, ...]:
        return tuple(dict.fromkeys((self.params,) + STANDARD_PARAMS))


@dataclass(frozen=True)
class CheckOutcome:
    name: str
    anchor: str
    status: str
    mode: str
    elapsed: float
    details: dict

    def as_dict(self) -> dict:
        return {
            "name": self.name,
            "anchor": self.anchor,
            "status": self.status,
            "mode": self.mode,
            "elapsed": round(self.elapsed, 6),
            "details": self.details,
        }


@dataclass(frozen=True)
class Check:
    name: str
    anchor: str
    mode: str
    run: Callable[[RunConfig], Tuple[bool, dict]]


SUITES: Dict[str, List[Check]] = {}


def check(suite: str, anchor: str, mode: str = "exact"):
    def register(fn):
        SUITES.setdefault(suite, []).append(Check(fn.__name__, anchor, mode, fn))
        return fn

    return register


def _random_poly(rng: random.Random, degree: int) -> Poly:
    return Poly(Fraction(rng.randint(-9, 9), rng.randint(1, 6)) for _ in range(degree + 1))


# -- series ------------------------------------------------------------------------------


@check("series", "inverse pair log(1+at)/a and (exp(at)-1)/a")
def series_inverse_pair(cfg):
    order = 24
    t = TruncatedSeries.variable(order)
    alphas = dict.fromkeys([cfg.params.alpha, Fraction(1), Fraction(1, 2), Fraction(2)])
    bad = []
    for a in alphas:
        b, c = log1p_scaled(a, order), expm1_scaled(a, order)
        if b.compose(c) != t or c.compose(b) != t or b.reversion() != c:
            bad.append(str(a))
    return not bad, {"order": order, "alphas": [str(a) for a in alphas], "failed": bad}


@check("series", "exponential and logarithm of formal power series")
def series_exp_log(cfg):
    rng = random.Random(cfg.seed)
    order = 16
    for _ in range(10):
        a = TruncatedSeries([0] + [Fraction(rng.randint(-5, 5), rng.randint(1, 4)) for _ in range(order)], order)
        if a.exp().log() != a:
            return False, {"series": repr(a)}
    return True, {"order": order, "samples": 10}


# -- operators ---------------------------------------------------------------------------


@check("operators", "Weyl relation [V, U] = alpha")
def weyl_relation(cfg):
    cap = max(cfg.cap, 20)
    bad = []
    for p in cfg.param_sets():
        u, v = ops.op_weyl_pair(p, cap + 1)
        comm = ops.op_commutator(v, u)
        if comm != ops.identity(comm.cap) * p.alpha or comm.cap < cap:
            bad.append(str(p))
    return not bad, {"cap": cap, "failed": bad}


@check("operators", "transform factorization S = E_{sigma/alpha} T_alpha")
def sheffer_factorization(cfg):
    cap = cfg.cap
    bad = []
    for p in cfg.param_sets():
        s = ops.op_sheffer_S(p, cap)
        s_inv = ops.op_sheffer_S_inv(p, cap)
        ok = (
            s == ops.op_sheffer_S(p, cap, route="factored")
            and s_inv == ops.op_umbral_factorial(p, cap) @ ops.op_shift(-p.shift, cap)
            and s @ s_inv == ops.identity(cap)
            and s_inv @ s == ops.identity(cap)
            and ops.op_umbral_factorial(p, cap) @ ops.op_umbral_touchard(p, cap) == ops.identity(cap)
        )
        if not ok:
            bad.append(str(p))
    return not bad, {"cap": cap, "failed": bad}


@check("operators", "conjugation S Z S^-1 = U V")
def conjugation(cfg):
    cap = cfg.cap
    bad = []
    for p in cfg.param_sets():
        s = ops.op_sheffer_S(p, cap + 1)
        rho = ops.op_rho(p, cap + 1)
        lhs = s @ ops.op_mulz(cap)
        rhs = rho @ s.restrict(cap)
        if lhs != rhs:
            bad.append(str(p))
    return not bad, {"cap": cap, "failed": bad}


@check("operators", "Boole formula E_h = exp(hD)")
def boole_formula(cfg):
    cap = cfg.cap
    hs = [Fraction(1, 3), cfg.params.alpha, -cfg.params.shift]
    bad = [str(h) for h in hs if ops.op_shift(h, cap) != ops.op_shift_boole(h, cap)]
    return not bad, {"cap": cap, "failed": bad}


@check("operators", "images of U and V: V = E_alpha, U = Z E_-alpha, Z = U V")
def shift_images(cfg):
    cap = cfg.cap
    bad = []
    for p in cfg.param_sets():
        basis = charlier_recurrence(p, cap + 1)
        lower = ops.op_lowering_charlier(p, cap + 1)
        raise_ = ops.op_raising_charlier(p, cap + 1)
        big_u = raise_ + ops.identity(cap + 1) * p.shift
        big_v = lower * p.alpha + ops.identity(cap + 1)
        ok = (
            big_v == ops.op_shift(p.alpha, cap + 1)
            and big_u.restrict(cap) == ops.op_mulz(cap + 1) @ ops.op_shift(-p.alpha, cap)
            and big_u @ big_v.restrict(cap) == ops.op_mulz(cap)
            and all(lower(basis.polys[n]) == basis.polys[n - 1] * n for n in range(1, cap + 2))
            and all(raise_(basis.polys[n]) == basis.polys[n + 1] for n in range(cap + 1))
        )
        if not ok:
            bad.append(str(p))
    return not bad, {"cap": cap, "failed": bad}


# -- katriel -----------------------------------------------------------------------------


@check("katriel", "normal ordering (UV)^n = sum S(n,k) alpha^(n-k) U^k V^k")
def katriel(cfg):
    cap = max(cfg.cap, 9)
    bad = []
    for p in cfg.param_sets():
        for n in range(1, 9):
            if cap - n < 0:
                break
            report = ops.katriel_check(p, n, cap)
            if not report:
                bad.append({"params": str(p), "n": n, "first_discrepancy": report.first_discrepancy})
    return not bad, {"cap": cap, "n_max": 8, "failed": bad}


# -- orthogonality -----------------------------------------------------------------------


@check("orthogonality", "Gram matrix of c_0..c_12 equals diag(n! sigma^n)")
def charlier_gram(cfg):
    size = 13
    bad = []
    for p in cfg.param_sets():
        polys = charlier_recurrence(p, size - 1).polys
        for m in range(size):
            for n in range(m, size):
                want = factorial(n) * p.sigma**n if m == n else 0
                if inner_product_L2pi(polys[m], polys[n], p) != want:
                    bad.append({"params": str(p), "m": m, "n": n})
    return not bad, {"size": size, "failed": bad[:5]}


@check("orthogonality", "Charlier recurrence, binomial sum and Stirling expansion agree")
def charlier_triple(cfg):
    cap = cfg.cap
    bad = []
    for p in cfg.param_sets():
        basis = charlier_recurrence(p, cap)
        for n in range(cap + 1):
            c = basis.polys[n]
            if not (c == charlier_explicit(p, n) == charlier_expanded(p, n)):
                bad.append({"params": str(p), "n": n, "kind": "explicit"})
            if list(basis.from_monomial[n]) != monomial_in_charlier(p, n):
                bad.append({"params": str(p), "n": n, "kind": "monomial"})
        if ops.op_sheffer_S_inv(p, cap).images != basis.polys:
            bad.append({"params": str(p), "kind": "inverse transform images"})
    return not bad, {"cap": cap, "failed": bad[:5]}


@check("orthogonality", "Charlier generating function")
def charlier_generating(cfg):
    order = 12
    bad = [str(p) for p in cfg.param_sets() if not generating_function_check("charlier", p, order)]
    return not bad, {"order": order, "failed": bad}


@check("orthogonality", "unitarity on polynomials")
def unitarity(cfg):
    rng = random.Random(cfg.seed)
    sets = cfg.param_sets()
    for i in range(50):
        p = sets[i % len(sets)]
        f, g = _random_poly(rng, rng.randint(0, 10)), _random_poly(rng, rng.randint(0, 10))
        report = transform_unitarity_check(f, g, p)
        if not report:
            return False, {"params": str(p), "l2": str(report.l2_side), "bargmann": str(report.bargmann_side)}
    return True, {"samples": 50}


# -- transform ---------------------------------------------------------------------------


def sample_points(count: int = 20, r_min: float = 0.5, r_max: float = 2.0) -> list:
    """Deterministic points in the annulus ``r_min <= |z| <= r_max`` at scattered angles."""
    pts = []
    for j in range(count):
        r = r_min + (r_max - r_min) * j / max(count - 1, 1)
        pts.append(cmath.rect(r, 2.399963229728653 * j))
    return pts


@check("transform", "summation formula reproduces S c_n = z^n", mode="numeric")
def transform_monomials(cfg):
    tol = cfg.tol("transform_rel")
    worst = 0.0
    for p in cfg.param_sets():
        basis = charlier_recurrence(p, 6)
        for n in range(7):
            g = GridFunction.from_poly(basis.polys[n], p, 80)
            for z in sample_points():
                worst = max(worst, abs(transform_apply(g, p, z) - z**n) / abs(z) ** n)
    return worst <= tol, {"max_rel_error": worst, "tolerance": tol}


@check("transform", "S1 = 1", mode="numeric")
def transform_one(cfg):
    tol = cfg.tol("transform_one")
    worst = 0.0
    for p in cfg.param_sets():
        for z in sample_points():
            worst = max(worst, abs(transform_evaluate(lambda x: 1.0, p, z).value - 1))
    return worst <= tol, {"max_error": worst, "tolerance": tol}


@check("transform", "certified tail bound survives doubling the truncation", mode="numeric")
def transform_tail(cfg):
    rng = random.Random(cfg.seed)
    sets = cfg.param_sets()
    failures = 0
    for i in range(100):
        p = sets[i % len(sets)]
        f = _random_poly(rng, rng.randint(0, 5))
        fn = f.eval_complex
        z = cmath.rect(2 * rng.random() ** 0.5, 2 * math.pi * rng.random())
        res = transform_evaluate(fn, p, z)
        doubled = transform_apply_fixed(fn, p, z, 2 * res.terms)
        if abs(doubled - res.value) > res.tail_bound + 1e-15 * abs(doubled):
            failures += 1
    return failures == 0, {"cases": 100, "failures": failures}


@check("transform", "operator route agrees with summation route", mode="numeric")
def transform_routes(cfg):
    rng = random.Random(cfg.seed + 1)
    worst = 0.0
    for p in cfg.param_sets():
        for _ in range(4):
            f = _random_poly(rng, rng.randint(0, 8))
            image = transform_poly(f, p)
            g = GridFunction.from_poly(f, p, 120)
            for z in sample_points(12, 0.0, 2.0):
                exact = image.eval_complex(z)
                worst = max(worst, abs(transform_apply(g, p, z) - exact) / max(1.0, abs(exact)))
    tol = cfg.tol("transform_rel")
    return worst <= tol, {"max_error": worst, "tolerance": tol}


@check("transform", "coherent state closed forms", mode="numeric")
def coherent_states(cfg):
    tol = cfg.tol("coherent")
    worst = 0.0
    zs = sample_points(8, 0.0, 1.0)
    for p in cfg.param_sets():
        for n in range(6):
            for z in zs:
                closed = coherent_state_charlier(p, n, z)
                worst = max(worst, abs(closed - coherent_state_charlier_series(p, n, z, 40)))
        for x in (-1.5, 0.0, 0.75, 2.0):
            for z in zs:
                closed = coherent_state_hermite(p.sigma, x, z)
                worst = max(worst, abs(closed - coherent_state_hermite_series(p.sigma, x, z, 40)))
    return worst <= tol, {"max_error": worst, "tolerance": tol}


@check("transform", "lowering operator on coherent-state partial sums")
def lowering_eigen(cfg):
    bad = []
    for p in cfg.param_sets():
        for n in range(1, 13):
            if not lowering_eigenfunction_check(p, complex(0.3, -0.7), n):
                bad.append({"params": str(p), "N": n})
    return not bad, {"N_max": 12, "failed": bad, "note": "eigenvalue of the lowering operator is z/sigma"}


@check("transform", "monomial orthogonality under nu_sigma", mode="numeric")
def nu_sigma(cfg):
    tol = cfg.tol("nu_sigma")
    worst = 0.0
    for s in dict.fromkeys([Fraction(1), Fraction(3, 4), cfg.params.sigma]):
        for m in range(9):
            for n in range(9):
                want = factorial(n) * float(s) ** n if m == n else 0.0
                worst = max(worst, abs(nu_sigma_monomial_inner(m, n, s) - want))
    return worst <= tol, {"max_error": worst, "tolerance": tol}


@check("transform", "centred measure approaches the Gaussian as alpha -> 0", mode="numeric")
def weak_convergence(cfg):
    factor = cfg.tol("char_ratio")
    ys = [0.25 * k for k in range(1, 13)]
    alphas = [Fraction(1), Fraction(1, 2), Fraction(1, 4), Fraction(1, 8)]
    gaps = [characteristic_gap(ModelParams(a, cfg.params.sigma), ys) for a in alphas]
    ratios = [gaps[i] / gaps[i + 1] for i in range(len(gaps) - 1)]
    ok = all(r >= factor for r in ratios)
    return ok, {"gaps": gaps, "ratios": ratios, "required_ratio": factor}


# -- hermite -----------------------------------------------------------------------------


@check("hermite", "Gaussian transform images h~_n = i^n h_n(-iz)")
def hermite_twist(cfg):
    cap = cfg.cap
    s = cfg.params.sigma
    basis = hermite_recurrence(s, cap)
    bad = [
        n for n in range(cap + 1)
        if not (hermite_tilde(s, n) == hermite_tilde_twist(basis.polys[n])
                == gaussian_transform_poly(Poly.monomial(n), s))
    ]
    return not bad, {"cap": cap, "failed": bad}


@check("hermite", "Hermite generating functions")
def hermite_generating(cfg):
    s = cfg.params.sigma
    ok = generating_function_check("hermite", s, 10) and generating_function_check("hermite-tilde", s, 10)
    return bool(ok), {"order": 10}


@check("hermite", "Gaussian transform maps h_n to z^n")
def hermite_consistency(cfg):
    s = cfg.params.sigma
    cap = 12
    op = op_gaussian_transform(s, cap)
    basis = hermite_recurrence(s, cap)
    bad = [n for n in range(cap + 1) if op(basis.polys[n]) != Poly.monomial(n)]
    return not bad, {"cap": cap, "failed": bad}


@check("hermite", "Hermite Gram matrix equals diag(n! sigma^n)")
def hermite_gram(cfg):
    s = cfg.params.sigma
    polys = hermite_recurrence(s, 12).polys
    bad = [
        (m, n) for m in range(13) for n in range(13)
        if inner_product_gaussian(polys[m], polys[n], s) != (factorial(n) * s**n if m == n else 0)
    ]
    return not bad, {"size": 13, "failed": bad[:5]}


SUITE_NAMES = ("all", "series", "operators", "orthogonality", "katriel", "transform", "hermite")


def run_suite(suite: str, cfg: RunConfig) -> List[CheckOutcome]:
    if suite == "all":
        checks = [c for name in SUITE_NAMES[1:] for c in SUITES[name]]
    elif suite in SUITES:
        checks = SUITES[suite]
    else:
        raise KeyError(f"unknown suite {suite!r}")
    outcomes = []
    for c in checks:
        start = time.perf_counter()
        try:
            passed, details = c.run(cfg)
        except Exception as exc:  # a crashing check is a failed check, not a crashed run
            passed, details = False, {"error": f"{type(exc).__name__}: {exc}"}
        outcomes.append(
            CheckOutcome(c.name, c.anchor, "pass" if passed else "fail", c.mode,
                         time.perf_counter() - start, details)
        )
    return outcomes
