"""Command line entry point ``sbt``.

Exit codes: 0 success, 1 a verification check failed, 2 usage error.
"""
from __future__ import annotations

import argparse
import cmath
import csv
import io
import json
import sys
from fractions import Fraction
from pathlib import Path

from .algebra import DomainError, Poly, format_rational, parse_rational
from .combinatorics import generalized_factorial, touchard, touchard_scaled
from .orthogonal import charlier_recurrence, hermite_recurrence, hermite_tilde
from .params import ModelParams
from .transform import GridFileError, centered_char_function, parse_grid_function, transform_evaluate
from .verify import DEFAULT_SEED, DEFAULT_TOLERANCES, SUITE_NAMES, RunConfig, run_suite

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2
MAX_CAP = 64

FAMILIES = ("charlier", "hermite", "touchard", "factorial", "touchard-scaled", "hermite-tilde")


class UsageError(Exception):
    pass


def family_polys(family: str, params: ModelParams, degree: int) -> list:
    """``[p_0, ..., p_degree]`` for a named family."""
    if family == "charlier":
        return list(charlier_recurrence(params, degree).polys)
    if family == "hermite":
        return list(hermite_recurrence(params.sigma, degree).polys)
    if family == "hermite-tilde":
        return [hermite_tilde(params.sigma, n) for n in range(degree + 1)]
    if family == "touchard":
        return [touchard(n) for n in range(degree + 1)]
    if family == "touchard-scaled":
        return [touchard_scaled(n, params.alpha) for n in range(degree + 1)]
    if family == "factorial":
        return [generalized_factorial(n, params.alpha) for n in range(degree + 1)]
    raise UsageError(f"unknown family {family!r}")


def _rational_json(x: Fraction) -> dict:
    return {"num": str(x.numerator), "den": str(x.denominator)}


def rational_from_json(obj: dict) -> Fraction:
    return Fraction(int(obj["num"]), int(obj["den"]))


def parse_points(text: str) -> list:
    """``"1+2i,-0.5,3i"`` -> complex numbers; an empty string gives no points."""
    out = []
    for item in text.split(","):
        item = item.strip().replace(" ", "")
        if not item:
            continue
        try:
            z = complex(item.replace("i", "j"))
        except ValueError:
            raise UsageError(f"invalid complex literal {item!r}") from None
        if not cmath.isfinite(z):
            raise UsageError(f"point {item!r} is not finite")
        out.append(z)
    return out


def _rationals(text: str) -> list:
    try:
        return [parse_rational(t) for t in text.split(",") if t.strip()]
    except (ValueError, TypeError) as exc:
        raise UsageError(str(exc)) from None


def _floats(text: str) -> list:
    try:
        return [float(t) for t in text.split(",") if t.strip()]
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _params(args) -> ModelParams:
    try:
        return ModelParams(args.alpha, args.sigma)
    except (ValueError, TypeError) as exc:
        raise UsageError(str(exc)) from None


def _tolerances(items) -> dict:
    out = {}
    for item in items or ():
        name, sep, value = item.partition("=")
        if not sep or name not in DEFAULT_TOLERANCES:
            raise UsageError(
                f"bad tolerance override {item!r}; names: {', '.join(DEFAULT_TOLERANCES)}"
            )
        try:
            out[name] = float(value)
        except ValueError:
            raise UsageError(f"tolerance {name} needs a number, got {value!r}") from None
    return out


def _csv_text(header, rows) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, quoting=csv.QUOTE_NONNUMERIC, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue()


# -- commands ----------------------------------------------------------------------------


def cmd_coeffs(args) -> tuple:
    params = _params(args)
    polys = family_polys(args.family, params, args.degree)
    if args.format == "json":
        doc = {
            "family": args.family,
            "alpha": _rational_json(params.alpha),
            "sigma": _rational_json(params.sigma),
            "degree": args.degree,
            "rows": [
                {"n": n, "coeffs": [_rational_json(c) for c in p.coeffs]}
                for n, p in enumerate(polys)
            ],
        }
        return json.dumps(doc, indent=2) + "\n", EXIT_OK
    header = ["n"] + [f"z^{k}" for k in range(args.degree + 1)]
    rows = [
        [n] + [format_rational(p.coeff(k)) for k in range(args.degree + 1)]
        for n, p in enumerate(polys)
    ]
    return _csv_text(header, rows), EXIT_OK


def cmd_verify(args) -> tuple:
    params = _params(args)
    try:
        cfg = RunConfig(params=params, cap=args.degree, seed=args.seed,
                        tolerances=_tolerances(args.tol))
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    outcomes = run_suite(args.suite, cfg)
    passed = all(o.status == "pass" for o in outcomes)
    code = EXIT_OK if passed else EXIT_FAIL
    if args.format == "json":
        doc = {
            "suite": args.suite,
            "config": {
                "alpha": _rational_json(params.alpha),
                "sigma": _rational_json(params.sigma),
                "cap": cfg.cap,
                "seed": cfg.seed,
                "tolerances": {k: cfg.tol(k) for k in DEFAULT_TOLERANCES},
            },
            "checks": [o.as_dict() for o in outcomes],
            "passed": passed,
        }
        return json.dumps(doc, indent=2, default=str) + "\n", code
    rows = [[o.name, o.anchor, o.status, o.mode, round(o.elapsed, 6)] for o in outcomes]
    return _csv_text(["name", "anchor", "status", "mode", "elapsed"], rows), code


def cmd_transform(args) -> tuple:
    path = Path(args.input)
    try:
        text = path.read_text()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None
    try:
        file_params, grid = parse_grid_function(text)
    except GridFileError as exc:
        raise UsageError(f"{path}: {exc}") from None
    params = file_params
    if args.alpha is not None or args.sigma is not None:
        try:
            flagged = ModelParams(
                args.alpha if args.alpha is not None else file_params.alpha,
                args.sigma if args.sigma is not None else file_params.sigma,
            )
        except (ValueError, TypeError) as exc:
            raise UsageError(str(exc)) from None
        if flagged != file_params:
            raise UsageError(
                f"{path}: file parameters {file_params} disagree with flags {flagged}"
            )
    points = parse_points(args.points)
    rows = []
    for z in points:
        res = transform_evaluate(grid, params, z)
        rows.append([z.real, z.imag, res.value.real, res.value.imag, res.tail_bound])
    header = ["z_re", "z_im", "re", "im", "tail_bound"]
    if args.format == "json":
        doc = {
            "alpha": _rational_json(params.alpha),
            "sigma": _rational_json(params.sigma),
            "support": grid.support,
            "rows": [dict(zip(header, r)) for r in rows],
        }
        return json.dumps(doc, indent=2) + "\n", EXIT_OK
    return _csv_text(header, rows), EXIT_OK


def cmd_converge(args) -> tuple:
    sigma = _params(args).sigma
    alphas = _rationals(args.alphas)
    ys = _floats(args.ys)
    if any(a <= 0 for a in alphas):
        raise UsageError("all alphas must be positive")
    rows, summary = [], []
    for a in alphas:
        p = ModelParams(a, sigma)
        worst_mod = worst = 0.0
        for y in ys:
            phi, gauss = centered_char_function(p, y)
            mod_diff = abs(abs(phi) - gauss)
            gap = abs(phi - gauss)
            worst_mod, worst = max(worst_mod, mod_diff), max(worst, gap)
            rows.append([format_rational(a), y, abs(phi), gauss, mod_diff, gap])
        summary.append([format_rational(a), worst_mod, worst])
    by_size = sorted(zip(alphas, summary), key=lambda t: t[0])
    monotone = all(by_size[i][1][2] <= by_size[i + 1][1][2] for i in range(len(by_size) - 1))
    header = ["alpha", "y", "abs_phi", "abs_gauss", "abs_difference", "complex_gap"]
    if args.format == "json":
        doc = {
            "sigma": _rational_json(sigma),
            "rows": [dict(zip(header, r)) for r in rows],
            "summary": [
                {"alpha": s[0], "max_abs_difference": s[1], "max_complex_gap": s[2]}
                for s in summary
            ],
            "monotone_in_alpha": monotone,
        }
        return json.dumps(doc, indent=2) + "\n", EXIT_OK
    rows += [[s[0], "max", "", "", s[1], s[2]] for s in summary]
    return _csv_text(header, rows), EXIT_OK


# -- argument parsing ---------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--alpha", default=None, help="lattice spacing, e.g. 1/2 (default 1)")
    common.add_argument("--sigma", default=None, help="variance, e.g. 3/4 (default 1)")
    common.add_argument("--degree", "--cap", dest="degree", type=int, default=None,
                        help=f"highest degree / operator cap (<= {MAX_CAP})")
    common.add_argument("--format", choices=("json", "csv"), default="json")
    common.add_argument("--seed", type=int, default=DEFAULT_SEED)
    common.add_argument("--out", default=None, help="write output here instead of stdout")
    common.add_argument("--tol", action="append", metavar="NAME=VALUE",
                        help="override a numeric tolerance (repeatable)")

    parser = argparse.ArgumentParser(
        prog="sbt",
        description="Exact tables and identity checks for the Segal-Bargmann "
        "transform of the lattice Poisson measure.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("coeffs", parents=[common], help="coefficient table of a polynomial family")
    p.add_argument("family", choices=FAMILIES)
    p.set_defaults(func=cmd_coeffs, default_degree=8)

    p = sub.add_parser("verify", parents=[common], help="run identity checks")
    p.add_argument("suite", nargs="?", default="all", choices=SUITE_NAMES)
    p.set_defaults(func=cmd_verify, default_degree=16)

    p = sub.add_parser("transform", parents=[common], help="evaluate the transform of a grid function")
    p.add_argument("input", help='JSON file {"alpha": ..., "sigma": ..., "values": [[re, im], ...]}')
    p.add_argument("--points", default="", help='comma list of complex points, e.g. "0.5,1+2i"')
    p.set_defaults(func=cmd_transform, default_degree=0)

    p = sub.add_parser("converge", parents=[common], help="characteristic-function gap table")
    p.add_argument("--alphas", default="1,1/2,1/4,1/8")
    p.add_argument("--ys", default=",".join(str(0.25 * k) for k in range(1, 13)))
    p.set_defaults(func=cmd_converge, default_degree=0)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command != "transform":
        args.alpha = "1" if args.alpha is None else args.alpha
        args.sigma = "1" if args.sigma is None else args.sigma
    if args.degree is None:
        args.degree = args.default_degree
    try:
        if not 0 <= args.degree <= MAX_CAP:
            raise UsageError(f"--degree must lie in 0..{MAX_CAP}")
        text, code = args.func(args)
    except UsageError as exc:
        print(f"sbt: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except DomainError as exc:
        print(f"sbt: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
