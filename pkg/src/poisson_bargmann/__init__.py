"""Exact umbral calculus and the Segal-Bargmann transform for the lattice Poisson measure.

The measure puts mass ``exp(-lam) lam**n / n!`` at ``alpha n`` with
``lam = sigma / alpha**2``; its monic orthogonal polynomials ``c_n`` are the
Charlier-type family and the transform sends ``c_n`` to ``z**n``.
"""
from .algebra import (
    DomainError,
    Poly,
    TruncatedSeries,
    parse_rational,
    poly_eval_complex,
    poly_eval_exact,
    series_compose,
    series_exp,
    series_log,
    series_reversion,
)
from .combinatorics import (
    StirlingTable,
    falling_factorial,
    gaussian_moment,
    generalized_factorial,
    poisson_type_moment,
    stirling_first,
    stirling_second,
    touchard,
    touchard_scaled,
)
from .operators import CapError, PolyOperator, katriel_check
from .orthogonal import (
    OrthogonalBasis,
    charlier_explicit,
    charlier_recurrence,
    generating_function_check,
    hermite_recurrence,
    hermite_tilde,
    monomial_in_charlier,
)
from .params import STANDARD_PARAMS, ModelParams
from .transform import (
    BargmannElement,
    GridFunction,
    PoissonTypeMeasure,
    bargmann_inner,
    inner_product_L2pi,
    transform_apply,
    transform_evaluate,
    transform_poly,
)

__version__ = "0.1.0"
