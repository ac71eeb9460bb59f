"""Charlier-type polynomials for the lattice Poisson measure.

The measure puts Poisson weights on the lattice alpha*N with mean sigma/alpha
and variance sigma. Its monic orthogonal polynomials come out of a three-term
recurrence; here we build them, check them against the closed forms, and look
at their norms.
"""
from math import factorial

from poisson_bargmann import (
    ModelParams,
    Poly,
    charlier_explicit,
    charlier_recurrence,
    inner_product_L2pi,
    poisson_type_moment,
)
from poisson_bargmann.orthogonal import charlier_expanded, monomial_in_charlier

params = ModelParams("1/2", "3/4")
basis = charlier_recurrence(params, 6)

print(f"Charlier-type polynomials for {params}")
for n, c in enumerate(basis.polys):
    print(f"  c_{n}(z) = {c}")

# Two other constructions give the same coefficients.
same = all(c == charlier_explicit(params, n) == charlier_expanded(params, n) for n, c in enumerate(basis.polys))
print("\nbinomial-sum and Stirling forms agree with the recurrence:", same)

# Norms come out as n! sigma^n, with no rounding anywhere.
print("\n<c_n, c_n> under the measure:")
for n, c in enumerate(basis.polys):
    norm = inner_product_L2pi(c, c, params)
    print(f"  n={n}: {norm}  (n! sigma^n = {factorial(n) * params.sigma**n})")

print("\n<c_2, c_5> =", inner_product_L2pi(basis.polys[2], basis.polys[5], params))

# Going the other way: z^4 written in the Charlier basis.
coeffs = monomial_in_charlier(params, 4)
print("\nz^4 = " + " + ".join(f"({a})*c_{i}" for i, a in enumerate(coeffs)))
assert basis.combine(coeffs) == Poly.monomial(4)
print("check: recombining gives back z^4")
# Integrating both sides kills every c_i with i >= 1, so a_0 is a moment.
print("a_0 equals the 4th moment:", coeffs[0] == poisson_type_moment(4, params))
