"""Evaluating the transform of a lattice function at complex points.

For a function f sampled on alpha*N the transform at z is the expectation of f
under the lattice Poisson law with sigma replaced by sigma + alpha*z. That sum
makes sense for complex z too, and sends c_n to z^n.
"""
import cmath

import numpy as np

from poisson_bargmann import GridFunction, ModelParams, charlier_recurrence, transform_evaluate, transform_poly
from poisson_bargmann.transform import coherent_state_charlier, coherent_state_charlier_series

params = ModelParams("1/2", "3/4")
basis = charlier_recurrence(params, 5)
points = [0.5, 1 + 1j, -0.7j, cmath.rect(2, 2.0)]

print("transform of c_n sampled on 80 atoms, compared with z^n")
for n in range(6):
    g = GridFunction.from_poly(basis.polys[n], params, 80)
    errs = [abs(transform_evaluate(g, params, z).value - z**n) / abs(z) ** n for z in points]
    print(f"  n={n}: worst relative error {max(errs):.1e}")

# A function that is not a polynomial: summed until the terms stop mattering.
f = np.cos
res = transform_evaluate(lambda x: f(x), params, 0.3 + 0.4j)
print(f"\ncos: value {res.value:.12f}, {res.terms} terms, tail bound {res.tail_bound:.1e}")

# Exact images of polynomials come from the operator route.
p = basis.polys[3] * 2 + basis.polys[1]
print("\ntransform of 2 c_3 + c_1 =", transform_poly(p, params))

# The coherent state is the kernel of the transform: closed form against its series.
zs = np.exp(1j * np.linspace(0, 2 * np.pi, 7))[:-1] * 0.9
gap = max(abs(coherent_state_charlier(params, 4, z) - coherent_state_charlier_series(params, 4, z, 40)) for z in zs)
print(f"coherent state at the atom 4*alpha, closed form vs 40-term series: {gap:.1e}")
