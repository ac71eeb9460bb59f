"""The centred lattice measure approaches a Gaussian as the spacing shrinks.

Its characteristic function has a closed form. We tabulate the largest gap to
exp(-sigma y^2 / 2) over a y-grid as alpha halves, and compare the polar
quadrature of the Gaussian-weighted plane with the exact monomial norms.
"""
from fractions import Fraction
from math import factorial

import numpy as np

from poisson_bargmann import ModelParams
from poisson_bargmann.transform import centered_char_function, characteristic_gap, nu_sigma_monomial_inner

ys = np.arange(1, 13) * 0.25
for sigma in (Fraction(1), Fraction(5)):
    print(f"sigma = {sigma}")
    prev = None
    for k in range(6):
        alpha = Fraction(1, 2**k)
        gap = characteristic_gap(ModelParams(alpha, sigma), ys)
        ratio = f"  shrink x{prev / gap:.2f}" if prev else ""
        print(f"  alpha = {str(alpha):>5}: max gap {gap:.3e}{ratio}")
        prev = gap

phi, gauss = centered_char_function(ModelParams("1/10", 1), 1.0)
print(f"\nalpha = 1/10, y = 1: |phi| = {abs(phi):.5f}, Gaussian {gauss:.5f}, phi = {phi:.5f}")

print("\nmonomial norms in the Gaussian-weighted plane, sigma = 3/4:")
for n in range(0, 9, 2):
    q = nu_sigma_monomial_inner(n, n, Fraction(3, 4))
    print(f"  |z^{n}|^2 = {q.real:.10f}   exact {factorial(n) * 0.75**n:.10f}")
print("  <z^2, z^3> =", abs(nu_sigma_monomial_inner(2, 3, Fraction(3, 4))))
