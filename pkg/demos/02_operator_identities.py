"""Operators on polynomials, stored as exact images of monomials.

Every operator here is a finite table: the image of z^0..z^cap plus a declared
bound on how far it raises degrees. Composition checks that the left factor
stores enough images, so the identities below are exact finite statements.
"""
from fractions import Fraction

from poisson_bargmann import ModelParams, katriel_check
from poisson_bargmann import operators as ops

params = ModelParams(2, 5)
cap = 12

# The transform on polynomials factors through the Touchard umbral operator.
s = ops.op_sheffer_S(params, cap)
factored = ops.op_shift(params.shift, cap) @ ops.op_umbral_touchard(params, cap)
inverse = ops.op_sheffer_S_inv(params, cap)
print("S == shift(sigma/alpha) after Touchard:", s == factored)
print("S after its inverse is the identity:  ", s @ inverse == ops.identity(cap))
print("images of the inverse are c_0..c_3:")
for n in range(4):
    print(f"  z^{n} -> {inverse.images[n]}")

# A Weyl pair: U = Z + sigma/alpha raises degree by one, V = alpha D + 1 keeps it.
u, v = ops.op_weyl_pair(params, cap + 1)
comm = ops.op_commutator(v, u)
print(f"\n[V, U] == {params.alpha} * identity on cap {comm.cap}:", comm == ops.identity(comm.cap) * params.alpha)

# Conjugating multiplication by z through S gives rho = U V.
lhs = ops.op_sheffer_S(params, cap + 1) @ ops.op_mulz(cap)
rhs = ops.op_rho(params, cap + 1) @ s
print("S Z == (U V) S:", lhs == rhs)

# Normal ordering: (UV)^n expands into U^k V^k with Stirling weights.
for n in (2, 5, 8):
    report = katriel_check(params, n, 24)
    print(f"normal ordering n={n}: {'holds' if report else 'fails'} on degrees <= {report.degree}")

# Shifts by h agree with the truncated exponential of h*D.
h = Fraction(1, 3)
print("\nshift by 1/3 == sum_k (1/3)^k D^k / k!:", ops.op_shift(h, 10) == ops.op_shift_boole(h, 10))

# Asking for more than the tables hold is an error, not a silent truncation.
try:
    ops.op_diff(4) @ ops.op_mulz(4)
except ops.CapError as exc:
    print("cap bookkeeping:", exc)
