"""Moment maps of symplectic representations, exactly.

The moment map of a symplectic representation sends a spinor vector to an
algebra element, characterized by pairing against the trace form.  For the
standard representation it is literally the rank-one map v -> omega(v, psi) psi,
and its differential satisfies the equivariance identity with zero residual.
"""

from fractions import Fraction

from spinorlab import (
    MomentContext,
    equivariance_check,
    gaiotto_field,
    moment_differential,
    moment_map,
    moment_matrix,
    sp_standard,
    standard_omega,
)

rep = sp_standard(2)
ctx = MomentContext(rep)
print(f"representation: {rep.name}, dim g = {rep.algebra.dim}, dim V = {rep.dimV}")

psi = [Fraction(1), Fraction(2), Fraction(-1, 2), Fraction(3)]
mu = moment_matrix(ctx, psi)
print("\nmu(psi) as a matrix:")
print(mu)

print("\nmatches the rank-one field omega(., psi) psi exactly:",
      mu == gaiotto_field(standard_omega(2), psi))

print("quadratic: mu(3 psi) = 9 mu(psi):",
      moment_map(ctx, [3 * x for x in psi]) == tuple(9 * c for c in moment_map(ctx, psi)))

psidot = [Fraction(2), Fraction(0), Fraction(1), Fraction(-1)]
d = moment_differential(ctx, psi, psidot)
print("differential is symmetric in its two arguments:",
      d == moment_differential(ctx, psidot, psi))

# equivariance: the derivative along the infinitesimal action is the bracket
xi = [1 if i % 3 == 0 else -1 for i in range(rep.algebra.dim)]
ok, residual = equivariance_check(ctx, psi, xi)
print(f"equivariance residual identically zero: {ok}")
