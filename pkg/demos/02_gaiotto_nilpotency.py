"""The rank-one Higgs field of a spinor lies in the nilpotent cone.

Phi_psi(v) = omega(v, psi) psi squares to zero because omega(psi, psi) = 0,
so every characteristic coefficient below the top vanishes: the field sits in
the fiber over zero of the Hitchin map, certified here in exact arithmetic.
"""

import random
from fractions import Fraction

from spinorlab import char_poly, gaiotto_field, hitchin_invariants, rank, standard_omega

rng = random.Random(0)

for n in (1, 2, 3, 4):
    omega = standard_omega(n)
    psi = [Fraction(rng.randint(-9, 9), rng.choice([1, 2, 3])) for _ in range(2 * n)]
    Phi = gaiotto_field(omega, psi)
    coeffs = hitchin_invariants(Phi)
    print(f"n={n}: psi = {psi}")
    print(f"  rank(Phi) = {rank(Phi)}, Phi^2 = 0: {(Phi * Phi).is_zero}")
    print(f"  char poly coefficients (ascending): {coeffs}")
    assert all(c == 0 for c in coeffs[:-1])

# the sp(2) picture is small enough to see whole
Phi = gaiotto_field(standard_omega(1), [1, 0])
print("\nsp(2), psi = (1, 0):")
print(Phi)
print("char poly:", char_poly(Phi), " (pure lambda^2: nilpotent)")
