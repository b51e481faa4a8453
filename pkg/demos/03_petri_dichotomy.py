"""Injectivity of the section-level differential: the dichotomy.

On polynomial spinor sections the differential of the moment map becomes a
matrix.  For the standard representation it is injective at every nonzero
section; for the W + W* dual pair a one-parameter scaling symmetry forces the
direction (u, -delta) into the kernel whenever both components are nonzero.
"""

import random
from fractions import Fraction

from spinorlab import SectionSpace, petri_kernel, petri_matrix, sp_standard
from spinorlab.lie import sl2_w_plus_wdual
from spinorlab.petri import dual_pair_kernel_direction, scalar_action_invariance

rng = random.Random(1)

print("standard representation: kernels of random nonzero sections")
for n, s in [(1, 2), (2, 2), (3, 3)]:
    space = SectionSpace(sp_standard(n), s)
    coords = [Fraction(rng.randint(-4, 4)) for _ in range(space.dim)]
    if not any(coords):
        coords[0] = Fraction(1)
    kernel = petri_kernel(space, coords)
    print(f"  n={n}, s={s}: section space dim {space.dim}, kernel dim {len(kernel)}")

print("\ndual pair W + W*: the built-in kernel direction")
rep = sl2_w_plus_wdual()
space = SectionSpace(rep, 2)
coords = [Fraction(x) for x in (1, 2, 0, 1, 3, -1, 2, 0)]  # both components nonzero
pm = petri_matrix(space, coords)
direction = dual_pair_kernel_direction(rep, space, coords)
print("  (u, -delta) is annihilated:", all(x == 0 for x in pm.matrix.apply(direction)))
print("  kernel dimension:", len(petri_kernel(space, coords)))

print("\nwhy: the moment map is invariant under (u, delta) -> (t u, t^-1 delta)")
print("  invariance at t = 7/3:",
      scalar_action_invariance(rep, [Fraction(x) for x in (1, 2, 3, 4)], Fraction(7, 3)))
