"""Smoothing a spinor zero by a pole modification on the formal disc.

The family h_t = I + t z^(-m) N is exactly symplectic over the Laurent ring
(N is in sp and squares to zero), it sends the vanishing spinor z^m e1 to
z^m e1 + t f1, and conjugating the Higgs field matches the modified spinor's
field on the nose: the modification glues.
"""

from spinorlab import (
    TruncatedSeriesVector,
    glue_check,
    hecke_family,
    symplectic_complete,
    verify_symplectic_family,
)
from spinorlab.hecke import modified_spinor, verify_completion
from spinorlab.rings import MultiPoly

fam = hecke_family(2, 3)
print(f"h_t for n={fam.n}, m={fam.m}:")
for row in fam.h_t.entries:
    print("  [" + ", ".join(str(p) for p in row) + "]")
print("exactly symplectic:", verify_symplectic_family(fam))

psi_u, psi_d = modified_spinor(hecke_family(1, 1))
print(f"\nmodified spinor for n=1, m=1:  {psi_u}  ->  {psi_d}")

for n, m in [(1, 1), (2, 2), (3, 1)]:
    report = glue_check(n, m)
    print(f"glue check n={n}, m={m}: regular={report.spinor_regular}, "
          f"nonzero at origin={report.spinor_nonzero_at_origin}, "
          f"field glues={report.higgs_glues}, field regular={report.higgs_regular}")

print("\nsymplectic completion of a primitive series vector, mod z^4:")
z = MultiPoly.var("z")
v = TruncatedSeriesVector((1 + z, z ** 2, 2 + z, MultiPoly.const(0)), precision=4)
S = symplectic_complete(v)
print("  first column is v:", S.col(0) == tuple(v.entries))
print("  S^T Omega S = Omega mod z^4:", verify_completion(S, 4))
print("  still valid at every lower precision:",
      all(verify_completion(S, p) for p in (1, 2, 3)))
