"""The built-in symplectic representations and their structure checks.

Decompositions are declared and verified, not discovered: each constructor
tags its summands, the verification surface checks invariance/isotropy/
nondegeneracy, commutants certify irreducibility, and the multiplicity-free
test decides whether dual pairs are self-dual.
"""

from spinorlab import (
    almost_saturated_check,
    commutant,
    direct_sum,
    hom_space,
    rep_from_text,
    rep_to_text,
    sl2_standard,
    sl2_sym_cube,
    sl2_w_plus_wdual,
    sp_standard,
    verify_symplectic_rep,
)

zoo = [sp_standard(2), sl2_standard(), sl2_w_plus_wdual(), sl2_sym_cube()]
for rep in zoo:
    report = verify_symplectic_rep(rep)
    verdict = almost_saturated_check(rep)
    print(f"{rep.name}: dim g = {rep.algebra.dim}, dim V = {rep.dimV}, "
          f"verify = {report.passed}, commutant dim = {len(commutant(rep))}, "
          f"multiplicity-free = {verdict.status}")
    if verdict.witnesses:
        print(f"  witnesses: {verdict.witnesses}")

print("\nW is self-dual for sl2, which is exactly what the witness shows:")
print("  dim Hom(W, W*) =", hom_space(sl2_w_plus_wdual(), 0, 1))

both = direct_sum(sl2_standard(), sl2_sym_cube())
print(f"\n{both.name}: two non-isomorphic irreducibles ->",
      almost_saturated_check(both).status)

text = rep_to_text(sp_standard(1))
back = rep_from_text(text)
print("\nline-oriented serialization round-trips:", rep_to_text(back) == text)
print("first lines of the format:")
for line in text.splitlines()[:4]:
    print("  " + line)
