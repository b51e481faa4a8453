"""Dimension identities as exact integer and polynomial facts.

The two-term pair complex has Euler characteristic dim G (1 - g); the
reconstruction family dimension decomposes as moduli + extensions + torsor
and collapses to n(2n+1)(g-1).  Both identities also hold as polynomials in
(n, g) with every expanded coefficient zero.  The stability case analysis is
an exhaustive integer scan with no counterexample.
"""

from spinorlab import pair_euler_identity, stability_scan, y_dimension_identity
from spinorlab.rrdim import (
    SubobjectCase,
    pair_euler_identity_symbolic,
    stability_case_verdict,
    y_dimension_symbolic,
)

rec = pair_euler_identity(2, 2)
print(f"pair complex at (n, g) = (2, 2): chi = {rec.chi_pair}, expected {rec.expected}")

ydim, expected, ok = y_dimension_identity(2, 2)
print(f"reconstruction dimension at (2, 2): "
      f"{ydim.moduli_term} + {ydim.extension_term} + {ydim.torsor_term} = {ydim.total} "
      f"(expected {expected}, ok={ok})")
print("vanishing hypotheses recorded:", list(ydim.hypotheses))

print("\nsymbolic checks (zero polynomials in n and g):")
print("  pair Euler:", pair_euler_identity_symbolic().is_zero)
print("  reconstruction dimension:", y_dimension_symbolic().is_zero)

print("\nstability case analysis:")
v = stability_case_verdict(SubobjectCase("F_maps_to_U", 2, 0, -1, -1))
for step in v.steps:
    print("  " + step)
print(f"  verdict: deg F = {v.deg_f} < 0: {v.negative}")

checked, bad = stability_scan()
print(f"\nexhaustive scan: {checked} cases, {len(bad)} counterexamples")
