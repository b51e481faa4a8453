"""Scaling limits on graded symplectic models.

With weights (1, 0, ..., 0, -1) the torus g_s = diag(s^w) preserves the
graded form.  Conjugating s^-2 Phi by g_s multiplies the entry in block
(i, j) by s^(w_i - w_j - 2), so the limit at s = 0 exists exactly when the
field is supported on the single block of weight two, where it is fixed up
to the square scaling a^2.
"""

from fractions import Fraction

from spinorlab import bb_limit, fixed_point_scale_check, graded_model, scaling_conjugate, strictly_filtered_phi
from spinorlab.bbflow import graded_weights, lambda_s_conversion_check, torus_preserves_form
from spinorlab.matrix import ExactMatrix

n = 2
print("weights:", graded_weights(n))

phi = strictly_filtered_phi(n, scale=Fraction(5, 3))
model = graded_model(n, phi)
print("strictly filtered field: only the (weight 1 <- weight -1) entry is set")

scaled = scaling_conjugate(model, include_inverse_square=True)
print("conjugated family entry (0, 3):", scaled.entries[0][3], " (constant in s)")
print("limit at s = 0 exists and equals the field:", bb_limit(model) == phi)

generic = graded_model(n, ExactMatrix([[1] * 4 for _ in range(4)]))
print("generic field has no limit:", bb_limit(generic) is None)

print("\nweight-two identity g_a Phi g_a^-1 = a^2 Phi:")
for a in (Fraction(3), Fraction(-1, 2), Fraction(7, 5)):
    print(f"  a = {a}: {fixed_point_scale_check(model, a)}")

print("\ntorus preserves the graded form:", torus_preserves_form(model))
print("lambda and s parameterizations agree under lambda = s^-2:",
      lambda_s_conversion_check(model))
