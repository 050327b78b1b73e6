"""Detecting bound entanglement along segments toward the maximally mixed state.

For each PPT Horodecki anchor the witness coefficients shrink as the segment
parameter grows; the first certifiable parameter lambda_min dips below 1 for
|gamma| > 1/sqrt(21) and bottoms out at 7/8.
"""

import numpy as np

from entwit import (
    CROSSING_GAMMA,
    DETECTION_GAMMA,
    certify_witness,
    classify_ppt,
    detection_profile,
    horodecki_detection_range,
    horodecki_state,
    hs_inner,
    line_witness,
)

print("detection boundary |gamma| = 1/sqrt(21) =", DETECTION_GAMMA)
print("deepest line at |gamma| = sqrt(5)/7 =", CROSSING_GAMMA)

print("\nlambda thresholds across the window:")
for gamma in np.linspace(0.22, 3 / 7, 9):
    profile = detection_profile(gamma)
    print(f"  gamma={gamma:.4f}: lambda_1={profile.lambda_1:.4f} "
          f"lambda_2={profile.lambda_2:.4f} -> lambda_min={profile.lambda_min:.4f}"
          f" detects={profile.detects}")

profile = detection_profile(CROSSING_GAMMA)
print(f"\ntotal minimum lambda_min = {profile.lambda_min} (7/8 = 0.875)")

# certify the witness at the threshold and evaluate it on its anchor
gamma = -2 / 7          # the b = 3.5 bound entangled anchor
profile = detection_profile(gamma)
witness, coeffs = line_witness(gamma, profile.lambda_min)
certificate = certify_witness(witness)
anchor = horodecki_state(3.5)
print(f"\nanchor b=3.5: {classify_ppt(anchor).label}, "
      f"witness certified={certificate.certified}, "
      f"expectation on anchor={hs_inner(anchor, witness.op).real:.3e}")
print("closed-form coefficients: a=%.6f c1=%.4f c2=%.4f%+.4fi"
      % (coeffs.a, coeffs.c1, coeffs.c2.real, coeffs.c2.imag))

(low, high) = horodecki_detection_range()
print("\nHorodecki parameters with detectable bound entanglement:")
print(f"  {low[0]} <= b < {low[1]:.6f}  and  {high[0]:.6f} < b <= {high[1]}")
