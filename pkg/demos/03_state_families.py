"""The three-parameter family, its closed-form spectrum, and the Horodecki line.

The one-parameter Horodecki states sit inside the three-parameter family;
their partial-transpose classification changes at b = 1 and b = 4.
"""

import numpy as np

from entwit import (
    SimplexParams,
    classify_ppt,
    gamma_slice_point,
    hermitian_spectrum,
    horodecki_state,
    horodecki_to_simplex,
    hs_norm,
    simplex_spectrum,
    simplex_state,
)

state = simplex_state(SimplexParams(0.4, 0.1, -0.2))
print("closed-form spectrum:", np.round(simplex_spectrum(state.params), 6))
print("numeric spectrum:    ",
      np.round(hermitian_spectrum(state.op), 6))
print("valid state:", state.valid)

# non-positive parameter choices are flagged, not rejected
broken = simplex_state(SimplexParams(-0.5, 0.0, 0.0))
print("\n(-0.5, 0, 0) min eigenvalue:", broken.min_eigenvalue,
      "-> valid:", broken.valid)

print("\nHorodecki line, embedded at alpha=(6-b)/21, beta=-2b/21, gamma=(5-2b)/7:")
for b in (0.0, 0.5, 1.0, 2.5, 3.5, 4.0, 4.5, 5.0):
    params = horodecki_to_simplex(b)
    residual = hs_norm(simplex_state(params).op - horodecki_state(b).op)
    verdict = classify_ppt(horodecki_state(b))
    print(f"  b={b:4.1f}: gamma={params.gamma:+.4f}  {verdict.label}"
          f"  (min PT eigenvalue {verdict.min_pt_eigenvalue:+.5f},"
          f"  embedding residual {residual:.1e})")

print("\nPPT-entangled window 3 < b <= 4 in slice coordinates:")
for b in (3.2, 3.6, 4.0):
    alpha, beta = gamma_slice_point(b)
    print(f"  b={b}: (alpha, beta) = ({alpha:.5f}, {beta:.5f})")
