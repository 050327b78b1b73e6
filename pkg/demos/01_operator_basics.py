"""Hilbert-Schmidt geometry on the two-qutrit operator space.

Walks through the dense-operator layer: trace inner product, norm, tensor
products, partial transposition and Hermitian spectra.
"""

import numpy as np

from entwit import (
    bell_projector,
    hermitian_spectrum,
    hs_inner,
    hs_norm,
    identity,
    is_positive_semidefinite,
    maximally_mixed,
    partial_transpose,
    tensor,
)

one = identity(3, 3)
print("trace inner product <1,1> =", hs_inner(one, one).real)        # 9
print("norm of the maximally mixed state:", hs_norm(maximally_mixed(3, 3)))

# product operators factorize under the trace
a = np.diag([1.0, 2.0, 3.0])
b = np.diag([1.0, -1.0, 0.0])
print("Tr(a x b) =", tensor(a, b).trace().real, "= Tr(a) Tr(b) =",
      np.trace(a) * np.trace(b))

# partial transposition flips the entangled projector into an indefinite operator
p00 = bell_projector(3, (0, 0))
pt = partial_transpose(p00, 2)
print("\nspectrum of |phi+><phi+|:", np.round(hermitian_spectrum(p00.op), 6))
print("spectrum after partial transposition:",
      np.round(hermitian_spectrum(pt), 6))
ok, min_eig = is_positive_semidefinite(pt)
print("still positive semidefinite?", ok, " (min eigenvalue %.4f)" % min_eig)

# the partial transpose is an isometry of the Hilbert-Schmidt space
print("\nnorm before/after PT:", hs_norm(p00.op), hs_norm(pt))
