"""Weyl shift-and-phase operators, maximally entangled states, Bell projectors.

The single-qudit Weyl operators implemented here are

    U_{n,m} = sum_k exp(-2 pi i k n / d) |k><(k - m) mod d| ,

an orthogonal unitary basis: Tr(U_{n,m}^dag U_{n',m'}) = d delta delta.
The orientation (sign of the phase, direction of the shift) is chosen so
that, together with the row-major product-basis convention of
:mod:`entwit.operators`, the two-qutrit state families in
:mod:`entwit.families` reproduce their quoted closed forms exactly.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import NamedTuple

import numpy as np

from .operators import BipartiteOperator, DensityMatrix

__all__ = [
    "WeylIndex",
    "WeylExpansion",
    "weyl",
    "max_entangled",
    "bell_projector",
    "weyl_expand",
]


class WeylIndex(NamedTuple):
    """Index pair (n, m); negative entries reduce mod d, so (-1, 1) ~ (d-1, 1)."""

    n: int
    m: int

    def normalized(self, d: int) -> "WeylIndex":
        return WeylIndex(self.n % d, self.m % d)


def _norm_index(idx, d: int) -> WeylIndex:
    n, m = idx
    return WeylIndex(int(n) % d, int(m) % d)


@lru_cache(maxsize=None)
def _weyl_cached(d: int, n: int, m: int) -> np.ndarray:
    mat = np.zeros((d, d), dtype=complex)
    for k in range(d):
        mat[k, (k - m) % d] = np.exp(-2j * np.pi * k * n / d)
    mat.setflags(write=False)
    return mat


def weyl(d: int, idx) -> np.ndarray:
    """Single-system Weyl operator U_{n,m} on C^d.

    U_{0,0} is the identity and every other U_{n,m} is traceless.  The
    returned array is a read-only cached view.
    """
    if d < 2:
        raise ValueError("dimension must be at least 2")
    n, m = _norm_index(idx, d)
    return _weyl_cached(d, n, m)


def max_entangled(d: int) -> np.ndarray:
    """The unit vector (1/sqrt(d)) sum_j |j>|j>."""
    if d < 2:
        raise ValueError("dimension must be at least 2")
    vec = np.zeros(d * d, dtype=complex)
    vec[:: d + 1] = 1 / np.sqrt(d)
    return vec


@lru_cache(maxsize=None)
def _bell_entries(d: int, n: int, m: int) -> np.ndarray:
    vec = np.kron(weyl(d, (n, m)), np.eye(d)) @ max_entangled(d)
    mat = np.outer(vec, vec.conj())
    mat.setflags(write=False)
    return mat


def bell_projector(d: int, idx) -> DensityMatrix:
    """Rank-1 projector onto (U_{n,m} (x) 1)|phi+>.

    The d^2 projectors are mutually orthogonal and resolve the identity.
    """
    n, m = _norm_index(idx, d)
    return DensityMatrix(BipartiteOperator(d, d, _bell_entries(d, n, m)))


@lru_cache(maxsize=None)
def _pair_basis(d: int) -> np.ndarray:
    # basis[n, m, l, k] = U_{n,m} (x) U_{l,k}, shape (d,d,d,d,d^2,d^2)
    side = d * d
    basis = np.empty((d, d, d, d, side, side), dtype=complex)
    for n in range(d):
        for m in range(d):
            left = weyl(d, (n, m))
            for l in range(d):
                for k in range(d):
                    basis[n, m, l, k] = np.kron(left, weyl(d, (l, k)))
    basis.setflags(write=False)
    return basis


@dataclass(frozen=True, eq=False)
class WeylExpansion:
    """Complete coefficient table of an operator in the U (x) U basis.

    `coeffs[n, m, l, k]` multiplies U_{n,m} (x) U_{l,k}; the table includes
    the identity pair (0,0),(0,0).  For a Hermitian operator the coefficient
    of a basis element and of its adjoint are complex conjugates.
    """

    d: int
    coeffs: np.ndarray = field(repr=False)

    def coefficient(self, left, right) -> complex:
        n, m = _norm_index(left, self.d)
        l, k = _norm_index(right, self.d)
        return complex(self.coeffs[n, m, l, k])

    def reconstruct(self) -> BipartiteOperator:
        mat = np.einsum("nmlk,nmlkab->ab", self.coeffs, _pair_basis(self.d))
        return BipartiteOperator(self.d, self.d, mat)

    def significant(self, threshold: float = 1e-12):
        """Index pairs whose coefficient magnitude exceeds `threshold`."""
        out = []
        for n, m, l, k in np.argwhere(np.abs(self.coeffs) > threshold):
            out.append(((int(n), int(m)), (int(l), int(k)),
                        complex(self.coeffs[n, m, l, k])))
        return out


def weyl_expand(x) -> WeylExpansion:
    """Expand a bipartite operator with d1 = d2 = d in the U (x) U basis.

    The coefficient of U_{n,m} (x) U_{l,k} is <U_{n,m} (x) U_{l,k}, x>/d^2;
    the reconstruction reproduces the input to machine precision.
    """
    op = x.op if isinstance(x, DensityMatrix) else x
    if op.dim_a != op.dim_b:
        raise ValueError("Weyl expansion requires equal subsystem dimensions")
    d = op.dim_a
    coeffs = np.einsum(
        "nmlkab,ab->nmlk", _pair_basis(d).conj(), op.entries
    ) / (d * d)
    return WeylExpansion(d, coeffs)
