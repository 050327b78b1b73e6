"""PPT classification, nearest-PPT projection, and a separable sampling oracle.

Partial transposition is always applied to subsystem 2; the choice does not
affect spectra (the two partial transposes differ by a full transposition)
and fixing it keeps results bit-reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator

import numpy as np

from .operators import (
    PSD_TOL,
    BipartiteOperator,
    DensityMatrix,
    _pt_array,
)

__all__ = [
    "PptVerdict",
    "NearestPptResult",
    "SamplerConfig",
    "classify_ppt",
    "nearest_ppt",
    "sample_product_state",
    "min_separable_expectation",
]


@dataclass(frozen=True)
class PptVerdict:
    """PPT/NPT label with the minimum partial-transpose eigenvalue."""

    label: str
    min_pt_eigenvalue: float
    tolerance: float

    def to_dict(self) -> dict:
        return {
            "label": self.label,
            "min_pt_eigenvalue": float(self.min_pt_eigenvalue),
            "tolerance": float(self.tolerance),
        }


@dataclass(frozen=True, eq=False)
class NearestPptResult:
    """Outcome of the nearest-PPT projection.

    `state` is always a valid density matrix (the last iterate projected
    onto the unit-trace PSD set); when `converged` is False it need not be
    PPT and `residual` reports how far the iteration still moved.
    """

    state: DensityMatrix = field(repr=False)
    converged: bool
    iterations: int
    residual: float
    min_pt_eigenvalue: float

    def to_dict(self) -> dict:
        from .operators import operator_to_dict

        return {
            "converged": self.converged,
            "iterations": self.iterations,
            "residual": float(self.residual),
            "min_pt_eigenvalue": float(self.min_pt_eigenvalue),
            "state": operator_to_dict(self.state.op),
        }


@dataclass(frozen=True)
class SamplerConfig:
    """Seeded sampling plan: `count` states, `mixing_degree` product terms each."""

    seed: int
    count: int
    mixing_degree: int = 1

    def __post_init__(self):
        if self.count < 1:
            raise ValueError("count must be at least 1")
        if self.mixing_degree < 1:
            raise ValueError("mixing_degree must be at least 1")


def classify_ppt(rho: DensityMatrix, tol: float = PSD_TOL) -> PptVerdict:
    """NPT iff the partial transpose has an eigenvalue below -tol."""
    pt = _pt_array(rho.entries, rho.dim_a, rho.dim_b, 2)
    min_eig = float(np.linalg.eigvalsh(pt)[0])
    label = "NPT" if min_eig < -tol else "PPT"
    return PptVerdict(label=label, min_pt_eigenvalue=min_eig, tolerance=tol)


def _project_spectrum_to_simplex(vals: np.ndarray) -> np.ndarray:
    """Euclidean projection of a real vector onto {x >= 0, sum x = 1}."""
    u = np.sort(vals)[::-1]
    css = np.cumsum(u) - 1.0
    idx = np.arange(1, len(u) + 1)
    pivot = np.nonzero(u - css / idx > 0)[0][-1]
    theta = css[pivot] / (pivot + 1)
    return np.maximum(vals - theta, 0.0)


def _project_density(mat: np.ndarray) -> np.ndarray:
    """Metric projection onto the unit-trace PSD set (spectrum -> simplex)."""
    herm = (mat + mat.conj().T) / 2
    vals, vecs = np.linalg.eigh(herm)
    w = _project_spectrum_to_simplex(vals)
    return (vecs * w) @ vecs.conj().T


def _project_pt_psd(mat: np.ndarray, dim_a: int, dim_b: int) -> np.ndarray:
    """Metric projection onto {X : PT(X) >= 0} (PT is an isometry)."""
    herm = (mat + mat.conj().T) / 2
    pt = _pt_array(herm, dim_a, dim_b, 2)
    vals, vecs = np.linalg.eigh(pt)
    clipped = (vecs * np.maximum(vals, 0.0)) @ vecs.conj().T
    return _pt_array(clipped, dim_a, dim_b, 2)


def nearest_ppt(rho: DensityMatrix, tol: float = 1e-10,
                max_iter: int = 10000) -> NearestPptResult:
    """Metric projection of `rho` onto the PPT states.

    Alternating projections with correction terms (Dykstra scheme) between
    the unit-trace PSD set and the PT-positive set; plain alternation would
    find some intersection point, the corrections make the limit the nearest
    one.  Converged when one full cycle moves the iterate by less than `tol`
    in norm and the density-side iterate is PPT within `tol`.  A PPT input
    is its own projection.

    On iteration exhaustion the result carries `converged=False`, the last
    density-side iterate and the final residual.
    """
    dim_a, dim_b = rho.dim_a, rho.dim_b
    x = rho.entries.copy()
    p = np.zeros_like(x)
    q = np.zeros_like(x)
    y = x
    residual = np.inf
    iterations = 0
    for iterations in range(1, max_iter + 1):
        y = _project_density(x + p)
        p = x + p - y
        x_next = _project_pt_psd(y + q, dim_a, dim_b)
        q = y + q - x_next
        residual = float(np.linalg.norm(x_next - x))
        x = x_next
        if residual < tol:
            pt_min = float(np.linalg.eigvalsh(
                _pt_array(y, dim_a, dim_b, 2))[0])
            if pt_min >= -tol:
                return NearestPptResult(
                    state=DensityMatrix(BipartiteOperator(dim_a, dim_b, y)),
                    converged=True,
                    iterations=iterations,
                    residual=residual,
                    min_pt_eigenvalue=pt_min,
                )
    pt_min = float(np.linalg.eigvalsh(_pt_array(y, dim_a, dim_b, 2))[0])
    return NearestPptResult(
        state=DensityMatrix(BipartiteOperator(dim_a, dim_b, y)),
        converged=False,
        iterations=iterations,
        residual=residual,
        min_pt_eigenvalue=pt_min,
    )


def _haar_vector(rng: np.random.Generator, d: int) -> np.ndarray:
    z = rng.standard_normal((d, 2))
    vec = z[:, 0] + 1j * z[:, 1]
    return vec / np.linalg.norm(vec)


def sample_product_state(d: int, config: SamplerConfig) -> Iterator[DensityMatrix]:
    """Stream of exactly-separable states, reproducible from the seed.

    Each state is a convex mixture of `mixing_degree` pure product states
    whose factors are Haar-random unit vectors (normalized complex-normal
    draws); the mixing weights are uniform Dirichlet.  Draws are consumed
    sample by sample, so a longer run extends a shorter one with the same
    seed.
    """
    rng = np.random.default_rng(config.seed)
    k = config.mixing_degree
    for _ in range(config.count):
        mat = np.zeros((d * d, d * d), dtype=complex)
        weights = rng.dirichlet(np.ones(k)) if k > 1 else np.ones(1)
        for term in range(k):
            left = _haar_vector(rng, d)
            right = _haar_vector(rng, d)
            prod = np.einsum("i,j->ij", left, right).ravel()
            mat += weights[term] * np.outer(prod, prod.conj())
        yield DensityMatrix(BipartiteOperator(d, d, mat))


def _product_expectations(w_mat: np.ndarray, left: np.ndarray,
                          right: np.ndarray) -> np.ndarray:
    vecs = np.einsum("ni,nj->nij", left, right).reshape(left.shape[0], -1)
    return np.einsum("na,ab,nb->n", vecs.conj(), w_mat, vecs,
                     optimize=True).real


def _refine_product(w_mat: np.ndarray, left: np.ndarray, right: np.ndarray,
                    steps: int, initial_step: float = 0.5) -> float:
    """Deterministic coordinate descent on the pure-product expectation.

    Perturbs one real coordinate of one factor at a time, renormalizes, and
    keeps the move when the expectation drops; the step halves each round.
    No gradients; the objective is quadratic in each factor.
    """
    def expect(l, r):
        v = np.einsum("i,j->ij", l, r).ravel()
        return float(np.vdot(v, w_mat @ v).real)

    factors = [left.astype(complex), right.astype(complex)]
    best = expect(*factors)
    step = initial_step
    for _ in range(steps):
        for side in (0, 1):
            d = factors[side].size
            for coord in range(d):
                for delta in (step, -step, 1j * step, -1j * step):
                    trial = factors[side].copy()
                    trial[coord] += delta
                    trial /= np.linalg.norm(trial)
                    cand = [factors[0], factors[1]]
                    cand[side] = trial
                    val = expect(*cand)
                    if val < best:
                        best = val
                        factors[side] = trial
        step /= 2
    return best


def min_separable_expectation(w, config: SamplerConfig,
                              refine_steps: int = 6) -> float:
    """Empirical minimum of Tr(sigma W) over seeded pure product states.

    Probes the extreme points of the separable set (pure products); mixtures
    cannot fall below them, so `mixing_degree` plays no role here.  The best
    few samples are sharpened by deterministic coordinate perturbation with
    step halving (`refine_steps` rounds).

    The return value is an upper bound on the true separable minimum: a
    negative value falsifies witness-hood, a nonnegative value is supporting
    evidence only.  For a fixed seed the raw sampled minimum is nonincreasing
    in `count` (longer runs extend shorter ones).
    """
    op = getattr(w, "op", w)
    if isinstance(op, DensityMatrix):
        op = op.op
    w_mat = np.asarray(op.entries)
    d = op.dim_a
    if op.dim_b != d:
        raise ValueError("sampler requires equal subsystem dimensions")

    rng = np.random.default_rng(config.seed)
    z = rng.standard_normal((config.count, 2, d, 2))
    left = z[:, 0, :, 0] + 1j * z[:, 0, :, 1]
    right = z[:, 1, :, 0] + 1j * z[:, 1, :, 1]
    left /= np.linalg.norm(left, axis=1, keepdims=True)
    right /= np.linalg.norm(right, axis=1, keepdims=True)

    values = _product_expectations(w_mat, left, right)
    best = float(values.min())
    if refine_steps > 0:
        top = np.argsort(values)[: min(8, config.count)]
        for idx in top:
            best = min(best, _refine_product(w_mat, left[idx], right[idx],
                                             refine_steps))
    return best
