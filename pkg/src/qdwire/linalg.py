"""Small dense Hermitian kernels: eigendecomposition, trace norm, Gibbs state.

Everything here operates on 2x2 .. 8x8 matrices.  LAPACK (via numpy) does
the heavy lifting; this module pins down the contracts the rest of the
package relies on: ascending eigenvalues, a deterministic eigenvector
phase, explicit Hermiticity checking, and a fixed noise floor for singular
values of rank-deficient inputs.
"""
from __future__ import annotations

from typing import NamedTuple

import numpy as np

#: Relative Hermiticity tolerance for eigh input.
HERMITICITY_TOL = 1e-12

#: Squared singular values below this are treated as exact zeros.
SINGULAR_VALUE_FLOOR = 1e-14

#: Eigenvalues closer than 1e-9 * max(1, scale) count as degenerate.
DEGENERACY_TOL = 1e-9


class EigenSystem(NamedTuple):
    values: np.ndarray   # real, ascending
    vectors: np.ndarray  # orthonormal columns, vectors[:, k] <-> values[k]


def eigh(a: np.ndarray) -> EigenSystem:
    """Eigendecomposition of a Hermitian matrix with a fixed phase gauge.

    Eigenvalues come out ascending.  Each eigenvector is rotated so its
    largest-magnitude component is real and positive (first such component
    on ties), which makes repeated runs and both real/complex inputs
    reproducible.  Input that is non-Hermitian beyond a 1e-12 relative
    tolerance is rejected.
    """
    a = np.asarray(a)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {a.shape}")
    scale = max(np.max(np.abs(a)), 1.0)
    dev = np.max(np.abs(a - a.conj().T))
    if dev > HERMITICITY_TOL * scale:
        raise ValueError(
            f"matrix is not Hermitian: max |a - a^dag| = {dev:.3e} "
            f"exceeds {HERMITICITY_TOL:.0e} * {scale:.3e}")
    values, vectors = np.linalg.eigh(a)
    vectors = vectors.copy()
    for k in range(vectors.shape[1]):
        v = vectors[:, k]
        lead = int(np.argmax(np.abs(v)))
        pivot = v[lead]
        if np.iscomplexobj(vectors):
            vectors[:, k] = v * (pivot.conjugate() / abs(pivot))
        elif pivot < 0:
            vectors[:, k] = -v
    return EigenSystem(values, vectors)


def degenerate_clusters(values: np.ndarray, scale: float = 1.0) -> list[list[int]]:
    """Group indices of eigenvalues that agree within the degeneracy tolerance."""
    tol = DEGENERACY_TOL * max(1.0, abs(scale))
    clusters: list[list[int]] = []
    for k, v in enumerate(values):
        if clusters and v - values[clusters[-1][0]] <= tol:
            clusters[-1].append(k)
        else:
            clusters.append([k])
    return clusters


def trace_norm(a: np.ndarray) -> float:
    """Sum of singular values, with sub-noise values zeroed.

    Singular values whose square falls below 1e-14 are treated as exact
    zeros; reduced states of pure inputs are rank deficient and LAPACK
    otherwise reports their null space as O(1e-8) noise.
    """
    a = np.asarray(a)
    if not np.all(np.isfinite(a)):
        raise ValueError("trace_norm: input contains non-finite entries")
    s = np.linalg.svd(a, compute_uv=False)
    return float(np.where(s * s < SINGULAR_VALUE_FLOOR, 0.0, s).sum())


def gibbs_state(h: np.ndarray, temperature: float) -> np.ndarray:
    """Thermal state exp(-h/T)/Z built in the eigenbasis.

    The minimum eigenvalue is subtracted from the spectrum before
    exponentiating, so low temperatures cannot overflow and adding a
    multiple of the identity to h leaves the result unchanged.
    """
    if temperature <= 0:
        raise ValueError(
            f"gibbs_state requires temperature > 0, got {temperature}; "
            "use the ground-state path for T = 0")
    values, vectors = eigh(h)
    weights = np.exp(-(values - values[0]) / temperature)
    weights /= weights.sum()
    return (vectors * weights) @ vectors.conj().T
