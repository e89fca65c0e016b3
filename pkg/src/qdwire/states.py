"""Ground states, the reduced two-dot density matrix and single-dot marginals.

The two-dot reduced states live in the four-dimensional basis

    psi_1 = |0,0>,  psi_2 = |1,0>,  psi_3 = |0,1>,  psi_4 = |1,1>

labelled |n_d1, n_d2>.  Tracing the wire fermion out of a pure state with
amplitudes C_1..C_8 gives closed-form matrix elements (e.g. rho_11 =
|C_1|^2 + |C_5|^2, rho_14 = C_1 C_4* + C_5 C_8*); because the traced mode
is leftmost in the canonical ket ordering no anticommutation phases enter.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .linalg import eigh, gibbs_state
from .model import BASIS_OCCUPATIONS, ModelParams, build_hamiltonian

#: (n_d1, n_d2) pairs in psi-basis order.
PSI_OCCUPATIONS = ((0, 0), (1, 0), (0, 1), (1, 1))

PSI_INDEX = {occ: k for k, occ in enumerate(PSI_OCCUPATIONS)}

#: Energy window within which the two parity sectors count as tied.
TIE_TOL = 1e-9


@dataclass(frozen=True, eq=False)
class WaveFunction:
    """Eight amplitudes over the enumerated basis, with a parity-sector tag.

    sector is "odd" when only C_1..C_4 are populated, "even" when only
    C_5..C_8 are, and "mixed" otherwise.  degenerate marks ground states
    whose parity sectors are tied within the tie tolerance.
    """

    amplitudes: np.ndarray
    sector: str
    energy: float = float("nan")
    degenerate: bool = False

    def __post_init__(self):
        amps = np.asarray(self.amplitudes)
        if amps.shape != (8,):
            raise ValueError(f"need 8 amplitudes, got shape {amps.shape}")
        norm = float(np.sum(np.abs(amps) ** 2))
        if abs(norm - 1.0) > 1e-12:
            raise ValueError(f"amplitudes must be normalized, |C|^2 = {norm}")
        object.__setattr__(self, "amplitudes", amps)

    @classmethod
    def from_amplitudes(cls, amplitudes, energy=float("nan"), degenerate=False):
        """Build a wave function, classifying its sector from the support."""
        amps = np.asarray(amplitudes, dtype=complex)
        amps = amps / np.linalg.norm(amps)
        odd_w = float(np.sum(np.abs(amps[:4]) ** 2))
        if odd_w > 1.0 - 1e-14:
            sector = "odd"
        elif odd_w < 1e-14:
            sector = "even"
        else:
            sector = "mixed"
        return cls(amps, sector, energy, degenerate)


def _embed(block_vector, sector, energy, degenerate):
    amps = np.zeros(8)
    if sector == "odd":
        amps[:4] = block_vector
    else:
        amps[4:] = block_vector
    return WaveFunction(amps, sector, float(energy), degenerate)


def ground_state(p: ModelParams, tie_rule: str = "even-first"):
    """Lowest-energy eigenstate, diagonalizing each parity block separately.

    When the two sectors' minima agree within the tie tolerance the result
    is degenerate: tie_rule "even-first"/"odd-first" picks one sector and
    flags it, "both" returns the (even, odd) pair.

    Returns a single WaveFunction, or a tuple of two for tie_rule="both"
    at a degenerate point.
    """
    if tie_rule not in ("even-first", "odd-first", "both"):
        raise ValueError(f"unknown tie_rule {tie_rule!r}")
    H = build_hamiltonian(p)
    w_odd, v_odd = eigh(H[:4, :4])
    w_even, v_even = eigh(H[4:, 4:])
    tied = bool(abs(w_even[0] - w_odd[0]) <= TIE_TOL)
    even = _embed(v_even[:, 0], "even", w_even[0], tied)
    odd = _embed(v_odd[:, 0], "odd", w_odd[0], tied)
    if tied:
        if tie_rule == "both":
            return even, odd
        return even if tie_rule == "even-first" else odd
    return even if w_even[0] < w_odd[0] else odd


def reduce_over_majorana(w: WaveFunction) -> np.ndarray:
    """Two-dot density matrix of a pure state, wire fermion traced out.

    Uses the closed-form matrix elements; the test suite checks them
    against a brute-force partial trace.
    """
    C = np.asarray(w.amplitudes, dtype=complex)
    c1, c2, c3, c4, c5, c6, c7, c8 = C
    rho = np.empty((4, 4), dtype=complex)
    rho[0, 0] = abs(c1) ** 2 + abs(c5) ** 2
    rho[1, 1] = abs(c3) ** 2 + abs(c7) ** 2
    rho[2, 2] = abs(c2) ** 2 + abs(c6) ** 2
    rho[3, 3] = abs(c4) ** 2 + abs(c8) ** 2
    rho[0, 1] = c1 * c7.conjugate() + c5 * c3.conjugate()
    rho[0, 2] = c1 * c6.conjugate() + c5 * c2.conjugate()
    rho[0, 3] = c1 * c4.conjugate() + c5 * c8.conjugate()
    rho[1, 2] = c3 * c2.conjugate() + c7 * c6.conjugate()
    rho[1, 3] = c3 * c8.conjugate() + c7 * c4.conjugate()
    rho[2, 3] = c2 * c8.conjugate() + c6 * c4.conjugate()
    for i in range(4):
        for j in range(i):
            rho[i, j] = rho[j, i].conjugate()
    return rho


def reduce_thermal(p: ModelParams) -> np.ndarray:
    """Two-dot density matrix of the full Gibbs state at p.temperature."""
    rho8 = gibbs_state(build_hamiltonian(p), p.temperature)
    return partial_trace_fermion(rho8)


def partial_trace_fermion(rho8: np.ndarray) -> np.ndarray:
    """Trace the wire fermion out of an 8x8 state in the enumerated basis."""
    rho8 = np.asarray(rho8)
    rho = np.zeros((4, 4), dtype=complex)
    for i, (nf_i, a1, a2) in enumerate(BASIS_OCCUPATIONS):
        for j, (nf_j, b1, b2) in enumerate(BASIS_OCCUPATIONS):
            if nf_i == nf_j:
                rho[PSI_INDEX[(a1, a2)], PSI_INDEX[(b1, b2)]] += rho8[i, j]
    return rho


def marginal(rho: np.ndarray, which: str) -> np.ndarray:
    """Single-dot 2x2 state: partial trace of a psi-basis 4x4 over the other dot."""
    rho = np.asarray(rho)
    if rho.shape != (4, 4):
        raise ValueError(f"expected a 4x4 density matrix, got {rho.shape}")
    if which not in ("dot1", "dot2"):
        raise ValueError(f"which must be 'dot1' or 'dot2', got {which!r}")
    out = np.zeros((2, 2), dtype=complex)
    for i, (a1, a2) in enumerate(PSI_OCCUPATIONS):
        for j, (b1, b2) in enumerate(PSI_OCCUPATIONS):
            if which == "dot1" and a2 == b2:
                out[a1, b1] += rho[i, j]
            elif which == "dot2" and a1 == b1:
                out[a2, b2] += rho[i, j]
    return out
