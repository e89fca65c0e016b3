"""Model parameters, occupation basis and Hamiltonian assembly.

The system is two spinless single-level quantum dots coupled to the two
overlapping boundary modes of a short topological nanowire.  The two
self-conjugate boundary operators combine into one ordinary fermion f, so
the Hilbert space is spanned by occupation states |n_f, n_d1, n_d2>.

Basis conventions
-----------------
Kets are built with the canonical operator ordering f^dag, d1^dag, d2^dag
acting on the vacuum, e.g. |1,1,1> = f^dag d1^dag d2^dag |0,0,0>.  All
fermionic signs in this package follow from that single choice.

The eight states carry a fixed enumeration, arranged by total charge
parity (odd block first, block boundary between positions 4 and 5):

    index 1..4 (odd):   |1,0,0>, |0,0,1>, |0,1,0>, |1,1,1>
    index 5..8 (even):  |0,0,0>, |1,0,1>, |1,1,0>, |0,1,1>

The 8x8 Hamiltonian is real symmetric and block diagonal in parity.  The
diagonal entry of a state is n_d1*eps1 + n_d2*eps2 + (n_f - 1/2)*eps_m and
the off-diagonal entries are +-lam1/sqrt(2), +-lam2/sqrt(2) within each
parity block.

Two independent builders are provided: ``build_hamiltonian`` writes the
matrix entries down directly, ``build_hamiltonian_from_operators`` applies
every second-quantized term of the Hamiltonian to every basis ket and
tracks the anticommutation signs.  They agree bit for bit, which the test
suite uses as a cross-validation oracle.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, replace

import numpy as np

#: 1/sqrt(2), computed once so both builders produce identical entries.
INV_SQRT2 = 1.0 / math.sqrt(2.0)

#: Occupation triples (n_f, n_d1, n_d2) in enumeration order (index 1..8).
BASIS_OCCUPATIONS = (
    (1, 0, 0), (0, 0, 1), (0, 1, 0), (1, 1, 1),
    (0, 0, 0), (1, 0, 1), (1, 1, 0), (0, 1, 1),
)

_INDEX_OF = {occ: k + 1 for k, occ in enumerate(BASIS_OCCUPATIONS)}


@dataclass(frozen=True)
class ModelParams:
    """The five model energies plus temperature, in one shared energy unit.

    eps_m is the overlap splitting of the two wire end modes; eps1, eps2
    are the dot levels; lam1, lam2 the dot-wire couplings.  Temperature is
    k_B*T with k_B = 1.  omega = eps_m/2 is the derived overlap scale.
    """

    eps_m: float
    eps1: float
    eps2: float
    lam1: float
    lam2: float
    temperature: float = 0.0

    def __post_init__(self):
        fields = (self.eps_m, self.eps1, self.eps2, self.lam1, self.lam2,
                  self.temperature)
        if not all(math.isfinite(x) for x in fields):
            raise ValueError(f"model parameters must be finite, got {fields}")
        if self.temperature < 0:
            raise ValueError(f"temperature must be >= 0, got {self.temperature}")

    @property
    def omega(self) -> float:
        return 0.5 * self.eps_m

    @classmethod
    def in_eps_m_units(cls, eps1, eps2, lam1, lam2, temperature=0.0):
        """Parameters given in units where the overlap eps_m equals 1."""
        return cls(1.0, eps1, eps2, lam1, lam2, temperature)

    @classmethod
    def in_omega_units(cls, eps1, eps2, lam1, lam2, temperature=0.0):
        """Parameters given in units where omega = eps_m/2 equals 1."""
        return cls(2.0, eps1, eps2, lam1, lam2, temperature)

    @classmethod
    def special_set(cls, omega, lam, temperature=0.0):
        """The symmetric point eps1 = eps2 = 0, lam1 = -lam2 = sqrt(2)*lam.

        At this point the spectrum is {+-omega, +-sqrt(omega^2+4 lam^2)},
        each level doubly degenerate, and the finite-temperature dot state
        is diagonal in the Bell basis (see the thermal module).
        """
        return cls(2.0 * omega, 0.0, 0.0, math.sqrt(2.0) * lam,
                   -math.sqrt(2.0) * lam, temperature)


@dataclass(frozen=True)
class OccupationState:
    """One basis ket: occupations, its enumeration index and charge parity."""

    n_f: int
    n_d1: int
    n_d2: int
    index: int
    parity: str  # "odd" | "even"


def basis_index(n_f: int, n_d1: int, n_d2: int) -> OccupationState:
    """Look up the enumerated basis state for an occupation triple."""
    for n in (n_f, n_d1, n_d2):
        if n not in (0, 1):
            raise ValueError(f"occupations must be 0 or 1, got {(n_f, n_d1, n_d2)}")
    idx = _INDEX_OF[(n_f, n_d1, n_d2)]
    parity = "odd" if (n_f + n_d1 + n_d2) % 2 == 1 else "even"
    return OccupationState(n_f, n_d1, n_d2, idx, parity)


def basis_state(index: int) -> OccupationState:
    """Inverse lookup: enumeration index (1..8) to occupation state."""
    if not 1 <= index <= 8:
        raise ValueError(f"basis index must be in 1..8, got {index}")
    occ = BASIS_OCCUPATIONS[index - 1]
    return basis_index(*occ)


def build_hamiltonian(p: ModelParams) -> np.ndarray:
    """Assemble the 8x8 parity-block Hamiltonian entry by entry.

    Returns a real symmetric matrix in the enumeration order above, with
    exact zeros in the cross-parity blocks.
    """
    a = p.lam1 * INV_SQRT2
    b = p.lam2 * INV_SQRT2
    H = np.zeros((8, 8))
    # odd block: |1,0,0>, |0,0,1>, |0,1,0>, |1,1,1>
    H[0, 0] = 0.5 * p.eps_m
    H[1, 1] = p.eps2 - 0.5 * p.eps_m
    H[2, 2] = p.eps1 - 0.5 * p.eps_m
    H[3, 3] = p.eps1 + p.eps2 + 0.5 * p.eps_m
    H[0, 1] = H[1, 0] = -b
    H[0, 2] = H[2, 0] = a
    H[1, 3] = H[3, 1] = -a
    H[2, 3] = H[3, 2] = b
    # even block: |0,0,0>, |1,0,1>, |1,1,0>, |0,1,1>
    H[4, 4] = -0.5 * p.eps_m
    H[5, 5] = p.eps2 + 0.5 * p.eps_m
    H[6, 6] = p.eps1 + 0.5 * p.eps_m
    H[7, 7] = p.eps1 + p.eps2 - 0.5 * p.eps_m
    H[4, 5] = H[5, 4] = -b
    H[4, 6] = H[6, 4] = -a
    H[5, 7] = H[7, 5] = a
    H[6, 7] = H[7, 6] = b
    return H


# Elementary operator application.  A mode is annihilated/created on an
# occupation triple; the sign counts the occupied modes to the LEFT of the
# target in the canonical ordering (f, d1, d2).

_MODE_POS = {"f": 0, "d1": 1, "d2": 2}


def _apply_mode(occ, mode, dag):
    pos = _MODE_POS[mode]
    occ = list(occ)
    if dag:
        if occ[pos] == 1:
            return None
        occ[pos] = 1
    else:
        if occ[pos] == 0:
            return None
        occ[pos] = 0
    sign = -1 if sum(occ[:pos]) % 2 == 1 else 1
    return sign, tuple(occ)


def _apply_product(ops, occ):
    """Apply a product of (mode, dag) factors right to left."""
    sign = 1
    for mode, dag in reversed(ops):
        res = _apply_mode(occ, mode, dag)
        if res is None:
            return None
        s, occ = res
        sign *= s
    return sign, occ


def _hamiltonian_terms(p: ModelParams):
    """The Hamiltonian as a list of (coefficient, operator product) terms.

    The coupling terms are the interaction expanded in f, d operators:

        (eps_m/2) (f+ f - f f+)
        - (lam1/sqrt2) (f+ d1+ + f d1+ + d1 f+ + d1 f)
        - (lam2/sqrt2) (f+ d2+ - f d2+ - d2 f+ + d2 f)

    where + marks creation.  Term order is fixed so the floating-point
    accumulation order matches build_hamiltonian exactly.
    """
    c1 = -p.lam1 * INV_SQRT2
    c2 = -p.lam2 * INV_SQRT2
    return [
        (p.eps1, (("d1", True), ("d1", False))),
        (p.eps2, (("d2", True), ("d2", False))),
        (0.5 * p.eps_m, (("f", True), ("f", False))),
        (-0.5 * p.eps_m, (("f", False), ("f", True))),
        (c1, (("f", True), ("d1", True))),
        (c1, (("f", False), ("d1", True))),
        (c1, (("d1", False), ("f", True))),
        (c1, (("d1", False), ("f", False))),
        (c2, (("f", True), ("d2", True))),
        (-c2, (("f", False), ("d2", True))),
        (-c2, (("d2", False), ("f", True))),
        (c2, (("d2", False), ("f", False))),
    ]


def build_hamiltonian_from_operators(p: ModelParams) -> np.ndarray:
    """Assemble the Hamiltonian by applying each operator term to each ket.

    Independent of build_hamiltonian; must reproduce it exactly.
    """
    H = np.zeros((8, 8))
    for col, ket in enumerate(BASIS_OCCUPATIONS):
        for coeff, ops in _hamiltonian_terms(p):
            res = _apply_product(ops, ket)
            if res is None:
                continue
            sign, out = res
            H[_INDEX_OF[out] - 1, col] += coeff * sign
    return H


def coulomb_shifted(p: ModelParams, shift1: float, shift2: float) -> ModelParams:
    """Mean-field charging shift of the dot levels; nothing else changes."""
    if not (math.isfinite(shift1) and math.isfinite(shift2)):
        raise ValueError("energy shifts must be finite")
    return replace(p, eps1=p.eps1 + shift1, eps2=p.eps2 + shift2)
