"""Exact diagonalization and entanglement measures for two quantum dots
coupled through a short Majorana nanowire.

The public surface, by theme:

model       ModelParams, basis_index, build_hamiltonian,
            build_hamiltonian_from_operators, coulomb_shifted
linalg      eigh, trace_norm, gibbs_state
states      ground_state, reduce_over_majorana, reduce_thermal, marginal
negativity  fermionic_partial_transpose, logarithmic_negativity,
            negativity_pure_analytic
thermal     special_eigenbasis, thermal_dot_state, wootters_concurrence,
            thermal_concurrence, von_neumann_entropy,
            quantum_mutual_information, thermal_qmi
optimize    SearchConfig, maximize_negativity, sweep
"""

__version__ = "0.1.0"

from .model import (BASIS_OCCUPATIONS, ModelParams, OccupationState,
                    basis_index, basis_state, build_hamiltonian,
                    build_hamiltonian_from_operators, coulomb_shifted)
from .linalg import EigenSystem, eigh, gibbs_state, trace_norm
from .states import (WaveFunction, ground_state, marginal,
                     partial_trace_fermion, reduce_over_majorana,
                     reduce_thermal)
from .negativity import (AnalyticNegativityIntermediates,
                         fermionic_partial_transpose, logarithmic_negativity,
                         negativity_pure_analytic, pure_state_intermediates,
                         transpose_phase, transpose_phase_exponent)
from .thermal import (SpecialEigenbasis, ThermalWeights,
                      bell_diagonal_concurrence, low_temperature_concurrence,
                      quantum_mutual_information, special_eigenbasis,
                      thermal_concurrence, thermal_dot_state, thermal_qmi,
                      thermal_qmi_closed_form, thermal_weights,
                      von_neumann_entropy, wootters_concurrence)
from .optimize import (OptimizationResult, SearchConfig, SweepRow,
                       default_config, maximize_negativity, sweep)

__all__ = [name for name in dir() if not name.startswith("_")]
