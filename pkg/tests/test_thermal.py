import numpy as np
import pytest

from qdwire.model import ModelParams
from qdwire.states import reduce_thermal
from qdwire.thermal import (bell_diagonal_concurrence,
                            low_temperature_concurrence,
                            quantum_mutual_information, special_eigenbasis,
                            thermal_concurrence, thermal_dot_state,
                            thermal_qmi, thermal_qmi_closed_form,
                            thermal_weights, von_neumann_entropy,
                            wootters_concurrence)

from _oracles import bell_state, kron_psi, random_density_matrix, random_unitary


def test_special_eigenbasis_decoupled_limit():
    basis = special_eigenbasis(1.0, 0.0)
    assert basis.Delta == 1.0
    assert (basis.eta_plus, basis.eta_minus) == (0.0, 1.0)
    assert (basis.zeta_plus, basis.zeta_minus) == (1.0, 0.0)


def test_special_eigenbasis_reference_point():
    basis = special_eigenbasis(1.0, 1.0)
    assert basis.Delta == pytest.approx(np.sqrt(5.0), abs=1e-15)
    assert basis.eta_plus == pytest.approx(0.5257311, abs=1e-7)
    assert basis.eta_minus == pytest.approx(0.8506508, abs=1e-7)
    assert basis.energies == pytest.approx((-np.sqrt(5), -1.0, 1.0, np.sqrt(5)))


def test_special_eigenbasis_normalization():
    rng = np.random.default_rng(51)
    for _ in range(200):
        omega = rng.uniform(0.05, 4.0)
        lam = rng.uniform(0.0, 4.0)
        b = special_eigenbasis(omega, lam)
        assert b.eta_plus ** 2 + b.zeta_plus ** 2 == pytest.approx(1.0, abs=1e-14)
        assert b.eta_minus ** 2 + b.zeta_minus ** 2 == pytest.approx(1.0, abs=1e-14)
        # the two eta weights are complementary as well
        assert b.eta_plus ** 2 + b.eta_minus ** 2 == pytest.approx(1.0, abs=1e-13)


def test_special_eigenbasis_rejects():
    with pytest.raises(ValueError):
        special_eigenbasis(0.0, 1.0)
    with pytest.raises(ValueError):
        special_eigenbasis(1.0, -0.5)


def test_thermal_weights_sum_to_partition_function():
    rng = np.random.default_rng(52)
    for _ in range(200):
        omega = rng.uniform(0.1, 3.0)
        lam = rng.uniform(0.0, 3.0)
        T = rng.uniform(0.05, 10.0)
        w = thermal_weights(omega, lam, T)
        total = w.Phi_plus + w.Phi_minus + w.Psi_plus + w.Psi_minus
        assert total == pytest.approx(w.Z, rel=1e-12)


def test_thermal_weights_unshifted_crosscheck():
    # at moderate T the weights can be rebuilt with bare Boltzmann factors
    omega, lam, T = 1.2, 0.8, 1.5
    basis = special_eigenbasis(omega, lam)
    e = np.array(basis.energies)
    x = np.exp(-e / T)
    ep2, em2 = basis.eta_plus ** 2, basis.eta_minus ** 2
    zp2, zm2 = basis.zeta_plus ** 2, basis.zeta_minus ** 2
    bare = np.array([em2 * x[0] + x[2] + ep2 * x[3],
                     ep2 * x[0] + x[1] + em2 * x[3],
                     zp2 * x[0] + x[2] + zm2 * x[3],
                     zm2 * x[0] + x[1] + zp2 * x[3]])
    w = thermal_weights(omega, lam, T)
    got = np.array([w.Phi_plus, w.Phi_minus, w.Psi_plus, w.Psi_minus]) / w.Z
    np.testing.assert_allclose(got, bare / (2 * x.sum()), atol=1e-14)


def test_thermal_dot_state_high_temperature():
    rho = thermal_dot_state(1.0, 1.0, 1e6)
    assert np.abs(rho - np.eye(4) / 4).max() <= 1e-5


def test_thermal_dot_state_matches_full_gibbs():
    for omega in (0.5, 1.0, 2.0):
        for lam in (0.1, 0.7, 1.5):
            for T in (0.25, 1.0, 5.0):
                p = ModelParams.special_set(omega, lam, temperature=T)
                diff = np.abs(thermal_dot_state(omega, lam, T)
                              - reduce_thermal(p)).max()
                assert diff <= 1e-10


def test_wootters_anchors():
    assert wootters_concurrence(bell_state("phi+")) == pytest.approx(1.0, abs=1e-10)
    assert wootters_concurrence(np.eye(4) / 4) == 0.0
    werner = 0.8 * bell_state("phi+") + 0.2 * np.eye(4) / 4
    assert wootters_concurrence(werner) == pytest.approx(0.7, abs=1e-10)


def test_thermal_concurrence_frozen_oracle_point():
    # full-Gibbs + Wootters oracle value, frozen before implementation: the
    # ground level is a parity doublet, so the T -> 0 state is an equal
    # mixture of two Bell families and the concurrence vanishes
    assert thermal_concurrence(1.0, 0.5, 0.1) == pytest.approx(0.0, abs=1e-12)
    assert bell_diagonal_concurrence(thermal_weights(1.0, 0.5, 0.1)) == \
        pytest.approx(0.0, abs=1e-12)
    # analytic-weight path against the general Wootters path on a grid
    for lam in (0.2, 0.8, 2.0):
        for T in (0.1, 1.0):
            p = ModelParams.special_set(1.0, lam, temperature=T)
            general = wootters_concurrence(reduce_thermal(p))
            assert thermal_concurrence(1.0, lam, T) == \
                pytest.approx(general, abs=1e-8)


def test_thermal_concurrence_limits():
    assert thermal_concurrence(1.0, 1.0, 100.0) <= 1e-6
    assert thermal_concurrence(1.0, 0.0, 0.7) == 0.0


def test_low_temperature_concurrence_vanishes_identically():
    # eta_+^2 + eta_-^2 = 1 is an identity of the shorthands, so the
    # closed-form low-temperature expression is zero for all couplings
    assert low_temperature_concurrence(1.0, 1.0) <= 1e-12
    assert low_temperature_concurrence(1.0, 0.1) <= 1e-10
    rng = np.random.default_rng(53)
    for _ in range(100):
        omega = rng.uniform(0.05, 5.0)
        lam = rng.uniform(1e-3, 5.0)
        assert low_temperature_concurrence(omega, lam) <= 1e-10


def test_entropy_examples():
    assert von_neumann_entropy(np.diag([1.0, 0.0])) == 0.0
    assert von_neumann_entropy(np.eye(2) / 2) == pytest.approx(1.0, abs=1e-14)
    assert von_neumann_entropy(np.eye(4) / 4) == pytest.approx(2.0, abs=1e-14)


def test_qmi_examples():
    assert quantum_mutual_information(np.diag([1.0, 0, 0, 0])) == 0.0
    assert quantum_mutual_information(bell_state("phi+")) == \
        pytest.approx(2.0, abs=1e-12)
    product = np.diag([0.4 * 0.7, 0.6 * 0.7, 0.4 * 0.3, 0.6 * 0.3])
    assert quantum_mutual_information(product) <= 1e-14


def test_thermal_qmi_special_point_bell_diagonal_path():
    # eigenvalues of the state are the Bell weights and the marginals are
    # maximally mixed, so I = 2 - H(weights/Z)
    w = thermal_weights(1.0, 1.0, 1.0)
    p = np.array([w.Phi_plus, w.Phi_minus, w.Psi_plus, w.Psi_minus]) / w.Z
    expected = 2.0 + np.sum(p * np.log2(p))
    assert thermal_qmi(1.0, 1.0, 1.0) == pytest.approx(expected, abs=1e-10)


def test_thermal_qmi_closed_form_grouping_differs():
    # the sorted-weight grouping pairs the two Phi weights against the two
    # Psi weights; Phi and Psi weights coincide at this symmetric point, so
    # the closed form collapses to zero while the true value stays positive
    value = thermal_qmi(1.0, 1.0, 1.0)
    closed = thermal_qmi_closed_form(1.0, 1.0, 1.0)
    assert abs(closed) <= 1e-12
    assert value > 1e-2


def test_thermal_qmi_decoupled_and_scaling():
    assert thermal_qmi(1.0, 0.0, 1.0) <= 1e-12
    # measures depend only on the energy/temperature ratios
    assert thermal_qmi(3.0, 4.0, 1.0) == pytest.approx(
        thermal_qmi(30.0, 40.0, 10.0), abs=1e-12)


def test_bell_diagonal_r_matrix_eigenvalues():
    # for a Bell-diagonal state the R-matrix eigenvalues are the squared
    # Bell weights
    rng = np.random.default_rng(54)
    from qdwire.thermal import _SPIN_FLIP, BELL_VECTORS
    for _ in range(50):
        p = rng.dirichlet(np.ones(4))
        rho = (BELL_VECTORS * p) @ BELL_VECTORS.T
        R = rho @ _SPIN_FLIP @ rho.conj() @ _SPIN_FLIP
        ev = np.sort(np.linalg.eigvals(R).real)
        np.testing.assert_allclose(ev, np.sort(p ** 2), atol=1e-12)


def test_local_unitary_invariance():
    rng = np.random.default_rng(55)
    for _ in range(50):
        rho = random_density_matrix(rng)
        u = kron_psi(random_unitary(rng, 2), random_unitary(rng, 2))
        rotated = u @ rho @ u.conj().T
        assert wootters_concurrence(rotated) == \
            pytest.approx(wootters_concurrence(rho), abs=1e-10)
        assert quantum_mutual_information(rotated) == \
            pytest.approx(quantum_mutual_information(rho), abs=1e-10)


def test_measures_stay_in_range():
    rng = np.random.default_rng(57)
    for _ in range(200):
        rho = random_density_matrix(rng)
        c = wootters_concurrence(rho)
        i = quantum_mutual_information(rho)
        assert 0.0 <= c <= 1.0 + 1e-12
        assert 0.0 <= i <= 2.0 + 1e-12


def test_entropy_subadditivity():
    from qdwire.states import marginal
    rng = np.random.default_rng(56)
    for _ in range(100):
        rho = random_density_matrix(rng)
        s1 = von_neumann_entropy(marginal(rho, "dot1"))
        s2 = von_neumann_entropy(marginal(rho, "dot2"))
        assert s1 + s2 >= von_neumann_entropy(rho) - 1e-10


def test_qmi_monotonicity_grids():
    # pointwise structure on the recorded windows: non-decreasing along
    # omega, non-increasing along lambda; the T = 10 window is the T = 1
    # window scaled by 10 (the measures depend on energy/T ratios only)
    for T, (l0, l1), (w0, w1) in ((1.0, (3.0, 8.0), (0.3, 3.0)),
                                  (10.0, (30.0, 80.0), (3.0, 30.0))):
        lams = np.linspace(l0, l1, 50)
        omegas = np.linspace(w0, w1, 50)
        grid = np.array([[thermal_qmi(om, lam, T) for om in omegas]
                         for lam in lams])
        assert np.all(np.diff(grid, axis=1) >= -1e-12), f"omega direction, T={T}"
        assert np.all(np.diff(grid, axis=0) <= 1e-12), f"lambda direction, T={T}"
        assert grid.max() > 1e-3


def test_thermal_weight_functions_reject_bad_arguments():
    with pytest.raises(ValueError):
        thermal_weights(1.0, 1.0, 0.0)
    with pytest.raises(ValueError):
        low_temperature_concurrence(1.0, 0.0)
