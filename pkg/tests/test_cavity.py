"""Scattering-matrix construction: fixtures, oracle equivalence, unitarity."""

import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ringcavity import (
    CavityConfig,
    InvalidConfigError,
    SingularCavityError,
    SingularSystemError,
    cascade_matrix,
    closed_form_matrix,
    resonance_denominator,
    verify_unitarity,
)


def three_port_rows(rho: float, phases) -> np.ndarray:
    """Hand-coded 3-port input-output relations, written out row by row."""
    p1, p2, p3 = phases
    tau = 1.0 - rho
    phi = p1 + p2 + p3
    a3 = 1.0 + rho**1.5 * np.exp(1j * phi)
    diag = np.sqrt(rho) * (1.0 + np.sqrt(rho) * np.exp(1j * phi))
    return np.array(
        [
            [diag, -tau * np.sqrt(rho) * np.exp(1j * (p1 + p3)), tau * np.exp(1j * p1)],
            [tau * np.exp(1j * p2), diag, -tau * np.sqrt(rho) * np.exp(1j * (p1 + p2))],
            [-tau * np.sqrt(rho) * np.exp(1j * (p2 + p3)), tau * np.exp(1j * p3), diag],
        ]
    ) / a3


def four_port_first_row(rho: float, phases) -> np.ndarray:
    """Hand-coded first row of the 4-port matrix."""
    p1, p2, p3, p4 = phases
    tau = 1.0 - rho
    phi = p1 + p2 + p3 + p4
    a4 = 1.0 - rho**2 * np.exp(1j * phi)
    return np.array(
        [
            np.sqrt(rho) * (1.0 - rho * np.exp(1j * phi)),
            tau * rho * np.exp(1j * (p1 + p3 + p4)),
            -tau * np.sqrt(rho) * np.exp(1j * (p1 + p4)),
            tau * np.exp(1j * p1),
        ]
    ) / a4


class TestFixtures:
    def test_three_port_closed_form_matches_handwritten_relations(self):
        config = CavityConfig(3, 0.37, (0.3, 1.1, -0.4))
        expected = three_port_rows(config.rho, config.phases)
        assert np.abs(closed_form_matrix(config).entries - expected).max() < 1e-12

    def test_three_port_cascade_matches_handwritten_relations(self):
        config = CavityConfig(3, 0.81, (2.0, 0.5, 1.7))
        expected = three_port_rows(config.rho, config.phases)
        assert np.abs(cascade_matrix(config).entries - expected).max() < 1e-12

    def test_four_port_first_row(self):
        config = CavityConfig(4, 0.62, (0.9, -0.2, 1.3, 2.2))
        expected = four_port_first_row(config.rho, config.phases)
        assert np.abs(closed_form_matrix(config).entries[0] - expected).max() < 1e-12
        assert np.abs(cascade_matrix(config).entries[0] - expected).max() < 1e-12

    def test_fully_transmissive_two_port_is_a_swap(self):
        config = CavityConfig(2, 0.0, (0.0, 0.0))
        expected = np.array([[0.0, 1.0], [1.0, 0.0]])
        assert np.abs(closed_form_matrix(config).entries - expected).max() < 1e-12
        assert np.abs(cascade_matrix(config).entries - expected).max() < 1e-12

    def test_fully_reflective_mirrors_decouple_the_ring(self):
        config = CavityConfig.uniform(2, 1.0, math.pi / 2)
        matrix = cascade_matrix(config)
        assert abs(abs(matrix.entry(1, 1)) - 1.0) < 1e-12
        assert abs(matrix.entry(1, 2)) < 1e-12

    def test_a3_specialization(self):
        config = CavityConfig(3, 0.44, (0.2, 0.7, 1.9))
        expected = 1.0 + 0.44**1.5 * np.exp(1j * config.total_phase())
        assert abs(resonance_denominator(config) - expected) < 1e-15


class TestOracleEquivalence:
    def test_five_port_random_phases(self):
        rng = np.random.default_rng(42)
        config = CavityConfig(5, 0.7, tuple(rng.uniform(0, 2 * np.pi, 5)))
        closed = closed_form_matrix(config).entries
        cascade = cascade_matrix(config).entries
        assert np.abs(closed - cascade).max() < 1e-12

    def test_six_port_unitary_and_equivalent(self):
        config = CavityConfig(6, 0.3, tuple(k / 10 for k in range(1, 7)))
        cascade = cascade_matrix(config)
        assert verify_unitarity(cascade) < 1e-12
        assert np.abs(cascade.entries - closed_form_matrix(config).entries).max() < 1e-12

    @settings(max_examples=100, deadline=None)
    @given(
        n=st.integers(2, 8),
        rho=st.floats(0.0, 0.95),
        seed=st.integers(0, 2**32 - 1),
    )
    def test_constructions_agree_and_are_unitary(self, n, rho, seed):
        phases = np.random.default_rng(seed).uniform(0, 2 * np.pi, n)
        config = CavityConfig(n, rho, tuple(phases))
        closed = closed_form_matrix(config)
        cascade = cascade_matrix(config)
        assert np.abs(closed.entries - cascade.entries).max() < 1e-12
        assert verify_unitarity(closed) < 1e-12
        assert verify_unitarity(cascade) < 1e-12

    def test_columns_conserve_energy(self):
        config = CavityConfig(4, 0.55, (0.1, 0.4, 1.0, 2.5))
        entries = closed_form_matrix(config).entries
        norms = (np.abs(entries) ** 2).sum(axis=0)
        assert np.abs(norms - 1.0).max() < 1e-12

    def test_cyclic_covariance(self):
        # Shifting the phase vector by one arm permutes both port labels.
        rng = np.random.default_rng(3)
        phases = rng.uniform(0, 2 * np.pi, 5)
        base = cascade_matrix(CavityConfig(5, 0.6, tuple(phases))).entries
        shifted = cascade_matrix(CavityConfig(5, 0.6, tuple(np.roll(phases, -1)))).entries
        assert np.abs(shifted - np.roll(base, (-1, -1), axis=(0, 1))).max() < 1e-12


class TestUnitarityCheck:
    def test_identity_has_zero_defect(self):
        assert verify_unitarity(np.eye(4, dtype=complex)) == 0.0

    def test_high_reflectivity_matrix(self):
        phases = np.random.default_rng(11).uniform(0, 2 * np.pi, 4)
        matrix = closed_form_matrix(CavityConfig(4, 0.99, tuple(phases)))
        assert verify_unitarity(matrix) < 1e-12

    def test_detects_a_broken_matrix(self):
        config = CavityConfig(3, 0.5, (0.3, 0.6, 0.9))
        broken = closed_form_matrix(config).entries.copy()
        broken[0, 0] = 0.0
        assert verify_unitarity(broken) > 0.0


class TestValidationAndErrors:
    @pytest.mark.parametrize("n", [0, 1, -3])
    def test_rejects_too_few_ports(self, n):
        with pytest.raises(InvalidConfigError):
            CavityConfig(n, 0.5, (0.0,) * max(n, 0))

    @pytest.mark.parametrize("rho", [-0.1, 1.5])
    def test_rejects_reflectivity_outside_unit_interval(self, rho):
        with pytest.raises(InvalidConfigError):
            CavityConfig(2, rho, (0.0, 0.0))

    def test_rejects_wrong_phase_count(self):
        with pytest.raises(InvalidConfigError):
            CavityConfig(3, 0.5, (0.0, 0.0))

    def test_singular_cavity_closed_form(self):
        with pytest.raises(SingularCavityError):
            closed_form_matrix(CavityConfig.uniform(2, 1.0, 0.0))

    def test_singular_cavity_cascade(self):
        with pytest.raises(SingularSystemError):
            cascade_matrix(CavityConfig.uniform(3, 1.0, math.pi))

    def test_tau_and_total_phase(self):
        config = CavityConfig(3, 0.25, (0.1, 0.2, 0.3))
        assert config.tau == pytest.approx(0.75)
        assert config.total_phase() == pytest.approx(0.6)
