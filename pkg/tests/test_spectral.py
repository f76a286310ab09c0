import math

import numpy as np
import pytest

from hexwalk import (
    CoinParams,
    CoinState,
    Momentum,
    Site,
    build_coin,
    eigenphases_closed_form,
    evolve,
    fourier_evolve,
    inverse_transform_site,
    r_matrix,
    two_step_operator,
)

from conftest import random_state, random_theta

TWO_PI = 2.0 * math.pi


def phase_distance(p, q):
    d = abs(p - q) % TWO_PI
    return min(d, TWO_PI - d)


class TestMomentum:
    def test_wraps_into_fundamental_domain(self):
        m = Momentum(math.pi, -3 * math.pi / 2)
        assert m.a == -math.pi
        assert abs(m.b - math.pi / 2) < 1e-12

    def test_in_range_values_unchanged(self):
        m = Momentum(0.5, -0.25)
        assert (m.a, m.b) == (0.5, -0.25)


class TestRMatrix:
    def test_zero_momentum_is_identity(self):
        np.testing.assert_allclose(r_matrix(Momentum(0, 0)), np.eye(3), atol=1e-15)

    def test_quarter_turn(self):
        np.testing.assert_allclose(
            r_matrix(Momentum(math.pi / 2, 0.0)), np.diag([1, 1j, 1]), atol=1e-15
        )

    def test_unimodular(self):
        rng = np.random.default_rng(2)
        for _ in range(20):
            m = Momentum(rng.uniform(-math.pi, math.pi), rng.uniform(-math.pi, math.pi))
            assert abs(abs(np.linalg.det(r_matrix(m))) - 1.0) < 1e-13


class TestTwoStepOperator:
    def test_zero_momentum_is_identity(self, grover_coin):
        op = two_step_operator(Momentum(0, 0), grover_coin)
        np.testing.assert_allclose(op.matrix, np.eye(3), atol=1e-14)
        assert all(phase_distance(nu, 0.0) < 1e-10 for nu in op.eigenphases)

    def test_grover_example_point(self, grover_coin, grover_params):
        # dispersion at (pi/2, pi/3): cos(nu2) = -5/9
        m = Momentum(math.pi / 2, math.pi / 3)
        op = two_step_operator(m, grover_coin)
        expected = math.acos(-5 / 9)
        assert abs(op.eigenphases[1] - expected) < 1e-12
        closed = eigenphases_closed_form(m, grover_params)
        assert abs(closed[1] - expected) < 1e-14

    def test_unitary_and_eigen_residuals(self):
        rng = np.random.default_rng(17)
        for _ in range(25):
            params = CoinParams(random_theta(rng))
            coin = build_coin(params)
            m = Momentum(rng.uniform(-math.pi, math.pi), rng.uniform(-math.pi, math.pi))
            op = two_step_operator(m, coin)
            np.testing.assert_allclose(
                op.matrix @ op.matrix.conj().T, np.eye(3), atol=1e-12
            )
            # flat band first, stored as exactly zero phase
            assert op.eigenphases[0] == 0.0
            for j, nu in enumerate(op.eigenphases):
                v = op.eigenvectors[:, j]
                residual = op.matrix @ v - np.exp(1j * nu) * v
                assert np.max(np.abs(residual)) < 1e-10
            # orthonormal eigenbasis
            np.testing.assert_allclose(
                op.eigenvectors.conj().T @ op.eigenvectors, np.eye(3), atol=1e-10
            )

    def test_phase_labeling_and_sum(self):
        rng = np.random.default_rng(19)
        for _ in range(25):
            params = CoinParams(random_theta(rng))
            op = two_step_operator(
                Momentum(rng.uniform(-math.pi, math.pi), rng.uniform(-math.pi, math.pi)),
                build_coin(params),
            )
            nu1, nu2, nu3 = op.eigenphases
            assert 0.0 < nu2 <= math.pi or nu2 < 1e-10
            assert phase_distance(nu2 + nu3, 0.0) < 1e-10


class TestEigenphasesClosedForm:
    def test_zero_momentum(self):
        closed = eigenphases_closed_form(Momentum(0, 0), CoinParams(1.0))
        assert closed[0] == 0.0
        assert closed[1] == 0.0
        assert closed[2] == TWO_PI

    def test_band_bottom(self):
        # at (pi, 0) with theta = pi/2 the dispersion hits cos(nu2) = -1
        closed = eigenphases_closed_form(Momentum(math.pi, 0.0), CoinParams(math.pi / 2))
        assert abs(closed[1] - math.pi) < 1e-7
        assert abs(closed[2] - math.pi) < 1e-7

    def test_matches_numerical_phases(self):
        rng = np.random.default_rng(31)
        for _ in range(40):
            params = CoinParams(random_theta(rng))
            coin = build_coin(params)
            m = Momentum(rng.uniform(-math.pi, math.pi), rng.uniform(-math.pi, math.pi))
            closed = eigenphases_closed_form(m, params)
            numeric = two_step_operator(m, coin).eigenphases
            for c_phase, n_phase in zip(closed, numeric):
                assert phase_distance(c_phase, n_phase) < 1e-10


class TestFourierEvolve:
    def test_zero_pairs_identity(self, grover_coin):
        state = CoinState.uniform()
        np.testing.assert_array_equal(
            fourier_evolve(state, 0, Momentum(1.0, -0.5), grover_coin), state.as_array()
        )

    def test_zero_momentum_fixed_point(self, grover_coin):
        state = CoinState(0.6, 0.0, 0.8)
        out = fourier_evolve(state, 9, Momentum(0, 0), grover_coin)
        np.testing.assert_allclose(out, state.as_array(), atol=1e-12)

    def test_matches_repeated_matrix_power(self, grover_coin):
        m = Momentum(0.9, -2.1)
        op = two_step_operator(m, grover_coin)
        state = CoinState.normalized(0.3, -0.5j, 0.8)
        v = state.as_array()
        for _ in range(7):
            v = op.matrix @ v
        np.testing.assert_allclose(fourier_evolve(state, 7, m, grover_coin), v, atol=1e-12)

    def test_norm_preserved_for_huge_times(self, grover_coin):
        out = fourier_evolve(CoinState.uniform(), 10**6, Momentum(1.1, 0.7), grover_coin)
        assert abs(np.linalg.norm(out) - 1.0) < 1e-12


class TestInverseTransform:
    def test_zero_pairs_recovers_state(self, grover_coin):
        state = CoinState.normalized(1, 2, 3)
        out = inverse_transform_site(state, 0, 0, 0, 4, grover_coin)
        np.testing.assert_allclose(out, state.as_array(), atol=1e-13)

    def test_one_pair_matches_evolution(self, grover_coin):
        state = CoinState(0, 1, 0)
        out = inverse_transform_site(state, 1, 0, 0, 16, grover_coin)
        expected = evolve(state, 2, grover_coin).amplitude(Site.a(0, 0))
        np.testing.assert_allclose(out, expected, atol=1e-10)

    def test_three_pairs_all_sites(self):
        rng = np.random.default_rng(41)
        params = CoinParams(random_theta(rng))
        coin = build_coin(params)
        state = random_state(rng)
        wf = evolve(state, 6, coin)
        for site, amp in wf.amplitudes.items():
            out = inverse_transform_site(state, 3, site.x, site.y, 32, coin)
            np.testing.assert_allclose(out, amp, atol=1e-8)

    def test_unoccupied_site_is_zero(self, grover_coin):
        out = inverse_transform_site(CoinState(0, 1, 0), 1, 5, 5, 16, grover_coin)
        np.testing.assert_allclose(out, np.zeros(3), atol=1e-12)

    def test_grid_validation(self, grover_coin):
        with pytest.raises(ValueError):
            inverse_transform_site(CoinState(0, 1, 0), 1, 0, 0, 0, grover_coin)
