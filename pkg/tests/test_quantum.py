import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from prbox import (
    OPTIMAL_CHSH_ANGLES,
    MeasurementAngles,
    TwoQubitState,
    chsh_value,
    correlation,
    max_chsh_over_random_angles,
    no_signaling,
    singlet,
    singlet_box,
    validate,
)

TSIRELSON = 2.0 * math.sqrt(2.0)

angle = st.floats(-2 * math.pi, 2 * math.pi, allow_nan=False)


def oracle_projector_table(angles):
    """Independent path: full 2x2 projector matrices and a 4x4 kron."""
    sz = np.array([[1.0, 0.0], [0.0, -1.0]])
    sx = np.array([[0.0, 1.0], [1.0, 0.0]])
    psi = singlet().amplitudes

    def projector(theta, outcome):
        sign = 1.0 if outcome == 0 else -1.0
        return (np.eye(2) + sign * (math.cos(theta) * sz + math.sin(theta) * sx)) / 2.0

    p = np.zeros((2, 2, 2, 2))
    for x, y, a, b in np.ndindex(2, 2, 2, 2):
        op = np.kron(projector(angles.a_angle(x), a), projector(angles.b_angle(y), b))
        p[x, y, a, b] = float(np.real(np.conj(psi) @ op @ psi))
    return p


class TestSingletState:
    def test_amplitudes(self):
        amp = singlet().amplitudes
        inv = 1.0 / math.sqrt(2.0)
        assert amp[0] == 0.0
        assert amp[1] == pytest.approx(inv)
        assert amp[2] == pytest.approx(-inv)
        assert amp[3] == 0.0

    def test_normalized(self):
        assert float(np.sum(np.abs(singlet().amplitudes) ** 2)) == pytest.approx(1.0)

    def test_swap_antisymmetry(self):
        amp = singlet().amplitudes.reshape(2, 2)
        assert np.allclose(amp.T, -amp)

    def test_unnormalized_state_rejected(self):
        with pytest.raises(ValueError):
            TwoQubitState(np.array([1.0, 1.0, 0.0, 0.0], dtype=complex))

    def test_non_finite_angle_rejected(self):
        with pytest.raises(ValueError):
            MeasurementAngles(0.0, math.nan, 0.0, 0.0)


class TestSingletBox:
    def test_equal_angles_never_agree(self):
        for theta in (0.0, 0.4, math.pi / 3, 2.2):
            box = singlet_box(MeasurementAngles(theta, theta, theta, theta))
            for x, y in np.ndindex(2, 2):
                assert box.prob(x, y, 0, 0) == pytest.approx(0.0, abs=1e-12)
                assert box.prob(x, y, 1, 1) == pytest.approx(0.0, abs=1e-12)

    def test_correlation_matches_closed_form_on_grid(self):
        # oracle: singlet correlation is -cos(theta_a - theta_b)
        grid = np.linspace(0.0, 2.0 * math.pi, 10, endpoint=False)
        pairs = 0
        for ta in grid:
            for tb in grid:
                box = singlet_box(MeasurementAngles(ta, 0.0, tb, 0.0))
                assert correlation(box, 0, 0) == pytest.approx(
                    -math.cos(ta - tb), abs=1e-12
                )
                pairs += 1
        assert pairs == 100

    def test_matches_explicit_projector_arithmetic(self):
        rng = np.random.default_rng(5)
        for _ in range(20):
            angles = MeasurementAngles(*rng.uniform(0, 2 * math.pi, size=4))
            box = singlet_box(angles)
            assert np.allclose(box.p, oracle_projector_table(angles), atol=1e-12)

    @given(angle, angle, angle, angle)
    @settings(max_examples=60, deadline=None)
    def test_always_valid_and_no_signaling(self, a0, a1, b0, b1):
        box = singlet_box(MeasurementAngles(a0, a1, b0, b1))
        assert validate(box).ok
        assert no_signaling(box).holds

    @given(angle, angle, angle, angle, angle)
    @settings(max_examples=40, deadline=None)
    def test_rotational_covariance(self, a0, a1, b0, b1, offset):
        base = singlet_box(MeasurementAngles(a0, a1, b0, b1))
        shifted = singlet_box(
            MeasurementAngles(a0 + offset, a1 + offset, b0 + offset, b1 + offset)
        )
        assert np.allclose(base.p, shifted.p, atol=1e-9)


class TestTsirelson:
    def test_optimal_angles_attain_the_quantum_bound(self):
        result = chsh_value(singlet_box(OPTIMAL_CHSH_ANGLES))
        assert result.s == pytest.approx(TSIRELSON, abs=1e-9)

    def test_random_search_never_exceeds_the_bound(self):
        best, angles = max_chsh_over_random_angles(2000, seed=13)
        assert best <= TSIRELSON + 1e-6
        assert best > 2.0  # the search does find genuinely nonclassical points
        assert isinstance(angles, MeasurementAngles)

    def test_search_requires_points(self):
        with pytest.raises(ValueError):
            max_chsh_over_random_angles(0, seed=1)
