"""Two-qubit singlet statistics for planar spin measurements.

Measurement directions are restricted to the x-z plane, so one angle per
setting: the spin observable at angle theta is cos(theta) sigma_z +
sin(theta) sigma_x, with +1 eigenvector (cos(theta/2), sin(theta/2)) and
-1 eigenvector (-sin(theta/2), cos(theta/2)).  The eigenvalue +1 maps to
outcome 0 and -1 to outcome 1, so signed outcomes are recovered by
a' = 1 - 2a.  Joint probabilities are rank-1 projector expectations
computed directly on the 4-amplitude state vector; the problem size is
fixed, so there is no general tensor machinery.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .box import BoxTable
from .chsh import chsh_value


@dataclass(frozen=True)
class MeasurementAngles:
    """Planar analyzer angles in radians: A-side for x=0,1; B-side for y=0,1."""

    theta_a0: float
    theta_a1: float
    theta_b0: float
    theta_b1: float

    def __post_init__(self) -> None:
        for name in ("theta_a0", "theta_a1", "theta_b0", "theta_b1"):
            value = getattr(self, name)
            if not math.isfinite(value):
                raise ValueError(f"{name} must be finite, got {value!r}")

    def a_angle(self, x: int) -> float:
        return (self.theta_a0, self.theta_a1)[x]

    def b_angle(self, y: int) -> float:
        return (self.theta_b0, self.theta_b1)[y]


@dataclass(frozen=True, eq=False)
class TwoQubitState:
    """State vector over the product basis (|00>, |01>, |10>, |11>)."""

    amplitudes: np.ndarray

    def __post_init__(self) -> None:
        amp = np.array(self.amplitudes, dtype=complex)
        if amp.shape != (4,):
            raise ValueError(f"state needs 4 amplitudes, got shape {amp.shape}")
        norm = float(np.sum(np.abs(amp) ** 2))
        if abs(norm - 1.0) > 1e-9:
            raise ValueError(f"state must be normalized, got |psi|^2 = {norm}")
        amp.setflags(write=False)
        object.__setattr__(self, "amplitudes", amp)


def singlet() -> TwoQubitState:
    """The antisymmetric two-spin state (|01> - |10>) / sqrt(2)."""
    inv_sqrt2 = 1.0 / math.sqrt(2.0)
    return TwoQubitState(np.array([0.0, inv_sqrt2, -inv_sqrt2, 0.0], dtype=complex))


# Attains s = +2*sqrt(2) under the fixed combination E00 + E01 + E10 - E11,
# since the singlet correlation is -cos(theta_a - theta_b).
OPTIMAL_CHSH_ANGLES = MeasurementAngles(
    0.0, math.pi / 2, -3 * math.pi / 4, 3 * math.pi / 4
)


def _eigenvectors(theta: float) -> np.ndarray:
    """Rows: outcome (0 for +1, 1 for -1) -> eigenvector of the planar spin
    observable at ``theta``."""
    c = math.cos(theta / 2.0)
    s = math.sin(theta / 2.0)
    return np.array([[c, s], [-s, c]])


def singlet_box(angles: MeasurementAngles) -> BoxTable:
    """Joint outcome table of planar spin measurements on the singlet.

    p(x, y, a, b) = |<v_a(theta_Ax) (x) v_b(theta_By) | psi>|^2, the
    expectation of the corresponding rank-1 projector pair.
    """
    m = singlet().amplitudes.reshape(2, 2)
    va = np.stack([_eigenvectors(angles.a_angle(x)) for x in (0, 1)])
    vb = np.stack([_eigenvectors(angles.b_angle(y)) for y in (0, 1)])
    amp = np.einsum("xai,ij,ybj->xyab", va, m, vb)
    label = (
        f"singlet:{angles.theta_a0:g},{angles.theta_a1:g},"
        f"{angles.theta_b0:g},{angles.theta_b1:g}"
    )
    return BoxTable(np.abs(amp) ** 2, label)


def max_chsh_over_random_angles(
    n_points: int, seed: int
) -> tuple[float, MeasurementAngles]:
    """Random search over angle quadruples; returns (max |s|, argmax angles).

    Goes through the full box construction for every point so the search
    exercises the same arithmetic the rest of the package consumes.
    """
    if n_points < 1:
        raise ValueError(f"n_points must be positive, got {n_points}")
    rng = np.random.default_rng(seed)
    samples = rng.uniform(0.0, 2.0 * math.pi, size=(n_points, 4))
    best_abs = -1.0
    best: MeasurementAngles | None = None
    for row in samples:
        angles = MeasurementAngles(*row)
        s = chsh_value(singlet_box(angles)).s
        if abs(s) > best_abs:
            best_abs = abs(s)
            best = angles
    assert best is not None
    return best_abs, best
