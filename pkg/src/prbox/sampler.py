"""Seeded Monte Carlo sampling of boxes and hidden-variable models.

Reproducibility contract: streams come from the Philox 4x64 counter-based
generator (numpy's implementation of the published algorithm), keyed by
(seed mod 2**64, setting-pair index 2x + y).  Each setting pair owns an
independent stream, so per-pair sampling may run concurrently and still
reproduce the sequential result bit for bit.  One trial consumes one
double u in [0, 1): box sampling picks the outcome cell by inverse CDF
over the four (a, b) cells in lexicographic order; hidden-variable
sampling spends u on the hidden variable instead (lambda = 0 iff u < p0)
and then applies the deterministic response functions.  Identical
(input, trials, seed) therefore yield identical tables and records.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

import numpy as np

from .box import BoxTable
from .chsh import ChshResult, chsh_value
from .hidden_variable import HVModel

SETTING_PAIRS = ((0, 0), (0, 1), (1, 0), (1, 1))


class InsufficientTrialsError(ValueError):
    """An estimate was requested from a table with an unsampled setting pair."""


@dataclass(frozen=True)
class SampleRecord:
    """One trial; lambda_value is present only for hidden-variable runs."""

    x: int
    y: int
    a: int
    b: int
    lambda_value: int | None = None


@dataclass(frozen=True, eq=False)
class EmpiricalTable:
    """Outcome counts per setting pair from a seeded run."""

    counts: np.ndarray
    trials_per_setting: np.ndarray
    seed: int

    def __post_init__(self) -> None:
        counts = np.array(self.counts, dtype=np.int64)
        trials = np.array(self.trials_per_setting, dtype=np.int64)
        if counts.shape != (2, 2, 2, 2):
            raise ValueError(f"counts must have shape (2, 2, 2, 2), got {counts.shape}")
        if trials.shape != (2, 2):
            raise ValueError(f"trials must have shape (2, 2), got {trials.shape}")
        if np.any(counts < 0) or np.any(trials < 0):
            raise ValueError("counts and trials must be nonnegative")
        sums = counts.sum(axis=(2, 3))
        if np.any(sums != trials):
            raise ValueError(
                f"per-setting counts {sums.tolist()} do not match trials "
                f"{trials.tolist()}"
            )
        counts.setflags(write=False)
        trials.setflags(write=False)
        object.__setattr__(self, "counts", counts)
        object.__setattr__(self, "trials_per_setting", trials)

    def frequencies(self) -> np.ndarray:
        for x, y in SETTING_PAIRS:
            if self.trials_per_setting[x, y] < 1:
                raise InsufficientTrialsError(
                    f"no trials recorded for setting pair (x={x}, y={y})"
                )
        return self.counts / self.trials_per_setting[:, :, None, None]

    def as_box(self, label: str | None = None) -> BoxTable:
        if label is None:
            label = f"empirical(seed={self.seed})"
        return BoxTable(self.frequencies(), label)

    def to_csv(self) -> str:
        lines = ["x,y,a,b,count"]
        for x, y, a, b in np.ndindex(2, 2, 2, 2):
            lines.append(f"{x},{y},{a},{b},{self.counts[x, y, a, b]}")
        return "\n".join(lines) + "\n"


def _check_trials(trials_per_setting: int) -> int:
    trials = int(trials_per_setting)
    if trials < 1:
        raise ValueError(f"trials_per_setting must be >= 1, got {trials_per_setting}")
    return trials


def _pair_stream(seed: int, x: int, y: int) -> np.random.Generator:
    key = np.array([int(seed) % 2**64, 2 * x + y], dtype=np.uint64)
    return np.random.Generator(np.random.Philox(key=key))


def _draw_cells(t: BoxTable, x: int, y: int, trials: int, seed: int) -> np.ndarray:
    """Cell indices 2a + b for ``trials`` draws at setting pair (x, y)."""
    cdf = np.cumsum(np.clip(t.p[x, y].reshape(4), 0.0, None))
    cdf[-1] = 1.0
    u = _pair_stream(seed, x, y).random(trials)
    return np.searchsorted(cdf, u, side="right")


def _draw_lambdas(m: HVModel, x: int, y: int, trials: int, seed: int) -> np.ndarray:
    u = _pair_stream(seed, x, y).random(trials)
    return (u >= m.dist.p0).astype(np.int64)


def _hv_outcomes(
    m: HVModel, x: int, y: int, lambdas: np.ndarray
) -> tuple[np.ndarray, np.ndarray]:
    a_by_lam = np.array([m.respond_a(x, y, 0), m.respond_a(x, y, 1)])
    b_by_lam = np.array([m.respond_b(x, y, 0), m.respond_b(x, y, 1)])
    return a_by_lam[lambdas], b_by_lam[lambdas]


def sample_box(t: BoxTable, trials_per_setting: int, seed: int) -> EmpiricalTable:
    """Draw outcome pairs from the exact table, per setting pair."""
    trials = _check_trials(trials_per_setting)
    counts = np.zeros((2, 2, 2, 2), dtype=np.int64)
    for x, y in SETTING_PAIRS:
        cells = _draw_cells(t, x, y, trials, seed)
        counts[x, y] = np.bincount(cells, minlength=4).reshape(2, 2)
    return EmpiricalTable(counts, np.full((2, 2), trials, dtype=np.int64), seed)


def sample_box_records(
    t: BoxTable, trials_per_setting: int, seed: int
) -> list[SampleRecord]:
    """Per-trial records for the same stream :func:`sample_box` consumes."""
    trials = _check_trials(trials_per_setting)
    records = []
    for x, y in SETTING_PAIRS:
        for cell in _draw_cells(t, x, y, trials, seed):
            records.append(SampleRecord(x, y, int(cell) >> 1, int(cell) & 1))
    return records


def sample_hv(m: HVModel, trials_per_setting: int, seed: int) -> EmpiricalTable:
    """Draw the hidden variable per trial, then apply the response functions."""
    trials = _check_trials(trials_per_setting)
    counts = np.zeros((2, 2, 2, 2), dtype=np.int64)
    for x, y in SETTING_PAIRS:
        lambdas = _draw_lambdas(m, x, y, trials, seed)
        a, b = _hv_outcomes(m, x, y, lambdas)
        counts[x, y] = np.bincount(2 * a + b, minlength=4).reshape(2, 2)
    return EmpiricalTable(counts, np.full((2, 2), trials, dtype=np.int64), seed)


def sample_hv_records(
    m: HVModel, trials_per_setting: int, seed: int
) -> list[SampleRecord]:
    trials = _check_trials(trials_per_setting)
    records = []
    for x, y in SETTING_PAIRS:
        lambdas = _draw_lambdas(m, x, y, trials, seed)
        a, b = _hv_outcomes(m, x, y, lambdas)
        records.extend(
            SampleRecord(x, y, int(ai), int(bi), int(lam))
            for ai, bi, lam in zip(a, b, lambdas)
        )
    return records


def records_to_csv(records: Iterable[SampleRecord]) -> str:
    """Record-level dump; the lambda column is blank for box sampling."""
    lines = ["x,y,lambda,a,b"]
    for r in records:
        lam = "" if r.lambda_value is None else str(r.lambda_value)
        lines.append(f"{r.x},{r.y},{lam},{r.a},{r.b}")
    return "\n".join(lines) + "\n"


def empirical_chsh(e: EmpiricalTable) -> ChshResult:
    """CHSH combination with frequencies substituted for probabilities."""
    return chsh_value(e.as_box())


@dataclass(frozen=True)
class ComparisonResult:
    linf: float
    per_cell: dict[tuple[int, int, int, int], float]


def compare(e: EmpiricalTable, t: BoxTable) -> ComparisonResult:
    """L-infinity distance between empirical frequencies and exact
    probabilities, with signed per-cell deltas (frequency minus exact)."""
    deltas = e.frequencies() - t.p
    per_cell = {
        (x, y, a, b): float(deltas[x, y, a, b]) for x, y, a, b in np.ndindex(2, 2, 2, 2)
    }
    return ComparisonResult(float(np.max(np.abs(deltas))), per_cell)
