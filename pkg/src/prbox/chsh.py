"""Signed correlations and the CHSH combination.

Outcomes map to signs via a' = 1 - 2a (0 to +1, 1 to -1).  The combination
is fixed as s = E(0,0) + E(0,1) + E(1,0) - E(1,1): of the eight
sign-symmetric CHSH forms, the one with the minus on the (1,1) term.
``chsh_value`` returns the signed s; compare ``abs(s)`` against bounds
(2 for local models, 2*sqrt(2) for the singlet, 4 algebraically).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .box import DEFAULT_EPS, BoxTable, _check_bit, all_deterministic_boxes

# sign_products[a, b] = (1 - 2a) * (1 - 2b)
_SIGN_PRODUCTS = np.array([[1.0, -1.0], [-1.0, 1.0]])


def signed_outcome(outcome: int) -> int:
    """Map outcome 0 to +1 and 1 to -1."""
    return 1 - 2 * _check_bit(outcome, "outcome")


@dataclass(frozen=True)
class ChshResult:
    """The four signed correlations E(x, y) and their CHSH combination."""

    e00: float
    e01: float
    e10: float
    e11: float
    s: float

    def __post_init__(self) -> None:
        for name in ("e00", "e01", "e10", "e11"):
            if abs(getattr(self, name)) > 1.0 + DEFAULT_EPS:
                raise ValueError(f"{name} out of [-1, 1]: {getattr(self, name)}")
        expected = self.e00 + self.e01 + self.e10 - self.e11
        if abs(self.s - expected) > DEFAULT_EPS:
            raise ValueError(f"s={self.s} inconsistent with correlations ({expected})")

    def as_dict(self) -> dict:
        return {"e": [[self.e00, self.e01], [self.e10, self.e11]], "s": self.s}


def correlation(t: BoxTable, x: int, y: int) -> float:
    """E(x, y): expectation of the product of signed outcomes."""
    return float(
        np.sum(t.p[_check_bit(x, "x"), _check_bit(y, "y")] * _SIGN_PRODUCTS)
    )


def chsh_value(t: BoxTable) -> ChshResult:
    e = np.einsum("xyab,ab->xy", t.p, _SIGN_PRODUCTS)
    s = float(e[0, 0] + e[0, 1] + e[1, 0] - e[1, 1])
    return ChshResult(float(e[0, 0]), float(e[0, 1]), float(e[1, 0]), float(e[1, 1]), s)


@dataclass(frozen=True)
class ClassicalBoundCertificate:
    max_abs_s: float
    argmax_label: str


def classical_bound_certificate() -> ClassicalBoundCertificate:
    """Exhaustively certify the deterministic-strategy bound.

    Enumerates all 16 deterministic local boxes and returns the maximum
    |s| together with a strategy attaining it.  Every deterministic s is
    exactly +2 or -2, so the maximum is 2; mixtures cannot exceed it by
    linearity of s.
    """
    best_abs = -1.0
    best_label = ""
    for box in all_deterministic_boxes():
        s = chsh_value(box).s
        if abs(s) > best_abs:
            best_abs = abs(s)
            best_label = box.label
    return ClassicalBoundCertificate(best_abs, best_label)
