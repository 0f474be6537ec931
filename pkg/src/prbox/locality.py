"""Witness-bearing locality analyses of bipartite boxes.

Five checks, each relative to a comparison tolerance ``eps``:

* ``no_signaling``: each party's outcome marginal is independent of the
  remote setting.
* ``parameter_independence``: the same marginal condition under its other
  name; verdicts are identical to ``no_signaling`` by construction and the
  operation exists so reports carry both vocabularies.
* ``outcome_independence``: conditioning on the remote outcome does not
  move single-party probabilities, wherever the conditioning event has
  positive probability.  Undefined conditionals are skipped, not counted
  as violations.
* ``bell_factorizable``: the joint table is the product of an x-only
  marginal for A and a y-only marginal for B.  Holds exactly when both
  outcome independence and parameter independence hold.
* ``conditioned_dependence``: conditional single-party probabilities given
  the remote *outcome* still react to the remote *setting*.  A box can
  pass the marginal parameter-independence test and still show this
  conditioned form of dependence; both are reported.

Witness convention: a witness row serializes as [x, y, a, b, lhs, rhs].
Comparisons that range over a binary coordinate record the lhs context
(coordinate value 0), with the rhs taken at value 1; an outcome slot that
does not enter the comparison holds -1.  ``Witness.side`` ("A", "B", or
"AB" for joint-vs-product comparisons) records which party's quantity was
compared so any stored row can be recomputed exactly; it is metadata and
is not serialized.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .box import (
    DEFAULT_EPS,
    BoxTable,
    _check_eps,
    conditional,
    conditional_b,
    marginal_a,
    marginal_b,
)


@dataclass(frozen=True)
class Witness:
    x: int
    y: int
    a: int
    b: int
    lhs: float
    rhs: float
    side: str = "A"

    def as_row(self) -> list:
        return [self.x, self.y, self.a, self.b, self.lhs, self.rhs]


def _ordered(witnesses: list[Witness]) -> tuple[Witness, ...]:
    return tuple(sorted(witnesses, key=lambda w: (w.x, w.y, w.a, w.b, w.side)))


@dataclass(frozen=True)
class Verdict:
    holds: bool
    witnesses: tuple[Witness, ...] = ()

    def __post_init__(self) -> None:
        if self.holds != (len(self.witnesses) == 0):
            raise ValueError("a verdict is violated exactly when it has witnesses")

    @property
    def status(self) -> str:
        return "holds" if self.holds else "violated"

    def as_dict(self) -> dict:
        return {
            "status": self.status,
            "witnesses": [w.as_row() for w in self.witnesses],
        }


def no_signaling(t: BoxTable, eps: float = DEFAULT_EPS) -> Verdict:
    """Marginals of each party must not depend on the other party's setting.

    A-side: P(A=a | x, y) equal for y=0 and y=1 at every (x, a).
    B-side: P(B=b | x, y) equal for x=0 and x=1 at every (y, b).
    """
    eps = _check_eps(eps)
    witnesses: list[Witness] = []
    for x in (0, 1):
        for a in (0, 1):
            lhs = marginal_a(t, x, 0, a)
            rhs = marginal_a(t, x, 1, a)
            if abs(lhs - rhs) > eps:
                witnesses.append(Witness(x, 0, a, -1, lhs, rhs, side="A"))
    for y in (0, 1):
        for b in (0, 1):
            lhs = marginal_b(t, 0, y, b)
            rhs = marginal_b(t, 1, y, b)
            if abs(lhs - rhs) > eps:
                witnesses.append(Witness(0, y, -1, b, lhs, rhs, side="B"))
    return Verdict(not witnesses, _ordered(witnesses))


def parameter_independence(t: BoxTable, eps: float = DEFAULT_EPS) -> Verdict:
    """P(A=a | x, y) = P(A=a | x) and P(B=b | x, y) = P(B=b | y).

    This is the same marginal condition as :func:`no_signaling`; the two
    operations return identical verdicts on every table.
    """
    return no_signaling(t, eps)


def outcome_independence(t: BoxTable, eps: float = DEFAULT_EPS) -> Verdict:
    """P(A=a | x, y; B=b) = P(A=a | x, y), and symmetrically for B.

    Cells whose conditioning outcome has zero probability are vacuous and
    skipped.
    """
    eps = _check_eps(eps)
    witnesses: list[Witness] = []
    for x, y, a, b in np.ndindex(2, 2, 2, 2):
        cond_a = conditional(t, x, y, a, b, eps)
        if cond_a is not None:
            marg = marginal_a(t, x, y, a)
            if abs(cond_a - marg) > eps:
                witnesses.append(Witness(x, y, a, b, cond_a, marg, side="A"))
        cond_b = conditional_b(t, x, y, a, b, eps)
        if cond_b is not None:
            marg = marginal_b(t, x, y, b)
            if abs(cond_b - marg) > eps:
                witnesses.append(Witness(x, y, a, b, cond_b, marg, side="B"))
    return Verdict(not witnesses, _ordered(witnesses))


def bell_factorizable(t: BoxTable, eps: float = DEFAULT_EPS) -> Verdict:
    """P(A=a, B=b | x, y) = P(A=a | x) * P(B=b | y).

    The single-party marginals are first certified setting-independent; if
    they are not, the verdict is violated with the no-signaling witnesses.
    Otherwise each cell is compared against marginal_a(x, 0, a) *
    marginal_b(0, y, b).
    """
    eps = _check_eps(eps)
    ns = no_signaling(t, eps)
    if not ns.holds:
        return Verdict(False, ns.witnesses)
    witnesses: list[Witness] = []
    for x, y, a, b in np.ndindex(2, 2, 2, 2):
        joint = t.prob(x, y, a, b)
        product = marginal_a(t, x, 0, a) * marginal_b(t, 0, y, b)
        if abs(joint - product) > eps:
            witnesses.append(Witness(x, y, a, b, joint, product, side="AB"))
    return Verdict(not witnesses, _ordered(witnesses))


def conditioned_dependence(t: BoxTable, eps: float = DEFAULT_EPS) -> Verdict:
    """Dependence of conditional outcome probabilities on the remote setting.

    Violated (dependence present) when P(A=a | x, y; B=b) differs between
    y=0 and y=1 with both conditionals defined, or symmetrically when
    P(B=b | x, y; A=a) differs between x=0 and x=1.  This captures the
    setting dependence that survives after conditioning on the remote
    outcome, which the plain marginal test cannot see.
    """
    eps = _check_eps(eps)
    witnesses: list[Witness] = []
    for x, a, b in np.ndindex(2, 2, 2):
        lhs = conditional(t, x, 0, a, b, eps)
        rhs = conditional(t, x, 1, a, b, eps)
        if lhs is not None and rhs is not None and abs(lhs - rhs) > eps:
            witnesses.append(Witness(x, 0, a, b, lhs, rhs, side="A"))
    for y, a, b in np.ndindex(2, 2, 2):
        lhs = conditional_b(t, 0, y, a, b, eps)
        rhs = conditional_b(t, 1, y, a, b, eps)
        if lhs is not None and rhs is not None and abs(lhs - rhs) > eps:
            witnesses.append(Witness(0, y, a, b, lhs, rhs, side="B"))
    return Verdict(not witnesses, _ordered(witnesses))


@dataclass(frozen=True)
class LocalityReport:
    no_signaling: Verdict
    outcome_independence: Verdict
    parameter_independence: Verdict
    bell_factorizable: Verdict
    conditioned_parameter_dependence: Verdict

    def as_dict(self) -> dict:
        return {
            "no_signaling": self.no_signaling.as_dict(),
            "outcome_independence": self.outcome_independence.as_dict(),
            "parameter_independence": self.parameter_independence.as_dict(),
            "bell_factorizable": self.bell_factorizable.as_dict(),
            "conditioned_parameter_dependence": (
                self.conditioned_parameter_dependence.as_dict()
            ),
        }


def locality_report(t: BoxTable, eps: float = DEFAULT_EPS) -> LocalityReport:
    """Run all five analyses on one table."""
    return LocalityReport(
        no_signaling=no_signaling(t, eps),
        outcome_independence=outcome_independence(t, eps),
        parameter_independence=parameter_independence(t, eps),
        bell_factorizable=bell_factorizable(t, eps),
        conditioned_parameter_dependence=conditioned_dependence(t, eps),
    )
