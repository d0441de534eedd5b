"""Closed-form catalyst test for 4x4 incomparable pairs with 2x2 catalysts.

For a length-4 incomparable pair, a 2x2 catalyst (c, 1-c) exists iff three
prefix conditions hold and an explicitly computable interval of c values is
nonempty; every c in that interval is a catalyst. The sweep and region
searches must agree with this module exactly on their common domain.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .core import ClosedInterval, Comparison, SchmidtVector, compare
from .errors import NotIncomparable, WrongDimension

_HALF = Fraction(1, 2)
_ONE = Fraction(1)


@dataclass(frozen=True)
class NecessaryConditionReport:
    """Outcome of the three prefix conditions (and the ordering chain they imply).

    top1_le:   largest source coefficient does not exceed the target's
    top2_gt:   two largest source coefficients strictly exceed the target's
    top3_le:   three largest source coefficients do not exceed the target's
    chain_ok:  interleaving b1 >= a1 >= a2 > b2 >= b3 > a3 >= a4 >= b4
    """

    top1_le: bool
    top2_gt: bool
    top3_le: bool
    chain_ok: bool

    @property
    def holds(self) -> bool:
        return self.top1_le and self.top2_gt and self.top3_le


def _gate(psi1: SchmidtVector, psi2: SchmidtVector) -> tuple[SchmidtVector, SchmidtVector]:
    if len(psi1) > 4 or len(psi2) > 4:
        raise WrongDimension(
            f"closed form handles dimension 4, got {len(psi1)} and {len(psi2)}"
        )
    a, b = psi1.padded(4), psi2.padded(4)
    if compare(a, b) is not Comparison.INCOMPARABLE:
        raise NotIncomparable("the pair is already ordered; no catalyst question")
    return a, b


def _ordering_chain(a, b) -> bool:
    return (
        b[0] >= a[0] >= a[1] > b[1] >= b[2] > a[2] >= a[3] >= b[3]
    )


def necessary_conditions_4x4(
    psi1: SchmidtVector, psi2: SchmidtVector
) -> NecessaryConditionReport:
    """Evaluate the three exact prefix conditions a catalyzable pair must meet."""
    a, b = _gate(psi1, psi2)
    top1 = a[0] <= b[0]
    top2 = a[0] + a[1] > b[0] + b[1]
    top3 = a[0] + a[1] + a[2] <= b[0] + b[1] + b[2]
    return NecessaryConditionReport(
        top1_le=top1,
        top2_gt=top2,
        top3_le=top3,
        chain_ok=_ordering_chain(a, b),
    )


def _interval_bounds(a, b) -> tuple[Fraction, Fraction]:
    """Lower/upper bounds on the catalyst parameter c, given the gate passed.

    The three denominators below are strictly positive whenever the prefix
    conditions hold; that is asserted loudly rather than left to a
    ZeroDivisionError. a[2] + a[3] == 0 is the one legitimate degenerate
    corner (rank-2 source state, which forces b[3] == 0): the corresponding
    upper bound is vacuous and is omitted.
    """
    den_lo = b[1] + b[2]
    den_gap = b[2] - a[2]
    den_mid = a[1] - b[1]
    if den_lo <= 0 or den_gap <= 0 or den_mid <= 0:
        raise ArithmeticError(
            "prefix-condition gate was bypassed: interval bounds are undefined"
        )
    lower = max(
        (a[0] + a[1] - b[0]) / den_lo,
        1 - (a[3] - b[3]) / den_gap,
    )
    uppers = [
        b[0] / (a[0] + a[1]),
        (b[0] - a[0]) / den_mid,
    ]
    tail = a[2] + a[3]
    if tail > 0:
        uppers.append(1 - b[3] / tail)
    return lower, min(uppers)


def catalyst_interval_4x4(
    psi1: SchmidtVector, psi2: SchmidtVector
) -> ClosedInterval | None:
    """The complete set of 2x2 catalyst parameters, or None when none exist.

    Every c in the returned interval yields a verified catalyst (c, 1-c).
    """
    a, b = _gate(psi1, psi2)
    report = necessary_conditions_4x4(a, b)
    if not report.holds:
        return None
    lower, upper = _interval_bounds(a.entries, b.entries)
    lo = max(lower, _HALF)
    hi = min(upper, _ONE)
    if lo > hi:
        return None
    return ClosedInterval(lo, hi)
