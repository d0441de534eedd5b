"""Breakpoint sweep: all 2x2 catalysts for an n x n incomparable pair.

The sorted order of the 2n products {psi_i * c, psi_i * (1-c)} only changes
when c crosses a quotient psi_i / (psi_i + psi_j). Between consecutive
crossings the order is fixed, every majorization prefix constraint is
affine in c, and the feasible c values form a closed interval computable
exactly. The full answer is the union over all gaps.

Product terms are written as 0-based pairs (i, level): level 0 multiplies
by c, level 1 by (1 - c).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import pairwise

from .core import (
    ClosedInterval,
    Comparison,
    SchmidtVector,
    compare,
    merge_intervals,
    padded_pair,
    scaled_entries,
    scaled_pair,
)
from .errors import NotIncomparable, TieAtSamplePoint

_HALF = Fraction(1, 2)
_ONE = Fraction(1)

# Sorted breakpoint values with the 1/2 and 1 sentinels at the ends.
BreakpointList = tuple[Fraction, ...]

# Symbolic ordering of the 2n products: (state index, level) pairs.
ProductOrder = tuple[tuple[int, int], ...]


@dataclass(frozen=True)
class FeasibleSet1D:
    """Disjoint sorted closed intervals of verified catalyst parameters."""

    intervals: tuple[ClosedInterval, ...]

    @property
    def is_empty(self) -> bool:
        return not self.intervals

    def __iter__(self):
        return iter(self.intervals)

    def __contains__(self, value) -> bool:
        return any(value in iv for iv in self.intervals)


def breakpoints(psi1: SchmidtVector, psi2: SchmidtVector) -> BreakpointList:
    """All order-change points of either product spectrum, with sentinels.

    Quotients s_i / (s_i + s_j) for i < j from both states; pairs with both
    entries zero are skipped (0/0), values equal to 1/2 or 1 are absorbed
    into the sentinels, duplicates are removed.
    """
    interior: set[Fraction] = set()
    for state in (psi1, psi2):
        nums, _ = scaled_entries(state)
        n = len(nums)
        for i in range(n):
            for j in range(i + 1, n):
                tot = nums[i] + nums[j]
                if tot == 0:
                    continue
                value = Fraction(nums[i], tot)
                if _HALF < value < _ONE:
                    interior.add(value)
    return (_HALF, *sorted(interior), _ONE)


def _order_scaled(nums: tuple[int, ...], p: int, q: int) -> ProductOrder:
    """Order of the products at c = p/q, via integer keys n_i*p and n_i*(q-p).

    A tie between two products that are not identical as functions of c
    means p/q is a breakpoint, which is a caller bug.
    """
    items = []
    for i, a in enumerate(nums):
        items.append((a * p, i, 0))
        items.append((a * (q - p), i, 1))
    items.sort(key=lambda t: (-t[0], t[1], t[2]))
    for (k1, i1, l1), (k2, i2, l2) in pairwise(items):
        if k1 == k2:
            f1 = (nums[i1], l1 if nums[i1] else -1)
            f2 = (nums[i2], l2 if nums[i2] else -1)
            if f1 != f2:
                raise TieAtSamplePoint(
                    f"products ({i1},{l1}) and ({i2},{l2}) tie at c = {p}/{q}"
                )
    return tuple((i, lvl) for _, i, lvl in items)


def fixed_order(psi: SchmidtVector, c0: Fraction) -> ProductOrder:
    """Symbolic nonincreasing order of {psi_i*c, psi_i*(1-c)} at c = c0.

    Valid throughout the breakpoint gap containing c0; c0 must not itself
    be a breakpoint (TieAtSamplePoint otherwise). Identically equal
    products (equal coefficients at the same level, or zero coefficients)
    are tie-broken by index.
    """
    c0 = Fraction(c0)
    if not 0 < c0 < 1:
        raise ValueError(f"sample point must be strictly inside (0, 1), got {c0}")
    nums, _ = scaled_entries(psi)
    return _order_scaled(nums, c0.numerator, c0.denominator)


def gap_feasibility(
    order_a: ProductOrder,
    order_b: ProductOrder,
    gap: ClosedInterval,
    psi1: SchmidtVector,
    psi2: SchmidtVector,
) -> ClosedInterval | None:
    """Intersect the 2n affine prefix constraints with the gap.

    Each product is affine in c: (i, 0) contributes slope +psi_i, (i, 1)
    contributes slope -psi_i and intercept psi_i. Prefix-sum constraints
    difference to p + q*c <= 0 with exact integer p, q over the states'
    common denominator (which cancels).
    """
    a, b = padded_pair(psi1, psi2)
    nums_a, nums_b, _ = scaled_pair(a, b)
    n2 = 2 * len(nums_a)
    if len(order_a) != n2 or len(order_b) != n2:
        raise ValueError("orderings must cover all 2n products")

    lo, hi = gap.lo, gap.hi
    slope = intercept = 0  # running prefix difference, A side minus B side
    for (ia, la), (ib, lb) in zip(order_a, order_b):
        if la == 0:
            slope += nums_a[ia]
        else:
            slope -= nums_a[ia]
            intercept += nums_a[ia]
        if lb == 0:
            slope -= nums_b[ib]
        else:
            slope += nums_b[ib]
            intercept -= nums_b[ib]
        if slope > 0:
            bound = Fraction(-intercept, slope)
            if bound < hi:
                hi = bound
        elif slope < 0:
            bound = Fraction(-intercept, slope)
            if bound > lo:
                lo = bound
        elif intercept > 0:
            return None
        if lo > hi:
            return None
    return ClosedInterval(lo, hi)


def find_catalysts_k2(psi1: SchmidtVector, psi2: SchmidtVector) -> FeasibleSet1D:
    """All 2x2 catalyst parameters c for an incomparable pair.

    Empty result means no 2x2 catalyst exists. Intervals from adjacent gaps
    that touch at a breakpoint are merged (majorization constraints are
    non-strict, so gap closures are sound).
    """
    if compare(psi1, psi2) is not Comparison.INCOMPARABLE:
        raise NotIncomparable(
            "catalyst sweep expects an incomparable pair; classify with compare() first"
        )
    a, b = padded_pair(psi1, psi2)
    nums_a, nums_b, _ = scaled_pair(a, b)
    found = []
    for lo, hi in pairwise(breakpoints(a, b)):
        if lo == hi:
            continue
        mid = (lo + hi) / 2
        order_a = _order_scaled(nums_a, mid.numerator, mid.denominator)
        order_b = _order_scaled(nums_b, mid.numerator, mid.denominator)
        feasible = gap_feasibility(order_a, order_b, ClosedInterval(lo, hi), a, b)
        if feasible is not None:
            found.append(feasible)
    return FeasibleSet1D(merge_intervals(found))
