"""Exact states, majorization tests, and tensor-product spectra.

Everything in this module is a pure function over `fractions.Fraction`
values; no floating-point arithmetic happens anywhere, so results are
independent of how a rational arrived ("0.25", "1/4", Fraction(1, 4)).
Values are immutable and safe to share across threads.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Iterator, Sequence

from . import kernels
from .errors import IndexOutOfRange, LengthMismatch, NegativeEntry, ZeroVector

Rational = Fraction


def as_fraction(value) -> Fraction:
    """Exact conversion; floats are refused because they are already rounded."""
    if isinstance(value, float):
        raise TypeError(
            "float input is inexact; pass a string such as '0.4' or a Fraction"
        )
    return Fraction(value)


@dataclass(frozen=True)
class SchmidtVector:
    """Nonincreasing exact probability vector (ordered Schmidt coefficients).

    The same type models states and catalyst candidates: both are
    nonincreasing, nonnegative, and sum to exactly 1. Zero entries are
    permitted.
    """

    entries: tuple[Fraction, ...]

    def __post_init__(self):
        if not self.entries:
            raise ZeroVector("a state needs at least one entry")
        total = Fraction(0)
        prev = None
        for e in self.entries:
            if not isinstance(e, Fraction):
                raise TypeError("entries must be Fractions; use normalize_and_sort")
            if e < 0:
                raise NegativeEntry(f"negative entry {e}")
            if prev is not None and e > prev:
                raise ValueError("entries must be nonincreasing")
            prev = e
            total += e
        if total != 1:
            raise ValueError(f"entries must sum to 1, got {total}")

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self) -> Iterator[Fraction]:
        return iter(self.entries)

    def __getitem__(self, idx):
        return self.entries[idx]

    def padded(self, length: int) -> "SchmidtVector":
        """Zero-pad to the requested length (a no-op when already there)."""
        if length < len(self.entries):
            raise ValueError("cannot shrink a state")
        if length == len(self.entries):
            return self
        return SchmidtVector(self.entries + (Fraction(0),) * (length - len(self)))


# Catalysts have exactly the same invariants as states.
CatalystCandidate = SchmidtVector


class Comparison(Enum):
    """Outcome of the two-way majorization test on a pair of states."""

    FORWARD_TRANSFORMABLE = "forward_transformable"
    BACKWARD_TRANSFORMABLE = "backward_transformable"
    EQUIVALENT = "equivalent"
    INCOMPARABLE = "incomparable"


@dataclass(frozen=True)
class ProductSpectrum:
    """Sorted tensor-product spectrum with per-position provenance.

    values[t] == psi[i] * phi[j] where (i, j) == provenance[t] (0-based).
    Ties are broken by (i, j), which never changes a prefix sum.
    """

    values: tuple[Fraction, ...]
    provenance: tuple[tuple[int, int], ...]

    def __len__(self) -> int:
        return len(self.values)

    def prefix_sums(self) -> tuple[Fraction, ...]:
        out = []
        total = Fraction(0)
        for v in self.values:
            total += v
            out.append(total)
        return tuple(out)


def normalize_and_sort(raw: Iterable) -> SchmidtVector:
    """Build a state from arbitrary rationals: sort descending, rescale to 1."""
    entries = [as_fraction(v) for v in raw]
    if not entries:
        raise ZeroVector("empty input")
    for e in entries:
        if e < 0:
            raise NegativeEntry(f"negative entry {e}")
    total = sum(entries)
    if total == 0:
        raise ZeroVector("entries sum to zero")
    entries.sort(reverse=True)
    return SchmidtVector(tuple(e / total for e in entries))


def prefix_sums(v: SchmidtVector) -> tuple[Fraction, ...]:
    """Running sums of the ordered entries; the last one is exactly 1."""
    out = []
    total = Fraction(0)
    for e in v:
        total += e
        out.append(total)
    return tuple(out)


def padded_pair(a: SchmidtVector, b: SchmidtVector) -> tuple[SchmidtVector, SchmidtVector]:
    """Zero-pad the shorter state so both have a common dimension."""
    n = max(len(a), len(b))
    return a.padded(n), b.padded(n)


def is_majorized(a: SchmidtVector, b: SchmidtVector, *, pad: bool = True) -> bool:
    """True iff every prefix sum of a is <= the matching prefix sum of b."""
    if len(a) != len(b):
        if not pad:
            raise LengthMismatch(f"lengths differ: {len(a)} vs {len(b)}")
        a, b = padded_pair(a, b)
    pa = pb = Fraction(0)
    for ea, eb in zip(a, b):
        pa += ea
        pb += eb
        if pa > pb:
            return False
    return True


def compare(psi1: SchmidtVector, psi2: SchmidtVector) -> Comparison:
    """Classify the pair: transformable either way, equivalent, or incomparable."""
    forward = is_majorized(psi1, psi2)
    backward = is_majorized(psi2, psi1)
    if forward and backward:
        return Comparison.EQUIVALENT
    if forward:
        return Comparison.FORWARD_TRANSFORMABLE
    if backward:
        return Comparison.BACKWARD_TRANSFORMABLE
    return Comparison.INCOMPARABLE


def tensor_spectrum(psi: SchmidtVector, phi: CatalystCandidate) -> ProductSpectrum:
    """All products psi[i] * phi[j], sorted nonincreasing, ties by (i, j)."""
    items = [
        (psi[i] * phi[j], i, j)
        for i in range(len(psi))
        for j in range(len(phi))
    ]
    items.sort(key=lambda t: (-t[0], t[1], t[2]))
    return ProductSpectrum(
        values=tuple(t[0] for t in items),
        provenance=tuple((t[1], t[2]) for t in items),
    )


@lru_cache(maxsize=4096)
def _scaled(entries: tuple[Fraction, ...]) -> tuple[tuple[int, ...], int]:
    den = math.lcm(*(e.denominator for e in entries))
    return tuple(e.numerator * (den // e.denominator) for e in entries), den


def scaled_entries(v: SchmidtVector) -> tuple[tuple[int, ...], int]:
    """Integer numerators over the least common denominator (sums to it)."""
    return _scaled(v.entries)


def scaled_pair(a: SchmidtVector, b: SchmidtVector) -> tuple[tuple[int, ...], tuple[int, ...], int]:
    """Both states over one common denominator, for integer kernels."""
    nums_a, den_a = scaled_entries(a)
    nums_b, den_b = scaled_entries(b)
    den = math.lcm(den_a, den_b)
    fa, fb = den // den_a, den // den_b
    return tuple(x * fa for x in nums_a), tuple(x * fb for x in nums_b), den


def verify_catalyst(
    psi1: SchmidtVector, psi2: SchmidtVector, phi: CatalystCandidate
) -> bool:
    """Direct check: does tensoring with phi make psi1 majorized by psi2?

    Total on any inputs; callers decide whether catalysis of an
    already-transformable pair is interesting.
    """
    a, b = padded_pair(psi1, psi2)
    nums_a, nums_b, _ = scaled_pair(a, b)
    nums_x, _ = scaled_entries(phi)
    return kernels.verify_products(nums_a, nums_b, nums_x)


def top_l_sum(values: Iterable, l: int) -> Fraction:
    """Sum of the l largest elements (equals the max over all l-subsets)."""
    vals = sorted((as_fraction(v) for v in values), reverse=True)
    if not 1 <= l <= len(vals):
        raise IndexOutOfRange(f"l={l} outside 1..{len(vals)}")
    return sum(vals[:l], Fraction(0))


@dataclass(frozen=True)
class ClosedInterval:
    """Closed interval [lo, hi] of exact catalyst-parameter values."""

    lo: Fraction
    hi: Fraction

    def __post_init__(self):
        if self.lo > self.hi:
            raise ValueError(f"empty interval [{self.lo}, {self.hi}]")

    def __contains__(self, value) -> bool:
        v = as_fraction(value)
        return self.lo <= v <= self.hi

    @property
    def midpoint(self) -> Fraction:
        return (self.lo + self.hi) / 2

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    def intersect(self, other: "ClosedInterval") -> "ClosedInterval | None":
        lo = max(self.lo, other.lo)
        hi = min(self.hi, other.hi)
        return ClosedInterval(lo, hi) if lo <= hi else None


def merge_intervals(intervals: Sequence[ClosedInterval]) -> tuple[ClosedInterval, ...]:
    """Canonical disjoint union: sorted, with touching intervals merged."""
    if not intervals:
        return ()
    ordered = sorted(intervals, key=lambda iv: (iv.lo, iv.hi))
    merged = [ordered[0]]
    for iv in ordered[1:]:
        last = merged[-1]
        if iv.lo <= last.hi:
            if iv.hi > last.hi:
                merged[-1] = ClosedInterval(last.lo, iv.hi)
        else:
            merged.append(iv)
    return tuple(merged)
