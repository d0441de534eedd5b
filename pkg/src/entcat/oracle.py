"""Exhaustive grid oracle over the ordered catalyst simplex.

Independent brute force used to generate fixtures and to cross-validate
the exact algorithms. A hit is a certificate of existence; a miss is only
evidence of absence (feasible sets can be thinner than the grid).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import kernels
from .core import CatalystCandidate, SchmidtVector, padded_pair, scaled_pair


@dataclass(frozen=True)
class GridSpec:
    """Catalyst dimension k and grid step 1/denominator over the simplex.

    Grid points are the vectors (m_1/d, ..., m_k/d) with integer m_i,
    m_1 >= ... >= m_k >= 0 and sum m_i = d.
    """

    k: int
    denominator: int

    def __post_init__(self):
        if self.k < 1:
            raise ValueError("catalyst dimension must be at least 1")
        if self.denominator < 1:
            raise ValueError("grid denominator must be at least 1")


def grid_search(
    psi1: SchmidtVector, psi2: SchmidtVector, spec: GridSpec
) -> CatalystCandidate | None:
    """First grid point (descending lexicographic) that verifies, or None.

    Enumeration starts at the trivial catalyst (1, 0, ..., 0), so an
    already-transformable pair hits immediately. Exhaustive and exact.
    """
    a, b = padded_pair(psi1, psi2)
    nums_a, nums_b, _ = scaled_pair(a, b)
    hit = kernels.grid_search(nums_a, nums_b, spec.denominator, spec.k)
    if hit is None:
        return None
    return CatalystCandidate(
        tuple(Fraction(m, spec.denominator) for m in hit)
    )
