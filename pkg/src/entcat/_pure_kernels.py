"""Pure-Python integer kernels.

Mirror of the compiled ``entcat._speedups`` module. Everything here works
on plain Python integers (states and catalysts pre-scaled to a common
denominator), so there is no magnitude limit; the compiled twin is only
used when all intermediate values fit in int64.
"""

from __future__ import annotations

BACKEND = "pure"


def verify_products(alpha: list, beta: list, x: list) -> bool:
    """True iff the product multiset alpha (x) x is majorized by beta (x) x.

    alpha and beta must have equal length and equal sums (same scale).
    """
    if len(alpha) != len(beta):
        raise ValueError("alpha and beta must have the same length")
    prods_a = sorted((a * xi for a in alpha for xi in x), reverse=True)
    prods_b = sorted((b * xi for b in beta for xi in x), reverse=True)
    pa = pb = 0
    for va, vb in zip(prods_a, prods_b):
        pa += va
        pb += vb
        if pa > pb:
            return False
    return True


def grid_search(alpha: list, beta: list, d: int, k: int):
    """First ordered composition of d into k parts that verifies as a catalyst.

    Compositions (m_1 >= ... >= m_k >= 0, sum = d) are visited in descending
    lexicographic order, so (d, 0, ..., 0) comes first. Returns a tuple of
    ints or None.
    """
    if len(alpha) != len(beta):
        raise ValueError("alpha and beta must have the same length")
    if d < 1 or k < 1:
        raise ValueError("grid denominator and dimension must be positive")
    m = [0] * k

    def descend(pos: int, remaining: int, cap: int) -> bool:
        if pos == k - 1:
            m[pos] = remaining
            return verify_products(alpha, beta, m)
        lo = -(-remaining // (k - pos))  # ceil: keep the tail nonincreasing
        for v in range(min(cap, remaining), lo - 1, -1):
            m[pos] = v
            if descend(pos + 1, remaining - v, v):
                return True
        return False

    if descend(0, d, d):
        return tuple(m)
    return None
