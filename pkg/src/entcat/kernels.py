"""Kernel dispatch: compiled int64 fast path with a pure-Python fallback.

The compiled extension is optional. It is picked at import time unless the
ENTCAT_PURE environment variable is set, and used per call only when every
scaled product fits comfortably in int64 (products and prefix sums are
bounded by sum(alpha) * sum(x), so one magnitude check covers the whole
computation).
"""

from __future__ import annotations

import os

from . import _pure_kernels

_INT64_SAFE = 2**62

if os.environ.get("ENTCAT_PURE"):
    _compiled = None
else:
    try:
        from . import _speedups as _compiled  # type: ignore[attr-defined]
    except ImportError:
        _compiled = None


def backend() -> str:
    """Name of the kernel backend selected at import ('compiled' or 'pure')."""
    return "compiled" if _compiled is not None else "pure"


def has_speedups() -> bool:
    return _compiled is not None


def _fits_int64(alpha, x_total: int) -> bool:
    return sum(alpha) * x_total < _INT64_SAFE


def verify_products(alpha, beta, x) -> bool:
    """Majorization check on pre-scaled integer spectra (exact)."""
    if _compiled is not None and _fits_int64(alpha, sum(x)):
        try:
            return _compiled.verify_products(alpha, beta, x)
        except OverflowError:  # pragma: no cover - guarded by _fits_int64
            pass
    return _pure_kernels.verify_products(alpha, beta, x)


def grid_search(alpha, beta, d: int, k: int):
    """First verifying grid composition (descending lex), or None."""
    if _compiled is not None and _fits_int64(alpha, d):
        try:
            return _compiled.grid_search(alpha, beta, d, k)
        except OverflowError:  # pragma: no cover - guarded by _fits_int64
            pass
    return _pure_kernels.grid_search(alpha, beta, d, k)
