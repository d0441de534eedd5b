# cython: language_level=3
# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled integer kernels: sort scaled tensor products, compare prefixes.

Same contract as entcat._pure_kernels, restricted to inputs whose scaled
products fit in int64. Callers (entcat.kernels) gate on magnitude before
dispatching here.
"""

from libc.stdlib cimport free, malloc

BACKEND = "compiled"


cdef void _sort_desc(long long *v, Py_ssize_t n) noexcept nogil:
    # insertion sort: arrays are tiny (n*k products)
    cdef Py_ssize_t i, j
    cdef long long key
    for i in range(1, n):
        key = v[i]
        j = i - 1
        while j >= 0 and v[j] < key:
            v[j + 1] = v[j]
            j -= 1
        v[j + 1] = key


cdef bint _majorized(long long *alpha, long long *beta, Py_ssize_t n,
                     long long *x, Py_ssize_t k,
                     long long *buf_a, long long *buf_b) noexcept nogil:
    cdef Py_ssize_t i, j, t
    cdef Py_ssize_t m = n * k
    cdef long long pa = 0, pb = 0
    t = 0
    for i in range(n):
        for j in range(k):
            buf_a[t] = alpha[i] * x[j]
            buf_b[t] = beta[i] * x[j]
            t += 1
    _sort_desc(buf_a, m)
    _sort_desc(buf_b, m)
    for t in range(m):
        pa += buf_a[t]
        pb += buf_b[t]
        if pa > pb:
            return False
    return True


cdef bint _descend(long long *alpha, long long *beta, Py_ssize_t n,
                   long long *m, Py_ssize_t k, Py_ssize_t pos,
                   long long remaining, long long cap,
                   long long *buf_a, long long *buf_b) noexcept nogil:
    cdef long long v, lo, parts
    if pos == k - 1:
        m[pos] = remaining
        return _majorized(alpha, beta, n, m, k, buf_a, buf_b)
    parts = k - pos
    lo = (remaining + parts - 1) // parts
    v = remaining if remaining < cap else cap
    while v >= lo:
        m[pos] = v
        if _descend(alpha, beta, n, m, k, pos + 1, remaining - v, v,
                    buf_a, buf_b):
            return True
        v -= 1
    return False


def verify_products(alpha, beta, x):
    """True iff the product multiset alpha (x) x is majorized by beta (x) x."""
    cdef Py_ssize_t n = len(alpha)
    cdef Py_ssize_t k = len(x)
    cdef Py_ssize_t i
    cdef long long *buf
    cdef bint ok
    if len(beta) != n:
        raise ValueError("alpha and beta must have the same length")
    if n == 0 or k == 0:
        raise ValueError("empty input")
    buf = <long long *> malloc((2 * n + k + 2 * n * k) * sizeof(long long))
    if buf == NULL:
        raise MemoryError()
    try:
        for i in range(n):
            buf[i] = alpha[i]
            buf[n + i] = beta[i]
        for i in range(k):
            buf[2 * n + i] = x[i]
        ok = _majorized(buf, buf + n, n, buf + 2 * n, k,
                        buf + 2 * n + k, buf + 2 * n + k + n * k)
    finally:
        free(buf)
    return bool(ok)


def grid_search(alpha, beta, long long d, Py_ssize_t k):
    """First (descending-lex) ordered composition of d that verifies, or None."""
    cdef Py_ssize_t n = len(alpha)
    cdef Py_ssize_t i
    cdef long long *buf
    cdef bint hit
    if len(beta) != n:
        raise ValueError("alpha and beta must have the same length")
    if d < 1 or k < 1:
        raise ValueError("grid denominator and dimension must be positive")
    buf = <long long *> malloc((2 * n + k + 2 * n * k) * sizeof(long long))
    if buf == NULL:
        raise MemoryError()
    try:
        for i in range(n):
            buf[i] = alpha[i]
            buf[n + i] = beta[i]
        hit = _descend(buf, buf + n, n, buf + 2 * n, k, 0, d, d,
                       buf + 2 * n + k, buf + 2 * n + k + n * k)
        if not hit:
            return None
        return tuple(buf[2 * n + i] for i in range(k))
    finally:
        free(buf)
