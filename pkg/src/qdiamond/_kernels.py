"""Compiled inner loops for int64 coefficient arrays reduced modulo m.

Inputs are residues in [0, m) (divisor values may be centred into
(-m/2, m/2]) with m <= 2**31.  Accumulators are reduced lazily: ``batch``
products of size < m**2 can be summed before an int64 could overflow.
"""
import numpy as np
from numba import njit


@njit(cache=True, nogil=True)
def _batch(m):
    b = (1 << 62) // (m * m)
    return b if b > 0 else 1


@njit(cache=True, nogil=True)
def mul_mod(idx, a, b, n, m):
    out = np.zeros(n, np.int64)
    batch = _batch(m) - 1
    pending = 0
    for t in range(idx.size):
        i = idx[t]
        ai = a[i]
        for j in range(n - i):
            out[i + j] += ai * b[j]
        pending += 1
        if pending >= batch:
            for j in range(n):
                out[j] %= m
            pending = 0
    for j in range(n):
        out[j] %= m
    return out


@njit(cache=True, nogil=True)
def div_mod(a, idx, vals, inv0, n, m):
    # idx: sorted nonzero positions of the divisor, excluding 0
    out = np.empty(n, np.int64)
    batch = _batch(m) - 1
    for k in range(n):
        s = a[k]
        pending = 0
        for t in range(idx.size):
            j = idx[t]
            if j > k:
                break
            s -= vals[t] * out[k - j]
            pending += 1
            if pending >= batch:
                s %= m
                pending = 0
        out[k] = ((s % m) * inv0) % m
    return out


@njit(cache=True, nogil=True)
def partitions_mod(n, m):
    p = np.zeros(n, np.int64)
    p[0] = 1 % m
    batch = _batch(m) - 1
    for k in range(1, n):
        s = 0
        pending = 0
        j = 1
        while True:
            g1 = j * (3 * j - 1) // 2
            if g1 > k:
                break
            g2 = g1 + j
            t = p[k - g1]
            if g2 <= k:
                t += p[k - g2]
            if j % 2 == 1:
                s += t
            else:
                s -= t
            pending += 2
            if pending >= batch:
                s %= m
                pending = 0
            j += 1
        p[k] = s % m
    return p
