"""Brute-force oracles and hypothesis strategies shared across test modules."""
import math
from collections import Counter

from hypothesis import strategies as st

from qdiamond.series import ZZ, Zmod, from_coeffs


def partitions(n, largest=None):
    """Every partition of n as a non-increasing tuple."""
    largest = n if largest is None else largest
    if n == 0:
        yield ()
        return
    for part in range(min(n, largest), 0, -1):
        for rest in partitions(n - part, part):
            yield (part,) + rest


def colored_partition_count(n, colors):
    """Partitions of n where each part carries one of ``colors`` colours."""
    total = 0
    for lam in partitions(n):
        ways = 1
        for mult in Counter(lam).values():
            ways *= math.comb(mult + colors - 1, colors - 1)
        total += ways
    return total


def convolve(a, b, n):
    out = [0] * n
    for i in range(n):
        for j in range(n - i):
            out[i + j] += a[i] * b[j]
    return out


# moduli covering the int64 kernels, the 2**31 boundary and the object path
MODULI = [2, 3, 4, 8, 9, 11, 27, 2187, 1_000_003, 2**31 - 1, 2**31, 2**61 - 1, 2**64 + 13]

rings = st.one_of(st.just(ZZ), st.sampled_from(MODULI).map(Zmod))


@st.composite
def series_lists(draw, min_size=1, max_size=64):
    return draw(st.lists(st.integers(-9, 9), min_size=min_size, max_size=max_size))


@st.composite
def same_order_series(draw, count, ring=None):
    ring = draw(rings) if ring is None else ring
    n = draw(st.integers(1, 64))
    return [from_coeffs(ring, draw(series_lists(n, n))) for _ in range(count)]


@st.composite
def unit_series(draw):
    """A series over a random ring whose constant term is a unit."""
    ring = draw(rings)
    coeffs = draw(series_lists())
    if ring.is_exact:
        coeffs[0] = draw(st.sampled_from([1, -1]))
    else:
        coeffs[0] = draw(st.integers(1, 10**6).filter(lambda c: math.gcd(c, ring.modulus) == 1))
    return from_coeffs(ring, coeffs)
