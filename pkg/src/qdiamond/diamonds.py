"""Coefficients ``d_k(n)`` of ``f_2^k / f_1^(3k+1)``.

``dk_series`` is the production path (sparse theta-style kernels, natively
modulo M when asked).  ``dk_oracle`` recomputes the same numbers from
literal products and long division, sharing no code with the production
path, and exists only to cross-check it.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from qdiamond.eta import EtaQuotient, eta_quotient_series, partition_series
from qdiamond.series import ZZ, CoeffRing, Series, Zmod, dissect, from_coeffs, mul
from qdiamond.series import pow as series_pow

__all__ = [
    "DiamondSeries", "diamond_quotient", "dk_series", "dk_oracle", "dk_value",
    "dk_progression", "dk_series_via_partitions", "ORACLE_MAX_K", "ORACLE_MAX_ORDER",
]

ORACLE_MAX_K = 8
ORACLE_MAX_ORDER = 512


@dataclass(frozen=True)
class DiamondSeries:
    k: int
    values: Series

    @property
    def order(self) -> int:
        return self.values.order

    @property
    def ring(self) -> CoeffRing:
        return self.values.ring

    def __getitem__(self, n):
        return self.values[n]


def diamond_quotient(k: int) -> EtaQuotient:
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    return EtaQuotient([(2, k), (1, -(3 * k + 1))])


@lru_cache(maxsize=64)
def _cached(k: int, n: int, ring: CoeffRing) -> Series:
    return eta_quotient_series(diamond_quotient(k), n, ring)


def dk_series(k: int, n: int, ring: CoeffRing = ZZ) -> DiamondSeries:
    """``d_k(0..n-1)`` over ``ring``.  Results are memoised."""
    if n < 1:
        raise ValueError("order must be >= 1")
    return DiamondSeries(k, _cached(k, n, ring))


def dk_series_via_partitions(k: int, n: int, ring: CoeffRing) -> Series:
    """Second production-grade route: ``f_2^k * p(q)^(3k+1)`` with the
    partition series from Euler's recurrence and Kronecker products.

    Shares only the Kronecker multiplier with :func:`dk_series`; used to
    re-verify scanner output independently.
    """
    f2k = eta_quotient_series(EtaQuotient([(2, k)]), n, ring, fast=True)
    parts = partition_series(n, ring)
    return mul(f2k, series_pow(parts, 3 * k + 1, fast=True), fast=True)


# -- oracle ------------------------------------------------------------------

def _literal_product(step: int, n: int) -> list[int]:
    c = [0] * n
    c[0] = 1
    for s in range(step, n, step):
        for i in range(n - 1, s - 1, -1):
            c[i] -= c[i - s]
    return c


def _convolve(a: list[int], b: list[int], n: int) -> list[int]:
    out = [0] * n
    for i, ai in enumerate(a[:n]):
        if ai:
            for j in range(n - i):
                out[i + j] += ai * b[j]
    return out


def _long_divide(a: list[int], b: list[int], n: int) -> list[int]:
    # b[0] == 1
    out = [0] * n
    for i in range(n):
        s = a[i]
        for j in range(1, i + 1):
            if b[j]:
                s -= b[j] * out[i - j]
        out[i] = s
    return out


def dk_oracle(k: int, n: int) -> Series:
    """Exact ``d_k(0..n-1)`` from ``k`` literal copies of prod(1 - q^(2i))
    and ``3k+1`` long divisions by prod(1 - q^i).  Limited to
    ``k <= 8`` and ``n <= 512``.
    """
    if not 1 <= k <= ORACLE_MAX_K:
        raise ValueError(f"oracle needs 1 <= k <= {ORACLE_MAX_K}, got {k}")
    if not 1 <= n <= ORACLE_MAX_ORDER:
        raise ValueError(f"oracle needs 1 <= n <= {ORACLE_MAX_ORDER}, got {n}")
    f1 = _literal_product(1, n)
    f2 = _literal_product(2, n)
    acc = [1] + [0] * (n - 1)
    for _ in range(k):
        acc = _convolve(acc, f2, n)
    for _ in range(3 * k + 1):
        acc = _long_divide(acc, f1, n)
    return from_coeffs(ZZ, acc)


# -- values and progressions -------------------------------------------------

def dk_value(k: int, n: int) -> int:
    """Exact ``d_k(n)``."""
    if n < 0:
        raise ValueError("n must be >= 0")
    return dk_series(k, n + 1, ZZ).values[n]


def dk_progression(k: int, A: int, B: int, M: int, n: int) -> Series:
    """``d_k(A i + B) mod M`` for every ``A i + B < n``."""
    if M < 2:
        raise ValueError("modulus must be >= 2")
    return dissect(dk_series(k, n, Zmod(M)).values, A, B)
