"""q-Pochhammer expansions ``f_r = (1-q^r)(1-q^2r)...`` and eta quotients.

Eta quotients have a plain-text form of whitespace separated ``r^e`` tokens,
so ``"2^2 1^-7"`` is ``f_2^2 / f_1^7``.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable

import numpy as np

from qdiamond import _kernels
from qdiamond.series import ZZ, CoeffRing, Series, mul_pow, one

__all__ = [
    "EtaQuotient", "pochhammer_series", "pochhammer_product",
    "partition_series", "eta_quotient_series",
]

_TOKEN = re.compile(r"^([0-9]+)\^(-?[0-9]+)$")


@dataclass(frozen=True)
class EtaQuotient:
    """A finite product of ``f_r ** e`` with distinct ``r >= 1`` and ``e != 0``.

    Factors are kept sorted by ``r``.
    """

    factors: tuple[tuple[int, int], ...]

    def __init__(self, factors: Iterable[tuple[int, int]] = ()):
        factors = tuple((int(r), int(e)) for r, e in factors)
        rs = [r for r, _ in factors]
        if len(set(rs)) != len(rs):
            raise ValueError(f"repeated r in eta quotient: {rs}")
        for r, e in factors:
            if r < 1:
                raise ValueError(f"f_r needs r >= 1, got {r}")
            if e == 0:
                raise ValueError(f"zero exponent for f_{r}")
        object.__setattr__(self, "factors", tuple(sorted(factors)))

    @classmethod
    def from_dict(cls, exps: dict[int, int]) -> "EtaQuotient":
        return cls((r, e) for r, e in exps.items() if e)

    @classmethod
    def parse(cls, text: str) -> "EtaQuotient":
        """Parse ``"r^e r^e ..."``; raises ``ValueError`` on bad tokens."""
        factors = []
        for tok in text.split():
            match = _TOKEN.match(tok)
            if not match:
                raise ValueError(f"bad eta token {tok!r}, expected r^e such as 2^2 or 1^-7")
            factors.append((int(match.group(1)), int(match.group(2))))
        return cls(factors)

    def as_dict(self) -> dict[int, int]:
        return dict(self.factors)

    def __mul__(self, other: "EtaQuotient") -> "EtaQuotient":
        exps = self.as_dict()
        for r, e in other.factors:
            exps[r] = exps.get(r, 0) + e
        return EtaQuotient.from_dict(exps)

    def __pow__(self, k: int) -> "EtaQuotient":
        return EtaQuotient.from_dict({r: e * k for r, e in self.factors})

    def scaled(self, m: int) -> "EtaQuotient":
        """Replace ``q`` by ``q**m``: every ``f_r`` becomes ``f_(m r)``."""
        return EtaQuotient((r * m, e) for r, e in self.factors)

    def deflated(self, m: int) -> "EtaQuotient":
        """Inverse of :meth:`scaled`; every ``r`` must be divisible by ``m``."""
        if any(r % m for r, _ in self.factors):
            raise ValueError(f"{self} is not a series in q^{m}")
        return EtaQuotient((r // m, e) for r, e in self.factors)

    def __str__(self):
        return " ".join(f"{r}^{e}" for r, e in self.factors)


def _pentagonal_exponents(n: int):
    """Yield ``(exponent, sign)`` of ``f_1`` for m = 0, 1, -1, 2, -2, ..."""
    yield 0, 1
    j = 1
    while True:
        lo = j * (3 * j - 1) // 2
        if lo >= n:
            return
        sign = -1 if j % 2 else 1
        yield lo, sign
        hi = lo + j
        if hi < n:
            yield hi, sign
        j += 1


def pochhammer_series(r: int, n: int, ring: CoeffRing = ZZ) -> Series:
    """Expansion of ``f_r`` from the pentagonal number theorem."""
    if r < 1:
        raise ValueError("r must be >= 1")
    if n < 1:
        raise ValueError("order must be >= 1")
    out = np.zeros(n, dtype=ring.dtype)
    for e, sign in _pentagonal_exponents((n + r - 1) // r):
        out[r * e] = ring.reduce(sign)
    return Series(ring, out)


def pochhammer_product(r: int, n: int, ring: CoeffRing = ZZ) -> Series:
    """``f_r`` by literally multiplying out ``(1 - q^(r i))`` for ``r i < n``.

    Quadratic in ``n``; used as an independent check of the pentagonal route.
    """
    if r < 1 or n < 1:
        raise ValueError("need r >= 1 and order >= 1")
    c = [0] * n
    c[0] = 1
    for step in range(r, n, r):
        for k in range(n - 1, step - 1, -1):
            c[k] -= c[k - step]
    return Series(ring, np.array([ring.reduce(v) for v in c], dtype=ring.dtype))


def partition_series(n: int, ring: CoeffRing = ZZ) -> Series:
    """``sum p(k) q^k`` by Euler's pentagonal recurrence."""
    if n < 1:
        raise ValueError("order must be >= 1")
    if ring.uses_int64:
        return Series(ring, _kernels.partitions_mod(n, ring.modulus))
    p = [0] * n
    p[0] = 1
    for k in range(1, n):
        s = 0
        j = 1
        while True:
            g1 = j * (3 * j - 1) // 2
            if g1 > k:
                break
            t = p[k - g1]
            if g1 + j <= k:
                t += p[k - g1 - j]
            s += t if j % 2 else -t
            j += 1
        p[k] = ring.reduce(s)
    return Series(ring, np.array(p, dtype=object))


def eta_quotient_series(eq: EtaQuotient, n: int, ring: CoeffRing = ZZ,
                        fast: bool = False) -> Series:
    """Expansion of ``prod f_r ** e`` to order ``n``.

    Positive exponents are applied before negative ones so that intermediate
    products stay short when the numerator is sparse.
    """
    acc = one(ring, n)
    for r, e in sorted(eq.factors, key=lambda f: (f[1] < 0, f[0])):
        acc = mul_pow(acc, pochhammer_series(r, n, ring), e, fast)
    return acc
