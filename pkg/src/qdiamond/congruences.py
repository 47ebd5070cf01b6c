"""Congruence claims ``d_k(A n + B) = 0 (mod M)`` and their bounded checks.

"Holds" always means "holds for every ``A n + B`` below the bound"; nothing
here proves a statement for all ``n``.
"""
from __future__ import annotations

import json
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import IO, Iterable, Optional, Sequence

import numpy as np

from qdiamond.diamonds import dk_series
from qdiamond.series import Series, Zmod, dissect, reduce_mod

__all__ = [
    "Congruence", "Report", "HOLDS", "FAILS", "verify", "verify_many", "check_series",
    "is_prime", "quadratic_residues", "is_qr",
    "family_p_minus_2", "family_p_minus_1", "family_ramanujan", "family_d7_prime",
    "special_residue", "lift", "smoot_claim", "smoot_check", "scan", "minimal",
    "write_jsonl", "read_jsonl",
]

HOLDS = "holds_up_to_bound"
FAILS = "fails"
SOURCES = ("paper", "generated", "scanned")


@dataclass(frozen=True)
class Congruence:
    """The claim ``d_k(A n + B) = 0 (mod M)`` for all ``n >= 0``.

    Equality and hashing use ``(k, A, B, M)`` only.
    """

    k: int
    A: int
    B: int
    M: int
    family: str = field(default="", compare=False)
    source: str = field(default="paper", compare=False)

    def __post_init__(self):
        if self.k < 1:
            raise ValueError(f"k must be >= 1, got {self.k}")
        if self.A < 1 or not 0 <= self.B < self.A:
            raise ValueError(f"need A >= 1 and 0 <= B < A, got A={self.A}, B={self.B}")
        if self.M < 2:
            raise ValueError(f"modulus must be >= 2, got {self.M}")
        if self.source not in SOURCES:
            raise ValueError(f"source must be one of {SOURCES}")

    @property
    def key(self) -> tuple[int, int, int, int]:
        return (self.k, self.A, self.B, self.M)

    def implies(self, other: "Congruence") -> bool:
        """Whether this claim syntactically implies ``other``: same ``k``,
        ``other``'s progression inside this one and ``other.M | self.M``."""
        return (self.k == other.k and other.A % self.A == 0
                and other.B % self.A == self.B and self.M % other.M == 0)

    def __str__(self):
        return f"d_{self.k}({self.A}n+{self.B}) ≡ 0 (mod {self.M})"


@dataclass(frozen=True)
class Report:
    claim: Congruence
    bound: int
    status: str
    counterexample: Optional[tuple[int, int]] = None  # (n, d_k(A n + B) mod M)
    checked: int = 0

    @property
    def holds(self) -> bool:
        return self.status == HOLDS

    def __str__(self):
        c = self.claim
        if self.holds:
            return f"{c}: holds up to bound {self.bound} ({self.checked} terms checked)"
        n, v = self.counterexample
        idx = c.A * n + c.B
        return (f"{c}: FAILS at n={n}: d_{c.k}({idx}) ≡ {v} (mod {c.M})"
                f" [bound {self.bound}]")


def check_series(claim: Congruence, values: Series, bound: int) -> Report:
    """Check ``claim`` against precomputed ``d_k`` values over Z or Z/M'
    with ``M | M'``."""
    m = values.ring.modulus
    if m is not None and m % claim.M:
        raise ValueError(f"values modulo {m} cannot decide a claim modulo {claim.M}")
    if values.order < bound:
        raise ValueError(f"need {bound} coefficients, have {values.order}")
    if m != claim.M:
        values = reduce_mod(values, claim.M)
    if claim.B >= bound:
        return Report(claim, bound, HOLDS, None, 0)
    prog = dissect(values, claim.A, claim.B).coeffs[: (bound - 1 - claim.B) // claim.A + 1]
    bad = np.flatnonzero(prog)
    if bad.size:
        n = int(bad[0])
        return Report(claim, bound, FAILS, (n, int(prog[n])), n + 1)
    return Report(claim, bound, HOLDS, None, prog.size)


def verify(c: Congruence, bound: int) -> Report:
    """Check every index ``A n + B < bound``; the earliest violation is reported."""
    if bound < c.A + c.B:
        raise ValueError(f"bound {bound} < A + B = {c.A + c.B}")
    return check_series(c, dk_series(c.k, bound, Zmod(c.M)).values, bound)


def verify_many(claims: Iterable[Congruence], bound: int,
                workers: Optional[int] = None) -> list[Report]:
    """Verify many claims, one ``d_k mod M`` expansion per ``(k, M)`` pair.

    Pairs are evaluated on a thread pool (the kernels release the GIL).
    Reports come back sorted by ``(k, A, B, M)``.
    """
    groups: dict[tuple[int, int], list[Congruence]] = {}
    for c in claims:
        if bound < c.A + c.B:
            raise ValueError(f"bound {bound} < A + B for {c}")
        groups.setdefault((c.k, c.M), []).append(c)

    def run(item):
        (k, M), cs = item
        values = dk_series(k, bound, Zmod(M)).values
        return [check_series(c, values, bound) for c in cs]

    items = sorted(groups.items())
    if workers == 1 or len(items) <= 1:
        chunks = [run(it) for it in items]
    else:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            chunks = list(pool.map(run, items))
    return sorted((r for chunk in chunks for r in chunk), key=lambda r: r.claim.key)


# -- residues ----------------------------------------------------------------

def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    return all(n % d for d in range(3, math.isqrt(n) + 1, 2))


def _odd_prime(p: int):
    if p < 3 or not is_prime(p):
        raise ValueError(f"{p} is not an odd prime")


def quadratic_residues(p: int) -> set[int]:
    """Nonzero squares modulo the odd prime ``p``."""
    _odd_prime(p)
    return {x * x % p for x in range(1, p)}


def is_qr(a: int, p: int) -> bool:
    if a % p == 0:
        raise ValueError(f"{a} is divisible by {p}")
    return a % p in quadratic_residues(p)


def _family_prime(p: int):
    if p < 5 or not is_prime(p):
        raise ValueError(f"family needs a prime p >= 5, got {p}")


def special_residue(p: int) -> int:
    """The ``t`` in ``1..p-1`` with ``24 t + 1 = 0 (mod p)``."""
    _family_prime(p)
    return (-pow(24, -1, p)) % p


def family_p_minus_2(p: int) -> list[Congruence]:
    """``d_{p-2}(p n + r) = 0 (mod p)``: ``24 r + 1`` a nonresidue, plus the
    special ``r = t`` with ``24 t + 1 = 0``.  Exactly ``(p + 1) / 2`` claims."""
    _family_prime(p)
    qr = quadratic_residues(p)
    t = special_residue(p)
    out = []
    for r in range(1, p):
        if r == t:
            out.append(Congruence(p - 2, p, r, p, "pm2-special"))
        elif (24 * r + 1) % p not in qr:
            out.append(Congruence(p - 2, p, r, p, "pm2-qnr"))
    return out


def family_p_minus_1(p: int) -> list[Congruence]:
    """``d_{p-1}(p n + r) = 0 (mod p)`` for every nonresidue ``r``."""
    _family_prime(p)
    qr = quadratic_residues(p)
    return [Congruence(p - 1, p, r, p, "pm1") for r in range(1, p) if r not in qr]


_RAMANUJAN = {5: 4, 7: 5, 11: 6}


def family_ramanujan(ell: int) -> Congruence:
    """``d_l(l n + r) = 0 (mod l)`` inherited from ``p(l n + r) = 0 (mod l)``."""
    if ell not in _RAMANUJAN:
        raise ValueError(f"no partition congruence known for modulus {ell}; use 5, 7 or 11")
    return Congruence(ell, ell, _RAMANUJAN[ell], ell, "ramanujan")


def family_d7_prime(p: int) -> list[Congruence]:
    """``d_7(2 p n + 2 r + 1) = 0 (mod 4)`` for ``3 r + 1`` a nonresidue mod ``p``."""
    _family_prime(p)
    qr = quadratic_residues(p)
    return [Congruence(7, 2 * p, 2 * r + 1, 4, "d7-prime")
            for r in range(1, p) if (3 * r + 1) % p and (3 * r + 1) % p not in qr]


def lift(c: Congruence, j: int) -> Congruence:
    """Move a prime-modulus claim ``d_k(p n + r) (mod p)`` to ``d_{pj+k}``."""
    if j < 0:
        raise ValueError("j must be >= 0")
    if not (c.A == c.M and is_prime(c.M)):
        raise ValueError(f"lifting needs A = M = p prime, got {c}")
    if j == 0:
        return c
    return Congruence(c.M * j + c.k, c.A, c.B, c.M, c.family, "generated")


# -- the d_2 powers-of-3 family ----------------------------------------------

def smoot_claim(alpha: int) -> Congruence:
    """``d_2(n) = 0 (mod 3^(2 floor(alpha/2) + 1))`` on ``8 n = 1 (mod 3^alpha)``."""
    if alpha < 0:
        raise ValueError("alpha must be >= 0")
    A = 3 ** alpha
    B = pow(8, -1, A) if A > 1 else 0
    return Congruence(2, A, B, 3 ** (2 * (alpha // 2) + 1), f"powers-of-3 alpha={alpha}")


def smoot_check(alpha_max: int, bound: int) -> list[Report]:
    """One report per ``alpha = 1..alpha_max`` from a single expansion of
    ``d_2`` modulo the largest modulus needed."""
    if alpha_max < 1:
        raise ValueError("alpha_max must be >= 1")
    claims = [smoot_claim(a) for a in range(1, alpha_max + 1)]
    top = max(c.M for c in claims)
    values = dk_series(2, bound, Zmod(top)).values
    return [check_series(c, values, bound) for c in claims]


# -- scanning ----------------------------------------------------------------

def minimal(claims: Sequence[Congruence]) -> list[Congruence]:
    """Drop every claim implied by a different claim in the list."""
    keep = []
    for c in claims:
        if not any(o.key != c.key and o.implies(c) for o in claims):
            keep.append(c)
    return sorted(set(keep), key=lambda c: c.key)


def scan(k_set: Iterable[int], A_max: int, M_set: Iterable[int], bound: int,
         min_survivors: Optional[int] = None, workers: Optional[int] = None
         ) -> list[Congruence]:
    """Every ``(k, A, B, M)`` with ``A <= A_max`` whose progression vanishes
    modulo ``M`` below ``bound``, reduced to the implication-minimal ones.

    ``min_survivors`` additionally demands that many checked terms per
    progression.
    """
    if A_max < 1:
        raise ValueError("A_max must be >= 1")
    if bound < 10 * A_max:
        raise ValueError(f"bound must be >= 10 * A_max = {10 * A_max}")
    pairs = sorted({(k, M) for k in k_set for M in M_set})
    for k, M in pairs:
        Congruence(k, 1, 0, M)  # validates k and M

    def run(pair):
        k, M = pair
        coeffs = dk_series(k, bound, Zmod(M)).values.coeffs
        found = []
        for A in range(1, A_max + 1):
            for B in range(A):
                prog = coeffs[B::A]
                if min_survivors is not None and prog.size < min_survivors:
                    continue
                if not prog.any():
                    found.append(Congruence(k, A, B, M, "scan", "scanned"))
        return found

    if workers == 1 or len(pairs) <= 1:
        found = [c for p in pairs for c in run(p)]
    else:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            found = [c for chunk in pool.map(run, pairs) for c in chunk]
    return minimal(found)


# -- JSON lines --------------------------------------------------------------

def write_jsonl(claims: Iterable[Congruence], bound: int, fh: IO[str]) -> None:
    for c in sorted(claims, key=lambda c: c.key):
        fh.write(json.dumps({"k": c.k, "A": c.A, "B": c.B, "M": c.M, "bound": bound,
                             "family": c.family, "status": HOLDS}) + "\n")


def read_jsonl(fh: IO[str]) -> list[tuple[Congruence, int]]:
    out = []
    for line in fh:
        if line.strip():
            obj = json.loads(line)
            c = Congruence(obj["k"], obj["A"], obj["B"], obj["M"], obj.get("family", ""),
                           "scanned")
            out.append((c, obj["bound"]))
    return out
