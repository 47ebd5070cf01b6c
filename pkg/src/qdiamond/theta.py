"""Classical theta-series identities and their truncated verification.

Each :class:`LemmaId` names one identity ``lhs == rhs`` where the left side is
an eta quotient and the right side is either a closed-form theta sum or a
dissection into eta quotients.  :func:`verify_lemma` compares both sides
coefficient by coefficient over the exact integers.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Callable, Optional

import numpy as np

from qdiamond.eta import EtaQuotient, eta_quotient_series, pochhammer_product
from qdiamond.series import (ZZ, CoeffRing, Series, add, dissect, first_difference,
                             scalar_mul, shift, truncate, zero)

__all__ = [
    "LemmaId", "LemmaReport", "DissectionTerm", "theta_rhs", "lemma_lhs",
    "verify_lemma", "dissection_terms", "dissection_pieces", "theta_sum", "lhs_quotient",
]


class LemmaId(enum.Enum):
    L_TRIANGULAR = "triangular"
    L_CUBE = "cube"
    L_PENTAGONAL = "pentagonal"
    L_SEXTIC = "sextic"
    L_PHI_SQUARE = "phi-square"
    L_PHI_2DISS = "phi-2diss"
    L_PHI_3DISS = "phi-3diss"
    L_F1F2_3DISS = "f1f2-3diss"
    L_INV4_2DISS = "inv4-2diss"
    L_MOD11_A = "mod11-a"
    L_MOD11_B = "mod11-b"

    @classmethod
    def from_name(cls, name: str) -> "LemmaId":
        for tag in cls:
            if name in (tag.value, tag.name):
                return tag
        raise ValueError(f"unknown lemma {name!r}; choose from {[t.value for t in cls]}")


def theta_sum(n: int, exponent: Callable[[int], int], weight: Callable[[int], int],
              ring: CoeffRing = ZZ, bilateral: bool = True) -> Series:
    """``sum weight(m) q^exponent(m)`` truncated to order ``n``.

    Indices run 0, 1, -1, 2, -2, ... (0, 1, 2, ... when not bilateral) and
    each term is kept iff its exponent is below ``n``.  The sweep stops at
    the first |m| >= 2 where every sign lands at or beyond ``n``, so
    ``exponent`` must be increasing in |m| from there on.
    """
    out = [0] * n
    j = 0
    while True:
        ms = (j, -j) if bilateral and j else (j,)
        hit = False
        for m in ms:
            e = exponent(m)
            if e < 0:
                raise ValueError(f"negative exponent {e} at m={m}")
            if e < n:
                out[e] += weight(m)
                hit = True
        if not hit and j >= 2:
            break
        j += 1
    return Series(ring, np.array([ring.reduce(v) for v in out], dtype=ring.dtype))


def _eq(text: str) -> EtaQuotient:
    return EtaQuotient.parse(text)


@dataclass(frozen=True)
class DissectionTerm:
    """``coefficient * q**power * quotient`` as one piece of a dissection."""

    coefficient: int
    power: int
    quotient: EtaQuotient


# the left side of every identity, as an eta quotient
_LHS = {
    LemmaId.L_TRIANGULAR: _eq("2^2 1^-1"),
    LemmaId.L_CUBE: _eq("1^3"),
    LemmaId.L_PENTAGONAL: _eq("1^1"),
    LemmaId.L_SEXTIC: _eq("1^5 2^-2"),
    LemmaId.L_PHI_SQUARE: _eq("1^2 2^-1"),
    LemmaId.L_PHI_2DISS: _eq("1^2 2^-1"),
    LemmaId.L_PHI_3DISS: _eq("1^2 2^-1"),
    LemmaId.L_F1F2_3DISS: _eq("1^1 2^1"),
    LemmaId.L_INV4_2DISS: _eq("1^-4"),
    LemmaId.L_MOD11_A: _eq("1^2 4^2 2^-1"),
    LemmaId.L_MOD11_B: _eq("2^5 1^-2"),
}

# (modulus of the dissection, its pieces)
_DISSECTIONS = {
    LemmaId.L_PHI_2DISS: (2, (
        DissectionTerm(1, 0, _eq("8^5 4^-2 16^-2")),
        DissectionTerm(-2, 1, _eq("16^2 8^-1")),
    )),
    LemmaId.L_PHI_3DISS: (3, (
        DissectionTerm(1, 0, _eq("9^2 18^-1")),
        DissectionTerm(-2, 1, _eq("3^1 18^2 6^-1 9^-1")),
    )),
    LemmaId.L_F1F2_3DISS: (3, (
        DissectionTerm(1, 0, _eq("6^1 9^4 3^-1 18^-2")),
        DissectionTerm(-1, 1, _eq("9^1 18^1")),
        DissectionTerm(-2, 2, _eq("3^1 18^4 6^-1 9^-2")),
    )),
    LemmaId.L_INV4_2DISS: (2, (
        DissectionTerm(1, 0, _eq("4^14 2^-14 8^-4")),
        DissectionTerm(4, 1, _eq("4^2 8^4 2^-10")),
    )),
}

_THETA = {
    LemmaId.L_TRIANGULAR: (lambda m: m * (m + 1) // 2, lambda m: 1, False),
    LemmaId.L_CUBE: (lambda m: m * (m + 1) // 2, lambda m: (-1) ** m * (2 * m + 1), False),
    LemmaId.L_PENTAGONAL: (lambda m: m * (3 * m - 1) // 2, lambda m: (-1) ** (m % 2), True),
    LemmaId.L_SEXTIC: (lambda m: m * (3 * m + 1) // 2, lambda m: 6 * m + 1, True),
    LemmaId.L_PHI_SQUARE: (lambda j: j * j, lambda j: (-1) ** (j % 2), True),
    LemmaId.L_MOD11_A: (lambda m: 3 * m * m + 2 * m, lambda m: 3 * m + 1, True),
    LemmaId.L_MOD11_B: (lambda m: 3 * m * m + 2 * m, lambda m: (-1) ** (m % 2) * (3 * m + 1), True),
}


def dissection_terms(tag: LemmaId) -> tuple[int, tuple[DissectionTerm, ...]]:
    """Dissection modulus and pieces for the four dissection identities."""
    if tag not in _DISSECTIONS:
        raise ValueError(f"{tag.value} is not a dissection identity")
    return _DISSECTIONS[tag]


def theta_rhs(tag: LemmaId, n: int, ring: CoeffRing = ZZ) -> Series:
    if n < 1:
        raise ValueError("order must be >= 1")
    if tag in _THETA:
        exponent, weight, bilateral = _THETA[tag]
        return theta_sum(n, exponent, weight, ring, bilateral)
    _, terms = _DISSECTIONS[tag]
    acc = zero(ring, n)
    for term in terms:
        if term.power >= n:
            continue
        piece = eta_quotient_series(term.quotient, n - term.power, ring)
        acc = add(acc, scalar_mul(shift(piece, term.power), term.coefficient))
    return acc


def lemma_lhs(tag: LemmaId, n: int, ring: CoeffRing = ZZ) -> Series:
    """Left side of the identity.

    The pentagonal identity is the very formula used to expand ``f_r``, so
    its left side is taken from the literal product instead.
    """
    if tag is LemmaId.L_PENTAGONAL:
        return pochhammer_product(1, n, ring)
    return eta_quotient_series(_LHS[tag], n, ring)


def lhs_quotient(tag: LemmaId) -> EtaQuotient:
    return _LHS[tag]


@dataclass(frozen=True)
class LemmaReport:
    tag: LemmaId
    order: int
    passed: bool
    mismatch: Optional[tuple[int, int, int]] = None  # (index, lhs, rhs)

    def __str__(self):
        if self.passed:
            return f"{self.tag.value}: pass (order {self.order})"
        i, left, right = self.mismatch
        return f"{self.tag.value}: FAIL at q^{i}: lhs {left} != rhs {right} (order {self.order})"


def verify_lemma(tag: LemmaId, n: int, rhs: Optional[Series] = None) -> LemmaReport:
    """Check the identity to order ``n`` over the exact integers.

    ``rhs`` overrides the built-in right side (used for negative controls).
    """
    if n < 1:
        raise ValueError("order must be >= 1")
    left = lemma_lhs(tag, n, ZZ)
    right = theta_rhs(tag, n, ZZ) if rhs is None else rhs
    if right.ring != ZZ:
        raise ValueError("identities are checked over the exact integers")
    if right.order < n:
        raise ValueError(f"rhs has order {right.order} < {n}")
    right = truncate(right, n)
    i = first_difference(left, right, n)
    if i is None:
        return LemmaReport(tag, n, True)
    return LemmaReport(tag, n, False, (i, int(left.coeffs[i]), int(right.coeffs[i])))


def dissection_pieces(tag: LemmaId, n: int) -> list[tuple[int, Series, Series]]:
    """For each residue ``B`` of a dissection identity, return
    ``(B, dissect(lhs, A, B), deflated piece)`` over the exact integers.
    """
    A, terms = dissection_terms(tag)
    left = lemma_lhs(tag, n, ZZ)
    out = []
    for term in terms:
        got = dissect(left, A, term.power)
        piece = eta_quotient_series(term.quotient.deflated(A), got.order, ZZ)
        out.append((term.power, got, scalar_mul(piece, term.coefficient)))
    return out
