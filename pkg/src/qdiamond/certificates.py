"""Residue-class certificates for quadratic exponent forms.

The vanishing arguments behind many of the congruences reduce to finite
questions about a theta series ``sum w(m) q^f(m)`` with ``f`` quadratic:
does ``f(m)`` ever land in a residue class, and if it does, is the weight
``w(m)`` always divisible by the modulus there?  Both ``f(m) mod A`` and
``w(m) mod M`` are periodic in ``m``, so one period settles the question.
"""
from __future__ import annotations

import math
from collections import defaultdict
from dataclasses import dataclass
from typing import Optional

__all__ = [
    "QuadraticForm", "LinearWeight", "form_hits_progression", "form_witness",
    "weighted_form_divisibility", "two_form_weighted_divisibility",
]


@dataclass(frozen=True)
class QuadraticForm:
    """``f(m) = (a m^2 + b m) / d``, integral for every integer ``m``."""

    a: int
    b: int
    d: int = 1

    def __post_init__(self):
        if self.d < 1:
            raise ValueError("denominator must be positive")
        # a m^2 + b m mod d has period d in m
        bad = [m for m in range(self.d) if (self.a * m * m + self.b * m) % self.d]
        if bad:
            raise ValueError(f"{self} is not integral at m={bad[0]}")

    def __call__(self, m: int) -> int:
        return (self.a * m * m + self.b * m) // self.d

    def period(self, A: int) -> int:
        """A multiple of the period of ``f(m) mod A``."""
        return max(2 * abs(self.a), 1) * self.d * A

    def __str__(self):
        return f"({self.a}m^2 + {self.b}m)/{self.d}"


@dataclass(frozen=True)
class LinearWeight:
    """``w(m) = c m + e``."""

    c: int
    e: int

    def __call__(self, m: int) -> int:
        return self.c * m + self.e

    def __str__(self):
        return f"{self.c}m + {self.e}"


def _check_modulus(A: int):
    if A < 1:
        raise ValueError("A must be >= 1")


def form_witness(f: QuadraticForm, A: int, B: int) -> Optional[int]:
    """Smallest ``m`` in one period with ``f(m) = B (mod A)``, else ``None``."""
    _check_modulus(A)
    for m in range(f.period(A)):
        if (f(m) - B) % A == 0:
            return m
    return None


def form_hits_progression(f: QuadraticForm, A: int, B: int) -> bool:
    return form_witness(f, A, B) is not None


def weighted_form_divisibility(f: QuadraticForm, w: LinearWeight, A: int, B: int,
                               M: int) -> bool:
    """True iff ``M | w(m)`` whenever ``f(m) = B (mod A)``.

    Vacuously true when the class is never hit.
    """
    _check_modulus(A)
    if M < 2:
        raise ValueError("M must be >= 2")
    P = math.lcm(f.period(A), M)
    return all(w(m) % M == 0 for m in range(P) if (f(m) - B) % A == 0)


def two_form_weighted_divisibility(f: QuadraticForm, w: LinearWeight, A: int, B: int,
                                   M: int) -> bool:
    """True iff ``M | w(j) w(k)`` whenever ``f(j) + f(k) = B (mod A)``."""
    _check_modulus(A)
    if M < 2:
        raise ValueError("M must be >= 2")
    P = math.lcm(f.period(A), M)
    weights = defaultdict(set)  # f residue -> weight residues seen there
    for m in range(P):
        weights[f(m) % A].add(w(m) % M)
    for x, wx in weights.items():
        wy = weights.get((B - x) % A)
        if wy is None:
            continue
        if any((u * v) % M for u in wx for v in wy):
            return False
    return True
