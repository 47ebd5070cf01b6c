"""The published congruences for ``d_k`` and the certificates behind them."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional

from qdiamond.certificates import (LinearWeight, QuadraticForm, form_hits_progression,
                                   two_form_weighted_divisibility,
                                   weighted_form_divisibility)
from qdiamond.congruences import (Congruence, family_d7_prime, family_p_minus_1,
                                  family_p_minus_2, special_residue)

__all__ = [
    "SHORTHAND_FAMILIES", "individual_congruences", "family_congruences",
    "paper_catalog", "Certificate", "proof_certificates",
]

# (p, base k, residues): d_{pj+k}(p n + r) = 0 (mod p) for each listed r
SHORTHAND_FAMILIES: tuple[tuple[int, int, tuple[int, ...]], ...] = (
    (2, 1, (1,)),
    (3, 2, (2,)),
    (5, 3, (1, 3, 4)),
    (5, 4, (2, 3)),
    (5, 5, (4,)),
    (7, 5, (2, 3, 4, 6)),
    (7, 6, (3, 5, 6)),
    (7, 7, (5,)),
    (11, 2, (7,)),
    (11, 9, (3, 5, 6, 8, 9, 10)),
    (11, 10, (2, 6, 7, 8, 10)),
    (11, 11, (6,)),
    (13, 11, (3, 4, 6, 7, 8, 10, 11)),
    (13, 12, (2, 5, 6, 7, 8, 11)),
)


def individual_congruences(d7_primes: Iterable[int] = (5, 7, 11, 13)) -> list[Congruence]:
    C = Congruence
    out = [
        C(2, 3, 2, 3, "elementary"),
        C(3, 2, 1, 2, "elementary"),
        C(3, 4, 2, 2, "elementary"),
        C(3, 4, 3, 4, "elementary"),
        C(3, 5, 1, 5, "elementary"),
        C(3, 5, 3, 5, "elementary"),
        C(3, 5, 4, 5, "elementary"),
        C(2, 11, 7, 11, "mod11"),
        C(5, 5, 4, 5, "ramanujan"),
        C(7, 7, 5, 7, "ramanujan"),
        C(11, 11, 6, 11, "ramanujan"),
        C(7, 4, 2, 4, "d7-mod4"),
        C(7, 8, 5, 4, "d7-mod4"),
        C(7, 16, 9, 4, "d7-mod4"),
        C(7, 4, 3, 8, "d7-mod8"),
        C(7, 8, 4, 8, "d7-mod8"),
        C(8, 3, 2, 9, "d8-mod9"),
        C(8, 9, 3, 9, "d8-mod9"),
    ]
    for p in d7_primes:
        out.extend(family_d7_prime(p))
    return out


def family_congruences(j_values: Iterable[int]) -> list[Congruence]:
    """The shorthand families and the two mod-9 families for each ``j``."""
    out = []
    for j in j_values:
        for p, k, residues in SHORTHAND_FAMILIES:
            label = f"d_{{{p}j+{k}}} mod {p}"
            out.extend(Congruence(p * j + k, p, r, p, label, "generated" if j else "paper")
                       for r in residues)
        for r in (5, 8):
            out.append(Congruence(9 * j + 2, 9, r, 9, "d_{9j+2} mod 9",
                                  "generated" if j else "paper"))
    return out


def paper_catalog(j_values: Iterable[int] = range(3),
                  d7_primes: Iterable[int] = (5, 7, 11, 13)) -> list[Congruence]:
    """All published claims with the families expanded over ``j_values``,
    deduplicated (first label wins) and sorted by ``(k, A, B, M)``."""
    seen: dict[tuple, Congruence] = {}
    for c in individual_congruences(d7_primes) + family_congruences(j_values):
        seen.setdefault(c.key, c)
    return sorted(seen.values(), key=lambda c: c.key)


# -- certificates ------------------------------------------------------------

@dataclass(frozen=True)
class Certificate:
    """A finite residue check that underwrites one or more congruences.

    ``kind`` selects the check: ``"hits"`` (does ``form`` reach
    ``B mod A``), ``"weighted"`` (is ``weight`` divisible by ``M`` wherever
    it does) or ``"two-form"`` (the same for sums of two values of
    ``form``).  ``expected`` is the truth value the vanishing argument needs.
    """

    name: str
    kind: str
    form: QuadraticForm
    A: int
    B: int
    expected: bool
    claims: tuple[Congruence, ...]
    weight: Optional[LinearWeight] = None
    M: Optional[int] = None

    def evaluate(self) -> bool:
        if self.kind == "hits":
            return form_hits_progression(self.form, self.A, self.B)
        if self.kind == "weighted":
            return weighted_form_divisibility(self.form, self.weight, self.A, self.B, self.M)
        if self.kind == "two-form":
            return two_form_weighted_divisibility(self.form, self.weight, self.A, self.B,
                                                  self.M)
        raise ValueError(f"unknown certificate kind {self.kind!r}")


TRIANGULAR = QuadraticForm(1, 1, 2)        # m(m+1)/2
OBLONG = QuadraticForm(1, 1, 1)            # m(m+1)
SQUARE = QuadraticForm(1, 0, 1)            # j^2
PENTAGONAL_PLUS = QuadraticForm(3, 1, 2)   # m(3m+1)/2
MOD11_FORM = QuadraticForm(3, 2, 1)        # 3m^2 + 2m
OCTO_PENTAGONAL = QuadraticForm(12, -4, 1)  # 4m(3m-1)
TRIPLE_OBLONG = QuadraticForm(3, 3, 1)     # 3k(k+1)


def proof_certificates(primes: Iterable[int] = (5, 7, 11, 13)) -> list[Certificate]:
    C = Congruence
    certs = [
        Certificate("d_2(3n+2) mod 3", "hits", TRIANGULAR, 3, 2, False,
                    (C(2, 3, 2, 3),)),
        Certificate("d_3(5n+1) mod 5", "weighted", OBLONG, 5, 1, True,
                    (C(3, 5, 1, 5),), LinearWeight(2, 1), 5),
        Certificate("d_3(5n+3) mod 5", "hits", OBLONG, 5, 3, False, (C(3, 5, 3, 5),)),
        Certificate("d_3(5n+4) mod 5", "hits", OBLONG, 5, 4, False, (C(3, 5, 4, 5),)),
        # 2(11n+7) = 3j^2+2j + 3k^2+2k; 14 = 3 (mod 11)
        Certificate("d_2(11n+7) mod 11", "two-form", MOD11_FORM, 11, 3, True,
                    (C(2, 11, 7, 11),), LinearWeight(3, 1), 11),
        # d_3(n) at 3n+1 in the q^3-dissection of d_8
        Certificate("d_8(9n+3) mod 9", "hits", OBLONG, 3, 1, False, (C(8, 9, 3, 9),)),
    ]
    for p in primes:
        for c in family_d7_prime(p):
            r = (c.B - 1) // 2
            certs.append(Certificate(f"d_7({2 * p}n+{c.B}) mod 4", "hits", OCTO_PENTAGONAL,
                                     p, r, False, (c,)))
        t = special_residue(p)
        for c in family_p_minus_2(p):
            if c.B == t:
                certs.append(Certificate(f"d_{p - 2}({p}n+{t}) mod {p} (special)", "weighted",
                                         PENTAGONAL_PLUS, p, t, True, (c,),
                                         LinearWeight(6, 1), p))
            else:
                certs.append(Certificate(f"d_{p - 2}({p}n+{c.B}) mod {p}", "hits",
                                         PENTAGONAL_PLUS, p, c.B, False, (c,)))
        for c in family_p_minus_1(p):
            certs.append(Certificate(f"d_{p - 1}({p}n+{c.B}) mod {p}", "hits", SQUARE,
                                     p, c.B, False, (c,)))
    # induction step of the d_{9j+2} mod 9 families: exponents of f_6^3 sit in
    # 0 or 6 mod 9, and the weight is divisible by 3 on the 6 class
    lifted = tuple(C(9 * j + 2, 9, r, 9) for j in (1, 2) for r in (5, 8))
    for B in (1, 2, 3, 4, 5, 7, 8):
        certs.append(Certificate(f"3k(k+1) avoids {B} mod 9", "hits", TRIPLE_OBLONG, 9, B,
                                 False, lifted))
    certs.append(Certificate("3 | 2k+1 on 3k(k+1) = 6 mod 9", "weighted", TRIPLE_OBLONG,
                             9, 6, True, lifted, LinearWeight(2, 1), 3))
    return certs
