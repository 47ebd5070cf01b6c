"""Truncated power series in q over Z or Z/MZ.

A :class:`Series` of order ``N`` holds the coefficients of ``q^0 .. q^(N-1)``.
Binary operations on series of different orders truncate to the smaller
order.  Series are immutable; every operation returns a new one.

Storage is a numpy array.  Moduli up to ``2**31`` use ``int64`` and the
compiled kernels in :mod:`qdiamond._kernels`; exact integers and larger moduli
use ``object`` arrays of Python ints.
"""
from __future__ import annotations

import builtins
import math
from dataclasses import dataclass
from typing import Iterable, Optional

import numpy as np

from qdiamond import _kernels

__all__ = [
    "CoeffRing", "ZZ", "Zmod", "Series", "RingMismatch",
    "zero", "one", "from_coeffs", "monomial",
    "add", "sub", "neg", "scalar_mul", "mul", "divide", "invert", "pow",
    "mul_pow", "inflate", "dissect", "shift", "truncate", "reduce_mod",
    "coeff", "equal_up_to", "first_difference",
]

# largest modulus handled by the int64 kernels: (m-1)**2 + m < 2**63
INT64_MODULUS_LIMIT = 2**31


class RingMismatch(ValueError):
    """Raised when two series over different coefficient rings are combined."""


@dataclass(frozen=True)
class CoeffRing:
    """Coefficient ring: exact integers (``modulus=None``) or Z/MZ."""

    modulus: Optional[int] = None

    def __post_init__(self):
        if self.modulus is not None:
            if int(self.modulus) != self.modulus or self.modulus < 2:
                raise ValueError(f"modulus must be an integer >= 2, got {self.modulus!r}")
            object.__setattr__(self, "modulus", int(self.modulus))

    @property
    def is_exact(self) -> bool:
        return self.modulus is None

    @property
    def uses_int64(self) -> bool:
        return self.modulus is not None and self.modulus <= INT64_MODULUS_LIMIT

    @property
    def dtype(self):
        return np.int64 if self.uses_int64 else object

    def reduce(self, x: int) -> int:
        x = int(x)
        return x if self.modulus is None else x % self.modulus

    def is_unit(self, x: int) -> bool:
        if self.modulus is None:
            return int(x) in (1, -1)
        return math.gcd(int(x), self.modulus) == 1

    def unit_inverse(self, x: int) -> int:
        if not self.is_unit(x):
            raise ZeroDivisionError(f"{x} is not a unit in {self}")
        if self.modulus is None:
            return int(x)
        return builtins.pow(int(x), -1, self.modulus)

    def __str__(self):
        return "ZZ" if self.modulus is None else f"Z/{self.modulus}"


ZZ = CoeffRing()


def Zmod(m: int) -> CoeffRing:
    return CoeffRing(m)


def _normalize(ring: CoeffRing, values) -> np.ndarray:
    if isinstance(values, np.ndarray) and values.dtype.kind in "iu" and ring.uses_int64:
        return np.mod(values.astype(np.int64, copy=False), ring.modulus)
    arr = np.array([ring.reduce(v) for v in values], dtype=ring.dtype)
    if arr.ndim != 1:
        arr = arr.reshape(-1)
    return arr


class Series:
    """Immutable truncated power series; see the module docstring."""

    __slots__ = ("ring", "coeffs")

    def __init__(self, ring: CoeffRing, coeffs: np.ndarray):
        # trusted constructor: coeffs must already be reduced and of ring.dtype
        if coeffs.ndim != 1 or coeffs.size < 1:
            raise ValueError("a series needs at least one coefficient")
        coeffs.flags.writeable = False
        self.ring = ring
        self.coeffs = coeffs

    @property
    def order(self) -> int:
        return self.coeffs.size

    def __len__(self):
        return self.coeffs.size

    def __getitem__(self, n):
        if isinstance(n, slice):
            return [int(v) for v in self.coeffs[n]]
        return coeff(self, n)

    def tolist(self) -> list[int]:
        return [int(v) for v in self.coeffs]

    def nonzero(self) -> np.ndarray:
        return np.flatnonzero(self.coeffs)

    def is_zero(self) -> bool:
        return not np.any(self.coeffs)

    def __eq__(self, other):
        if not isinstance(other, Series):
            return NotImplemented
        return (self.ring == other.ring and self.order == other.order
                and bool(np.all(self.coeffs == other.coeffs)))

    __hash__ = None

    def __repr__(self):
        head = self.tolist()[:12]
        tail = ", ..." if self.order > 12 else ""
        return f"Series({self.ring}, order={self.order}, [{', '.join(map(str, head))}{tail}])"

    def __add__(self, other):
        return add(self, other)

    def __sub__(self, other):
        return sub(self, other)

    def __neg__(self):
        return neg(self)

    def __mul__(self, other):
        if isinstance(other, (int, np.integer)):
            return scalar_mul(self, int(other))
        return mul(self, other)

    def __rmul__(self, other):
        if isinstance(other, (int, np.integer)):
            return scalar_mul(self, int(other))
        return NotImplemented

    def __truediv__(self, other):
        return divide(self, other)

    def __pow__(self, e):
        return pow(self, e)


def _check_ring(a: Series, b: Series):
    if a.ring != b.ring:
        raise RingMismatch(f"cannot combine series over {a.ring} and {b.ring}")


def _wrap(ring: CoeffRing, arr: np.ndarray) -> Series:
    if ring.modulus is not None and arr.dtype == object:
        arr = arr % ring.modulus
    return Series(ring, arr)


def zero(ring: CoeffRing, n: int) -> Series:
    if n < 1:
        raise ValueError("order must be >= 1")
    return Series(ring, np.zeros(n, dtype=ring.dtype))


def one(ring: CoeffRing, n: int) -> Series:
    return monomial(ring, n, 0)


def monomial(ring: CoeffRing, n: int, power: int, c: int = 1) -> Series:
    """``c * q**power`` to order ``n``."""
    s = np.zeros(n, dtype=ring.dtype) if n >= 1 else None
    if s is None:
        raise ValueError("order must be >= 1")
    if power < n:
        s[power] = ring.reduce(c)
    return Series(ring, s)


def from_coeffs(ring: CoeffRing, values: Iterable[int]) -> Series:
    if not isinstance(values, np.ndarray):
        values = list(values)
    return Series(ring, _normalize(ring, values))


def add(a: Series, b: Series) -> Series:
    _check_ring(a, b)
    n = min(a.order, b.order)
    out = a.coeffs[:n] + b.coeffs[:n]
    if a.ring.uses_int64:
        out %= a.ring.modulus
    return _wrap(a.ring, out)


def sub(a: Series, b: Series) -> Series:
    _check_ring(a, b)
    n = min(a.order, b.order)
    out = a.coeffs[:n] - b.coeffs[:n]
    if a.ring.uses_int64:
        out %= a.ring.modulus
    return _wrap(a.ring, out)


def neg(a: Series) -> Series:
    return scalar_mul(a, -1)


def scalar_mul(a: Series, c: int) -> Series:
    c = a.ring.reduce(c)
    if a.ring.uses_int64:
        # c < 2**31 and coeffs < 2**31
        return Series(a.ring, (a.coeffs * np.int64(c)) % a.ring.modulus)
    return _wrap(a.ring, a.coeffs * c)


def truncate(a: Series, n: int) -> Series:
    if not 1 <= n <= a.order:
        raise ValueError(f"cannot truncate order {a.order} series to {n}")
    return a if n == a.order else Series(a.ring, a.coeffs[:n].copy())


def shift(a: Series, s: int) -> Series:
    """Multiply by ``q**s``; the order grows by ``s``."""
    if s < 0:
        raise ValueError("shift must be non-negative")
    if s == 0:
        return a
    out = np.zeros(a.order + s, dtype=a.coeffs.dtype)
    out[s:] = a.coeffs
    return Series(a.ring, out)


# -- multiplication ---------------------------------------------------------

def _schoolbook(ring: CoeffRing, a: np.ndarray, b: np.ndarray, n: int) -> np.ndarray:
    ia = np.flatnonzero(a[:n])
    ib = np.flatnonzero(b[:n])
    if ib.size < ia.size:
        a, b, ia = b, a, ib
    if ring.uses_int64:
        return _kernels.mul_mod(ia.astype(np.int64), a, b, n, ring.modulus)
    out = np.zeros(n, dtype=object)
    for i in ia:
        out[i:] += a[i] * b[:n - i]
    return out


def _kron_nonneg(x: list[int], y: list[int], n: int) -> list[int]:
    mx, my = max(x), max(y)
    if mx == 0 or my == 0:
        return [0] * n
    bits = mx.bit_length() + my.bit_length() + n.bit_length() + 1
    s = (bits + 7) // 8
    X = int.from_bytes(b"".join(v.to_bytes(s, "little") for v in x), "little")
    Y = int.from_bytes(b"".join(v.to_bytes(s, "little") for v in y), "little")
    raw = (X * Y).to_bytes((len(x) + len(y)) * s, "little")
    return [int.from_bytes(raw[i * s:(i + 1) * s], "little") for i in range(n)]


def _kron_int64(x: np.ndarray, y: np.ndarray, n: int, m: int) -> np.ndarray:
    bits = 2 * (m - 1).bit_length() + n.bit_length() + 1
    s = (bits + 7) // 8
    w = min(s, 8)

    def pack(v):
        buf = np.zeros((n, s), np.uint8)
        buf[:, :w] = v.astype("<u8").view(np.uint8).reshape(n, 8)[:, :w]
        return int.from_bytes(buf.tobytes(), "little")

    raw = (pack(x) * pack(y)).to_bytes(2 * n * s, "little")
    slots = np.frombuffer(raw, np.uint8)[:n * s].reshape(n, s)
    lo = np.zeros((n, 8), np.uint8)
    lo[:, :w] = slots[:, :w]
    out = lo.view("<u8").reshape(n) % np.uint64(m)
    if s > 8:
        hi = np.zeros((n, 8), np.uint8)
        hi[:, :s - 8] = slots[:, 8:]
        hi = hi.view("<u8").reshape(n) % np.uint64(m)
        out = (out + hi * np.uint64(builtins.pow(2, 64, m))) % np.uint64(m)
    return out.astype(np.int64)


def _kronecker(ring: CoeffRing, a: np.ndarray, b: np.ndarray, n: int) -> np.ndarray:
    if ring.uses_int64:
        return _kron_int64(a[:n], b[:n], n, ring.modulus)
    xa = [int(v) for v in a[:n]]
    xb = [int(v) for v in b[:n]]
    if ring.modulus is not None:
        return np.array(_kron_nonneg(xa, xb, n), dtype=object)
    ap, an = [max(v, 0) for v in xa], [max(-v, 0) for v in xa]
    bp, bn = [max(v, 0) for v in xb], [max(-v, 0) for v in xb]
    out = np.zeros(n, dtype=object)
    for u, v, sign in ((ap, bp, 1), (ap, bn, -1), (an, bp, -1), (an, bn, 1)):
        if any(u) and any(v):
            out += sign * np.array(_kron_nonneg(u, v, n), dtype=object)
    return out


def mul(a: Series, b: Series, fast: bool = False) -> Series:
    """Truncated product; order is ``min(a.order, b.order)``.

    The default is schoolbook convolution (skipping zero coefficients of the
    sparser factor).  ``fast=True`` uses Kronecker substitution through one
    big-integer multiplication; both paths are bit-identical.
    """
    _check_ring(a, b)
    n = min(a.order, b.order)
    if fast:
        out = _kronecker(a.ring, a.coeffs, b.coeffs, n)
    else:
        out = _schoolbook(a.ring, a.coeffs, b.coeffs, n)
    return _wrap(a.ring, out)


# -- division ---------------------------------------------------------------

def divide(a: Series, b: Series) -> Series:
    """``a / b`` by the recurrence ``c[n] = b0^-1 (a[n] - sum b[i] c[n-i])``.

    The constant term of ``b`` must be a unit.
    """
    _check_ring(a, b)
    ring = a.ring
    n = min(a.order, b.order)
    inv0 = ring.unit_inverse(b.coeffs[0])
    idx = np.flatnonzero(b.coeffs[1:n]) + 1
    if ring.uses_int64:
        m = ring.modulus
        vals = b.coeffs[idx]
        vals = np.where(vals > m // 2, vals - m, vals)
        out = _kernels.div_mod(a.coeffs, idx.astype(np.int64), vals, inv0, n, ring.modulus)
        return Series(ring, out)
    vals = b.coeffs[idx]
    out = np.empty(n, dtype=object)
    m = ring.modulus
    cuts = np.searchsorted(idx, np.arange(n), side="right")
    for k in range(n):
        c = cuts[k]
        s = a.coeffs[k]
        if c:
            s = s - np.dot(vals[:c], out[k - idx[:c]])
        s = s * inv0
        out[k] = s if m is None else s % m
    return Series(ring, out)


def invert(a: Series) -> Series:
    """Multiplicative inverse; the constant term must be a unit."""
    return divide(one(a.ring, a.order), a)


def _prefers_repeated(a: Series, e: int, n: int, fast: bool) -> bool:
    nnz = int(np.count_nonzero(a.coeffs[:n]))
    if fast:
        # one Kronecker product costs roughly as much as ~100 sparse row passes
        return nnz * e <= 200 * e.bit_length()
    return nnz * e <= 2 * e.bit_length() * n


def mul_pow(acc: Series, a: Series, e: int, fast: bool = False) -> Series:
    """``acc * a**e`` for any integer ``e``.

    For sparse ``a`` (theta-like expansions) this multiplies or divides by
    ``a`` one factor at a time, which costs ``O(|e| * nnz(a) * N)`` instead
    of dense squarings.  Otherwise it falls back to binary powering.
    """
    _check_ring(acc, a)
    if e == 0:
        return acc
    n = min(acc.order, a.order)
    if e < 0 and not a.ring.is_unit(a.coeffs[0]):
        raise ZeroDivisionError(f"constant term {a.coeffs[0]} is not a unit in {a.ring}")
    if _prefers_repeated(a, abs(e), n, fast):
        step = divide if e < 0 else (lambda x, y: mul(x, y, fast))
        for _ in range(abs(e)):
            acc = step(acc, a)
        return acc
    base = invert(a) if e < 0 else a
    return mul(acc, _binary_pow(base, abs(e), fast), fast)


def _binary_pow(a: Series, e: int, fast: bool) -> Series:
    result = None
    base = a
    while e:
        if e & 1:
            result = base if result is None else mul(result, base, fast)
        e >>= 1
        if e:
            base = mul(base, base, fast)
    return result


def pow(a: Series, e: int, fast: bool = False) -> Series:
    """``a**e``; negative ``e`` requires a unit constant term."""
    return mul_pow(one(a.ring, a.order), a, int(e), fast)


# -- index manipulations ----------------------------------------------------

def inflate(a: Series, m: int, order: Optional[int] = None) -> Series:
    """Substitute ``q -> q**m``.

    The result has order ``m * a.order`` by default; a smaller ``order`` may
    be requested.  Larger orders would need coefficients ``a`` does not have.
    """
    if m < 1:
        raise ValueError("inflation factor must be >= 1")
    full = m * a.order
    order = full if order is None else order
    if not 1 <= order <= full:
        raise ValueError(f"order {order} not available from inflating order {a.order} by {m}")
    out = np.zeros(full, dtype=a.coeffs.dtype)
    out[::m] = a.coeffs
    return Series(a.ring, out[:order].copy())


def dissect(a: Series, A: int, B: int) -> Series:
    """Coefficients along ``A*n + B``: ``b[n] = a[A*n + B]``."""
    if A < 1 or not 0 <= B < A:
        raise ValueError(f"need A >= 1 and 0 <= B < A, got A={A}, B={B}")
    if B >= a.order:
        raise ValueError(f"residue {B} beyond series order {a.order}")
    return Series(a.ring, a.coeffs[B::A].copy())


def reduce_mod(a: Series, M: int) -> Series:
    """Reduce coefficients into ``[0, M)``.

    Accepts a series over Z, or over Z/M' with ``M`` dividing ``M'``.
    """
    target = Zmod(M)
    if a.ring.modulus is not None and a.ring.modulus % M:
        raise ValueError(f"cannot reduce {a.ring} modulo {M}")
    if target.uses_int64 and a.coeffs.dtype != object:
        return Series(target, a.coeffs % M)
    out = np.array([int(v) % M for v in a.coeffs], dtype=target.dtype)
    return Series(target, out)


def coeff(a: Series, n: int) -> int:
    if not 0 <= n < a.order:
        raise IndexError(f"coefficient {n} outside order {a.order}")
    return int(a.coeffs[n])


def first_difference(a: Series, b: Series, n: Optional[int] = None) -> Optional[int]:
    """Index of the first differing coefficient below ``n``, or ``None``."""
    _check_ring(a, b)
    n = min(a.order, b.order) if n is None else n
    if n > a.order or n > b.order:
        raise ValueError(f"cannot compare {n} coefficients of orders {a.order}, {b.order}")
    diff = np.flatnonzero(a.coeffs[:n] != b.coeffs[:n])
    return int(diff[0]) if diff.size else None


def equal_up_to(a: Series, b: Series, n: int) -> bool:
    return first_difference(a, b, n) is None
