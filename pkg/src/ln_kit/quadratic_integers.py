"""Exact arithmetic in the ring of integers of Q(sqrt(-19)).

Elements are stored as coefficient pairs (a, b) meaning (a + b*sqrt(-19))/2
with a == b (mod 2), so rational integers m are (2m, 0).  Everything here is
exact integer arithmetic; no floating point.

The only units of this ring are +-1 (assumed, not computed): odd powers
absorb them, which is why power-extraction callers may flip the sign of a
base element freely.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

RADICAND = -19


@dataclass(frozen=True)
class QuadInt19:
    """(a + b*sqrt(-19)) / 2, valid only when a and b share parity."""

    a: int
    b: int

    def __post_init__(self) -> None:
        if (self.a - self.b) % 2 != 0:
            raise ValueError(
                f"(a, b) = ({self.a}, {self.b}) is not a ring element: a != b (mod 2)"
            )

    @classmethod
    def from_int(cls, m: int) -> QuadInt19:
        return cls(2 * m, 0)

    def __str__(self) -> str:
        return f"({self.a} {self.b:+}*sqrt(-19))/2"

    def __mul__(self, other: QuadInt19) -> QuadInt19:
        return qmul(self, other)

    def __pow__(self, e: int) -> QuadInt19:
        return qpow(self, e)

    @property
    def norm(self) -> int:
        return (self.a * self.a + 19 * self.b * self.b) // 4

    @property
    def conj(self) -> QuadInt19:
        return QuadInt19(self.a, -self.b)


ONE = QuadInt19.from_int(1)


def qmul(u: QuadInt19, v: QuadInt19) -> QuadInt19:
    """Exact product; the shared-parity invariant guarantees both halvings."""
    return QuadInt19(
        (u.a * v.a - 19 * u.b * v.b) // 2,
        (u.a * v.b + u.b * v.a) // 2,
    )


def qpow(u: QuadInt19, e: int) -> QuadInt19:
    """u^e for e >= 0 by square-and-multiply over qmul."""
    if e < 0:
        raise ValueError(f"exponent must be non-negative, got {e}")
    acc = ONE
    base = u
    while e:
        if e & 1:
            acc = qmul(acc, base)
        base = qmul(base, base)
        e >>= 1
    return acc


def conj(u: QuadInt19) -> QuadInt19:
    return u.conj


def _is_odd_prime(p: int) -> bool:
    if p < 3 or p % 2 == 0:
        return False
    f = 3
    while f * f <= p:
        if p % f == 0:
            return False
        f += 2
    return True


def imag_binomial_sum(a: int, b: int, p: int) -> int:
    """S = sum_{r=0}^{(p-1)/2} C(p, 2r+1) * a^(p-2r-1) * (-19)^r * b^(2r).

    For odd a, b and odd prime p this is the expanded imaginary part of the
    p-th power: b*S == 2^(p-1) * B where (A, B) = qpow(QuadInt19(a, b), p).
    """
    if a % 2 == 0 or b % 2 == 0:
        raise ValueError(f"a and b must be odd, got a={a}, b={b}")
    if not _is_odd_prime(p):
        raise ValueError(f"p must be an odd prime, got {p}")
    return sum(
        math.comb(p, 2 * r + 1) * a ** (p - 2 * r - 1) * (-19) ** r * b ** (2 * r)
        for r in range((p + 1) // 2)
    )


@dataclass(frozen=True)
class QuadFormClassCount:
    """Class number of a negative discriminant with its reduced-form list."""

    discriminant: int
    h: int
    forms: tuple[tuple[int, int, int], ...]


def reduced_forms(disc: int) -> list[tuple[int, int, int]]:
    """All reduced primitive forms (A, B, C) of the given discriminant.

    Reduced means |B| <= A <= C with B >= 0 whenever |B| = A or A = C;
    exactly one per equivalence class, so the count is the class number.
    """
    if disc >= 0:
        raise ValueError(f"discriminant must be negative, got {disc}")
    if disc % 4 not in (0, 1):
        raise ValueError(f"discriminant must be 0 or 1 mod 4, got {disc}")
    out = []
    a_max = math.isqrt(-disc // 3)
    for A in range(1, a_max + 1):
        for B in range(-A, A + 1):
            if (B - disc) % 2 != 0:
                continue
            num = B * B - disc
            if num % (4 * A) != 0:
                continue
            C = num // (4 * A)
            if C < A:
                continue
            if B < 0 and (A == -B or A == C):
                continue
            if math.gcd(A, B, C) != 1:
                continue
            out.append((A, B, C))
    out.sort()
    return out


def class_number_imag(disc: int) -> QuadFormClassCount:
    """Class number by exhaustive reduced-form enumeration; exact and bit-stable."""
    forms = tuple(reduced_forms(disc))
    return QuadFormClassCount(discriminant=disc, h=len(forms), forms=forms)
