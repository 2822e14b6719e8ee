"""Exact evaluation of the golden-ratio Beatty map f(x) = floor(phi * x),
its inverse, the complement decomposition, and arithmetic with numbers of
the form (p + q*sqrt(5)) / r."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, isqrt

from .numeration import fib, zeckendorf

__all__ = [
    "isqrt",
    "f_floor",
    "f_zeck",
    "f_inverse",
    "BeattyDecomposition",
    "decompose",
    "additivity_defect",
    "linear_defect",
    "compare_phi",
    "QuadRat",
    "PHI",
    "quad_floor",
    "quad_ceil",
]


def f_floor(x: int) -> int:
    """floor(phi * x) for x > 0, and 0 for x <= 0."""
    if x <= 0:
        return 0
    # 5*x*x is never a perfect square for x > 0, so isqrt lands strictly
    # below sqrt(5)*x and the floor is exact.
    return (x + isqrt(5 * x * x)) // 2


def f_zeck(x: int) -> int:
    """floor(phi * x) computed through the Zeckendorf index shift.

    Shift every index up by one and sum; subtract 1 when the smallest index
    is odd.  Independent of f_floor, used as a cross-check.
    """
    if x < 1:
        raise ValueError(f"f_zeck requires x >= 1, got {x}")
    idx = zeckendorf(x)
    total = sum(fib(i + 1) for i in idx)
    return total - 1 if idx[0] % 2 == 1 else total


def f_inverse(y: int) -> int | None:
    """The unique x with f_floor(x) = y, or None when y is not a value of f.

    y is a value exactly when its smallest Zeckendorf index is odd; then x
    is obtained by shifting every index down by one (index 1 maps to
    fib(0) = 1).
    """
    if y < 1:
        raise ValueError(f"f_inverse requires y >= 1, got {y}")
    idx = zeckendorf(y)
    if idx[0] % 2 == 0:
        return None
    return sum(fib(i - 1) for i in idx)


@dataclass(frozen=True)
class BeattyDecomposition:
    """Which half of the complementary pair n falls in: n = f(x) on the
    F branch, n = f(x) + x on the G branch."""

    kind: str  # "F" or "G"
    x: int


def decompose(n: int) -> BeattyDecomposition:
    """Write n >= 1 as f(x) or f(x) + x, exactly one of which is possible."""
    if n < 1:
        raise ValueError(f"decompose requires n >= 1, got {n}")
    x = f_inverse(n)
    if x is not None:
        return BeattyDecomposition("F", x)
    # n = floor((phi + 1) * x) has the single candidate x = ceil(n / phi^2),
    # and ceil(n / phi^2) = 2n - floor(phi * n) since phi^2 = phi + 1.
    x = 2 * n - f_floor(n)
    if f_floor(x) + x != n:
        raise AssertionError(f"complement decomposition failed for n={n}")
    return BeattyDecomposition("G", x)


def additivity_defect(x: int, y: int) -> int:
    """f(x + y) - f(x) - f(y); always 0 or 1 for x, y >= 1."""
    if x < 1 or y < 1:
        raise ValueError("additivity_defect requires x, y >= 1")
    return f_floor(x + y) - f_floor(x) - f_floor(y)


def linear_defect(r: int, x: int, b: int) -> int:
    """f(r*x + b) - r*f(x) - f(b); lies in [0, r] for r, x, b >= 1."""
    if r < 1 or x < 1 or b < 1 or r * x + b < 1:
        raise ValueError("linear_defect requires r, x, b >= 1")
    return f_floor(r * x + b) - r * f_floor(x) - f_floor(b)


def compare_phi(p: int, q: int) -> int:
    """-1 when p/q < phi, +1 when p/q > phi.  A rational never equals phi."""
    if q < 1:
        raise ValueError(f"denominator must be >= 1, got {q}")
    t = 2 * p - q
    if t < 0:
        return -1
    return -1 if t * t < 5 * q * q else 1


@dataclass(frozen=True)
class QuadRat:
    """Exact number (p + q*sqrt(5)) / r, canonical: r > 0 and gcd(p, q, r) = 1.

    Equals a rational iff q == 0 after canonicalization, so structural
    equality decides value equality.
    """

    p: int
    q: int
    r: int = 1

    def __post_init__(self) -> None:
        p, q, r = self.p, self.q, self.r
        if r == 0:
            raise ValueError("zero denominator")
        if r < 0:
            p, q, r = -p, -q, -r
        g = gcd(gcd(abs(p), abs(q)), r)
        if g > 1:
            p, q, r = p // g, q // g, r // g
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "q", q)
        object.__setattr__(self, "r", r)

    @classmethod
    def from_fraction(cls, value: Fraction | int) -> "QuadRat":
        fr = Fraction(value)
        return cls(fr.numerator, 0, fr.denominator)

    @property
    def is_rational(self) -> bool:
        return self.q == 0

    def as_fraction(self) -> Fraction:
        if self.q != 0:
            raise ValueError(f"{self!r} is irrational")
        return Fraction(self.p, self.r)

    def __neg__(self) -> "QuadRat":
        return QuadRat(-self.p, -self.q, self.r)

    def reciprocal(self) -> "QuadRat":
        if self.p == 0 and self.q == 0:
            raise ZeroDivisionError("reciprocal of zero")
        # (p + q*sqrt(5))^-1 = r * (p - q*sqrt(5)) / (p^2 - 5 q^2); the norm
        # vanishes only at zero since sqrt(5) is irrational.
        return QuadRat(self.r * self.p, -self.r * self.q, self.p * self.p - 5 * self.q * self.q)

    def scaled(self, factor: Fraction | int) -> "QuadRat":
        fr = Fraction(factor)
        return QuadRat(self.p * fr.numerator, self.q * fr.numerator, self.r * fr.denominator)

    def __repr__(self) -> str:
        return f"({self.p} + {self.q}*sqrt5)/{self.r}"


PHI = QuadRat(1, 1, 2)


def quad_floor(v: QuadRat) -> int:
    """Exact floor of (p + q*sqrt(5)) / r."""
    q = v.q
    if q == 0:
        shift = 0
    elif q > 0:
        shift = isqrt(5 * q * q)
    else:
        # 5 q^2 is never a perfect square for q != 0, so the ceiling of
        # |q|*sqrt(5) is isqrt(5 q^2) + 1.
        shift = -isqrt(5 * q * q) - 1
    return (v.p + shift) // v.r


def quad_ceil(v: QuadRat) -> int:
    return -quad_floor(-v)
