"""Fibonacci numeration: Fibonacci numbers, Zeckendorf representations,
Pisano periods, and the infinite Fibonacci word."""

from __future__ import annotations

from bisect import bisect_right
from functools import lru_cache

__all__ = [
    "fib",
    "zeckendorf",
    "unzeckendorf",
    "pisano",
    "fib_word_prefix",
    "fib_word_rows",
    "c",
]

# Index convention used throughout the package: fib(0) = fib(1) = 1,
# fib(2) = 2, fib(3) = 3, ...  Zeckendorf indices start at 1 (the value 1
# appears at indices 0 and 1; admitting index 0 would break uniqueness).

_FIBS: list[int] = [1, 1, 2]


def _fibs_upto(n: int) -> list[int]:
    """Shared ascending fib table, grown until its last entry exceeds n."""
    while _FIBS[-1] <= n:
        _FIBS.append(_FIBS[-1] + _FIBS[-2])
    return _FIBS


def _doubling_pair(k: int) -> tuple[int, int]:
    # fast doubling on the 0, 1, 1, 2, ... convention
    if k == 0:
        return 0, 1
    a, b = _doubling_pair(k >> 1)
    c0 = a * (2 * b - a)
    c1 = a * a + b * b
    if k & 1:
        return c1, c0 + c1
    return c0, c1


@lru_cache(maxsize=4096)
def _fib_big(i: int) -> int:
    return _doubling_pair(i + 1)[0]


def fib(i: int) -> int:
    """i-th Fibonacci number under fib(0) = fib(1) = 1."""
    if i < 0:
        raise ValueError(f"fib index must be non-negative, got {i}")
    if i < 128:
        while len(_FIBS) <= i:
            _FIBS.append(_FIBS[-1] + _FIBS[-2])
        return _FIBS[i]
    return _fib_big(i)


def zeckendorf(n: int) -> list[int]:
    """Ascending, non-adjacent Fibonacci indices (all >= 1) summing to n.

    Greedy: repeatedly take the largest fib(i) <= remainder.  The remainder
    after subtracting fib(j) is < fib(j - 1), which forces the non-adjacency
    gap and makes the result the unique such representation.
    """
    if n < 1:
        raise ValueError(f"zeckendorf requires n >= 1, got {n}")
    fibs = _fibs_upto(n)
    j = bisect_right(fibs, n) - 1  # for n = 1 this lands on index 1, not 0
    out: list[int] = []
    while n > 0:
        while fibs[j] > n:
            j -= 1
        out.append(j)
        n -= fibs[j]
        j -= 2
    out.reverse()
    return out


def unzeckendorf(indices: list[int]) -> int:
    """Inverse of zeckendorf; rejects anything but a valid representation."""
    if not indices:
        raise ValueError("empty representation")
    prev = None
    for i in indices:
        if i < 1:
            raise ValueError(f"index {i} out of range (must be >= 1)")
        if prev is not None and i < prev + 2:
            raise ValueError(f"indices {prev}, {i} violate non-adjacency")
        prev = i
    return sum(fib(i) for i in indices)


def pisano(n: int) -> int:
    """Period of the Fibonacci sequence modulo n.

    Smallest pi > 0 with fib(i + pi) = fib(i) (mod n) for all i, found by
    scanning consecutive residue pairs until the initial pair recurs.
    """
    if n < 1:
        raise ValueError(f"modulus must be >= 1, got {n}")
    if n == 1:
        return 1
    a, b = 1 % n, 1 % n
    period = 0
    while True:
        a, b = b, (a + b) % n
        period += 1
        if a == 1 and b == 1:
            return period


def fib_word_rows(count: int) -> list[str]:
    """First `count` rows of the substitution 1 -> 10, 0 -> 1 seeded with "10"."""
    if count < 0:
        raise ValueError("row count must be non-negative")
    rows: list[str] = []
    row = "10"
    for _ in range(count):
        rows.append(row)
        row = "".join("10" if ch == "1" else "1" for ch in row)
    return rows


def fib_word_prefix(length: int) -> str:
    """First `length` symbols of the infinite Fibonacci word 1011010110110..."""
    if length < 0:
        raise ValueError("length must be non-negative")
    row = "10"
    while len(row) < length:
        row = "".join("10" if ch == "1" else "1" for ch in row)
    return row[:length]


def c(n: int) -> int:
    """n-th symbol (1-based) of the Fibonacci word.

    1 exactly when the smallest Zeckendorf index of n is odd, i.e. when n is
    a value of the golden-ratio Beatty sequence.
    """
    if n < 1:
        raise ValueError(f"c requires n >= 1, got {n}")
    return 1 if zeckendorf(n)[0] % 2 == 1 else 0
