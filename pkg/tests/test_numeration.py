import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from beatty.numeration import (
    c,
    fib,
    fib_word_prefix,
    fib_word_rows,
    pisano,
    unzeckendorf,
    zeckendorf,
)


def test_fib_values():
    assert [fib(i) for i in range(11)] == [1, 1, 2, 3, 5, 8, 13, 21, 34, 55, 89]
    assert fib(10) == 89
    assert fib(300) == fib(299) + fib(298)


def test_fib_rejects_negative_index():
    with pytest.raises(ValueError):
        fib(-1)


def test_zeckendorf_examples():
    assert zeckendorf(1) == [1]
    assert zeckendorf(11) == [3, 5]
    assert zeckendorf(100) == [3, 5, 10]


def test_zeckendorf_rejects_nonpositive():
    for n in (0, -5):
        with pytest.raises(ValueError):
            zeckendorf(n)


def test_unzeckendorf_examples():
    assert unzeckendorf([1]) == 1
    assert unzeckendorf([3, 5]) == 11
    assert unzeckendorf([2, 4]) == 7


def test_unzeckendorf_rejects_invalid():
    for bad in ([], [0], [2, 3], [3, 2], [1, 2]):
        with pytest.raises(ValueError):
            unzeckendorf(bad)


@given(st.integers(min_value=1, max_value=100_000))
def test_zeckendorf_round_trip_and_invariants(n):
    rep = zeckendorf(n)
    assert unzeckendorf(rep) == n
    assert rep[0] >= 1
    assert all(b - a >= 2 for a, b in zip(rep, rep[1:]))


def test_zeckendorf_round_trip_full_range():
    for n in range(1, 100_001):
        rep = zeckendorf(n)
        assert rep[0] >= 1
        assert all(b - a >= 2 for a, b in zip(rep, rep[1:]))
        assert sum(fib(i) for i in rep) == n


def _count_representations(n, max_index):
    # independent oracle: count all non-adjacent index sets (indices >= 1)
    def count(remaining, top):
        if remaining == 0:
            return 1
        total = 0
        i = top
        while i >= 1 and fib(i) > remaining:
            i -= 1
        while i >= 1:
            if fib(i) <= remaining:
                total += count(remaining - fib(i), i - 2)
            i -= 1
        return total

    return count(n, max_index)


def test_zeckendorf_uniqueness_exhaustive():
    top = len(zeckendorf(600)) and zeckendorf(600)[-1] + 2
    for n in range(1, 601):
        assert _count_representations(n, top) == 1


def test_pisano_examples():
    assert pisano(1) == 1
    assert pisano(2) == 3
    assert pisano(3) == 8
    assert pisano(10) == 60


def test_pisano_rejects_nonpositive():
    with pytest.raises(ValueError):
        pisano(0)


@pytest.mark.parametrize("n", range(2, 51))
def test_pisano_is_the_least_period(n):
    period = pisano(n)
    values = [fib(i) % n for i in range(3 * period + period + 1)]
    assert all(values[i + period] == values[i] for i in range(3 * period))
    for smaller in range(1, period):
        if any(values[i + smaller] != values[i] for i in range(2 * period)):
            continue
        pytest.fail(f"period {smaller} < {period} also works for n={n}")


def test_word_rows_match_substitution():
    rows = fib_word_rows(5)
    assert rows == ["10", "101", "10110", "10110101", "1011010110110"]
    # each row rewrites 1 -> 10, 0 -> 1 into the next
    for row, nxt in zip(rows, rows[1:]):
        assert "".join("10" if ch == "1" else "1" for ch in row) == nxt


def test_word_row_lengths_are_fibonacci():
    lengths = [len(row) for row in fib_word_rows(12)]
    assert lengths == [fib(i) for i in range(2, 14)]


def test_word_prefix_examples():
    assert fib_word_prefix(0) == ""
    assert fib_word_prefix(1) == "1"
    assert fib_word_prefix(2) == "10"
    assert fib_word_prefix(8) == "10110101"


def test_word_has_no_adjacent_zeros():
    assert "00" not in fib_word_prefix(100_000)


def test_c_examples():
    assert c(1) == 1
    assert c(2) == 0
    assert c(7) == 0
    with pytest.raises(ValueError):
        c(0)


def test_c_agrees_with_word_prefix():
    limit = fib(24)  # 75025
    word = fib_word_prefix(limit)
    assert all(c(n) == int(word[n - 1]) for n in range(1, limit + 1))


@settings(max_examples=60)
@given(st.integers(min_value=4, max_value=22), st.data())
def test_word_shift_identity(n, data):
    # c(fib(n) + i) = c(i) for 1 <= i <= fib(n - 1)
    i = data.draw(st.integers(min_value=1, max_value=fib(n - 1)))
    assert c(fib(n) + i) == c(i)
