"""
Closed forms: classical counting sequences, backward differences, ballot
numbers, the per-pattern refined counts and the Motzkin column series.

Row indices are permutation lengths (1-based) throughout.  The Motzkin
column series are the one place where a 0-based convention leaks in:
``column_gf(k, N)[n]`` is the number of avoiders of {1-23, 21-3} of length
``n + 1`` whose last entry is ``k + 1`` (column 1 of the table, i.e. last
entry 1, is ``k = 0``).
"""

from __future__ import annotations

import threading
from functools import lru_cache
from math import comb
from typing import Callable, Iterable, Sequence

from .core import GeneralizedPattern, parse_pattern, pattern_set
from .oracle import RefinedDistribution, Statistic
from .series import TruncatedSeries

__all__ = [
    "UnsupportedCaseError",
    "bell", "catalan", "motzkin", "involutions", "sequence",
    "backward_difference", "nabla", "ballot",
    "closed_form_count", "closed_form_statistic", "closed_form_distribution",
    "supported_cases", "motzkin_pair_entry", "motzkin_gf", "column_gf",
    "INVOLUTION_PAIR", "MOTZKIN_PAIR",
]


class UnsupportedCaseError(LookupError):
    """No closed form is known here for this pattern set."""


class _Sequence:
    """Integer sequence extended on demand by a recurrence over its prefix."""

    def __init__(self, seed: Sequence[int], step: Callable[[list[int]], int]):
        self._values = list(seed)
        self._step = step
        self._lock = threading.Lock()

    def __call__(self, n: int) -> int:
        if n < 0:
            raise ValueError("index must be nonnegative")
        if n >= len(self._values):
            with self._lock:
                while len(self._values) <= n:
                    self._values.append(self._step(self._values))
        return self._values[n]

    def prefix(self, count: int) -> list[int]:
        if count:
            self(count - 1)
        return self._values[:count]


_bell_row = [1]


def _bell_step(values: list[int]) -> int:
    # Bell triangle: each row starts with the last entry of the row above
    global _bell_row
    row = [_bell_row[-1]]
    for a in _bell_row:
        row.append(row[-1] + a)
    _bell_row = row
    return row[0]


def _catalan_step(c: list[int]) -> int:
    n = len(c) - 1
    return sum(c[i] * c[n - i] for i in range(n + 1))


def _motzkin_step(m: list[int]) -> int:
    n = len(m) - 1
    return m[n] + sum(m[i] * m[n - 1 - i] for i in range(n))


def _involution_step(t: list[int]) -> int:
    n = len(t)
    return t[n - 1] + (n - 1) * t[n - 2]


bell = _Sequence([1], _bell_step)
catalan = _Sequence([1], _catalan_step)
motzkin = _Sequence([1, 1], _motzkin_step)
involutions = _Sequence([1, 1], _involution_step)

_SEQUENCES = {"BELL": bell, "CATALAN": catalan, "MOTZKIN": motzkin, "INVOLUTION": involutions}


def sequence(name: str, count: int) -> list[int]:
    """The first ``count`` terms of BELL, CATALAN, MOTZKIN or INVOLUTION."""
    try:
        return _SEQUENCES[name.upper()].prefix(count)
    except KeyError:
        raise ValueError(f"unknown sequence {name!r}") from None


def nabla(seq: Sequence[int], order: int, n: int) -> int:
    """(∇^order a)_n; terms with negative index count as zero."""
    return sum((-1) ** i * comb(order, i) * seq[n - i]
               for i in range(order + 1) if n - i >= 0)


def backward_difference(seq: Sequence[int], order: int) -> list[int]:
    """∇^order applied to ``seq``, aligned so ``result[n]`` is (∇^order a)_n.

    Entries with n < order reach past the start of the sequence and treat the
    missing terms as zero.
    """
    if order < 0:
        raise ValueError("order must be nonnegative")
    out = list(seq)
    for _ in range(order):
        out = [out[0]] + [out[n] - out[n - 1] for n in range(1, len(out))]
    return out


def ballot(n: int, k: int) -> int:
    """(k/n)·C(2n-k-1, n-1), the Catalan triangle entry in row n, column k."""
    if not 1 <= k <= n:
        raise ValueError(f"ballot({n}, {k}) needs 1 <= k <= n")
    q, r = divmod(k * comb(2 * n - k - 1, n - 1), n)
    assert r == 0
    return q


def _bell_diff(order: int, n: int) -> int:
    # ∇^order B_{n-1}
    return nabla(bell.prefix(n), order, n - 1)


def _bell_class(edge: str, diff_order: Callable[[int, int], int]):
    """Formula for a Bell-class pattern.

    ``edge`` says which statistic value gets B_{n-1} outright ("low" is 1,
    "high" is n); every other value k gets ∇^{diff_order(n, k)} B_{n-1}.
    """
    def count(n: int, k: int) -> int:
        special = 1 if edge == "low" else n
        if k == special:
            return bell(n - 1)
        return _bell_diff(diff_order(n, k), n)
    return count


def _ballot_direct(n: int, k: int) -> int:
    return ballot(n, k)


def _ballot_flipped(n: int, k: int) -> int:
    return ballot(n, n - k + 1)


def _involution_pair(n: int, k: int) -> int:
    # ending in 1: I_{n-1}; the (n-1)·I_{n-2} others split evenly over k = 2..n
    return involutions(n - 1) if k == 1 else involutions(n - 2)


@lru_cache(maxsize=None)
def _motzkin_pair(n: int, j: int) -> int:
    # rows n >= 0, where row 0 is the empty permutation, counted with last entry 1
    if n < 0 or j < 1:
        return 0
    if j == 1:
        return 1 if n == 0 else motzkin(n - 1)
    if j == 2:
        return motzkin(n - 1) if n >= 2 else 0
    return _motzkin_pair(n, j - 1) - _motzkin_pair(n - 1, j - 1) - _motzkin_pair(n - 2, j - 2)


def motzkin_pair_entry(n: int, k: int) -> int:
    """Avoiders of {1-23, 21-3} of length n >= 1 ending in k.

    Columns 1 and 2 are Motzkin numbers M_{n-1}; later columns follow the
    difference recurrence a(n, k) = a(n, k-1) - a(n-1, k-1) - a(n-2, k-2).
    """
    if n < 1:
        raise ValueError("n must be positive")
    if not 1 <= k <= n:
        return 0
    return _motzkin_pair(n, k)


_P = parse_pattern
INVOLUTION_PAIR = pattern_set(["1-23", "1-32"])
MOTZKIN_PAIR = pattern_set(["1-23", "21-3"])

_LAST, _FIRST = Statistic.LAST, Statistic.FIRST

_DISPATCH: dict[frozenset, tuple[Statistic, Callable[[int, int], int]]] = {
    frozenset([_P("1-23")]): (_LAST, _bell_class("low", lambda n, k: k - 2)),
    frozenset([_P("32-1")]): (_FIRST, _bell_class("low", lambda n, k: k - 2)),
    frozenset([_P("3-21")]): (_LAST, _bell_class("high", lambda n, k: n - k - 1)),
    frozenset([_P("12-3")]): (_FIRST, _bell_class("high", lambda n, k: n - k - 1)),
    frozenset([_P("3-12")]): (_LAST, _bell_class("high", lambda n, k: k - 1)),
    frozenset([_P("21-3")]): (_FIRST, _bell_class("high", lambda n, k: k - 1)),
    frozenset([_P("1-32")]): (_LAST, _bell_class("low", lambda n, k: n - k)),
    frozenset([_P("23-1")]): (_FIRST, _bell_class("low", lambda n, k: n - k)),
    frozenset([_P("2-13")]): (_LAST, _ballot_direct),
    frozenset([_P("31-2")]): (_FIRST, _ballot_direct),
    frozenset([_P("2-31")]): (_LAST, _ballot_flipped),
    frozenset([_P("13-2")]): (_FIRST, _ballot_flipped),
    INVOLUTION_PAIR: (_LAST, _involution_pair),
    MOTZKIN_PAIR: (_LAST, motzkin_pair_entry),
}


def _key(patterns) -> frozenset[GeneralizedPattern]:
    if isinstance(patterns, (str, GeneralizedPattern)):
        patterns = [patterns]
    return pattern_set(patterns)


def supported_cases() -> list[frozenset[GeneralizedPattern]]:
    return list(_DISPATCH)


def closed_form_statistic(patterns) -> Statistic:
    """Which end of the permutation the closed form for ``patterns`` refines by."""
    try:
        return _DISPATCH[_key(patterns)][0]
    except KeyError:
        raise UnsupportedCaseError(f"no closed form for {sorted(map(str, _key(patterns)))}") from None


def closed_form_count(patterns, n: int, k: int) -> int:
    """Number of avoiders of length n whose first/last entry (per pattern) is k.

    >>> closed_form_count("1-23", 6, 4)
    27
    >>> closed_form_count(["1-23", "21-3"], 8, 4)
    13
    """
    key = _key(patterns)
    if key not in _DISPATCH:
        raise UnsupportedCaseError(f"no closed form for {sorted(map(str, key))}")
    if n < 1:
        raise ValueError("n must be positive")
    if not 1 <= k <= n:
        return 0
    return _DISPATCH[key][1](n, k)


def closed_form_distribution(patterns, n_max: int) -> RefinedDistribution:
    key = _key(patterns)
    stat = closed_form_statistic(key)
    rows = {n: tuple(closed_form_count(key, n, k) for k in range(1, n + 1))
            for n in range(1, n_max + 1)}
    return RefinedDistribution(stat, rows, key)


def motzkin_gf(order: int) -> TruncatedSeries:
    """M(x) = (1 - x - sqrt(1 - 2x - 3x^2)) / (2x^2), to x^order.

    The square root is taken as an exact integer series, so this route is
    independent of the convolution recurrence behind ``motzkin``.
    """
    if order < 0:
        raise ValueError("order must be nonnegative")
    n = order + 2
    root = TruncatedSeries.from_coeffs([1, -2, -3], n).sqrt()
    numer = TruncatedSeries.from_coeffs([1, -1], n) - root
    half = numer.divide_by_x_power(2)
    if any(c % 2 for c in half.coeffs):
        raise ArithmeticError("Motzkin series is not integral")
    return TruncatedSeries(tuple(c // 2 for c in half.coeffs))


def column_gf(k: int, order: int) -> TruncatedSeries:
    """Generating series of column k (0-based) of the {1-23, 21-3} table.

    C_0 = M, and C_k = x^{2(k-1)} M^{k-1} (M - 1) for k >= 1.
    """
    if k < 0:
        raise ValueError("k must be nonnegative")
    m = motzkin_gf(order)
    if k == 0:
        return m
    return ((m ** (k - 1)) * (m - 1)).shift(2 * (k - 1))
