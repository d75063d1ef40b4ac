"""Occurrence search for generalized patterns.

Indices in the public API are 1-based, matching one-line notation.
"""

from __future__ import annotations

from typing import Iterable, Iterator, Sequence

from .core import GeneralizedPattern, Permutation

__all__ = ["occurrences", "contains", "avoids", "occurs_ending_at"]


def _search(values: Sequence[int], pattern: GeneralizedPattern,
            last: int | None = None) -> Iterator[tuple[int, ...]]:
    """Yield 0-based index tuples of occurrences, right to left.

    Letters are placed from the last one backwards so that fixing the final
    index (``last``) prunes the search to occurrences that use it.  Values
    only need to be distinct; they are compared, never looked up.
    """
    letters = pattern.letters
    adj = pattern.adjacency()
    k = len(letters)
    n = len(values)
    if n < k:
        return
    chosen = [0] * k

    def place(j: int) -> Iterator[tuple[int, ...]]:
        if j == k - 1:
            cands: Iterable[int] = (last,) if last is not None else range(k - 1, n)
        elif adj[j]:
            i = chosen[j + 1] - 1
            cands = (i,) if i >= j else ()
        else:
            cands = range(j, chosen[j + 1])
        lj = letters[j]
        for i in cands:
            v = values[i]
            for t in range(j + 1, k):
                if (v < values[chosen[t]]) != (lj < letters[t]):
                    break
            else:
                chosen[j] = i
                if j == 0:
                    yield tuple(chosen)
                else:
                    yield from place(j - 1)

    if last is not None and not (k - 1 <= last < n):
        return
    yield from place(k - 1)


def _values(pi: Permutation | Sequence[int]) -> Sequence[int]:
    return pi.values if isinstance(pi, Permutation) else pi


def occurrences(pi: Permutation | Sequence[int],
                pattern: GeneralizedPattern) -> list[tuple[int, ...]]:
    """All occurrences of ``pattern`` in ``pi`` as sorted 1-based index tuples.

    >>> from vincular.core import parse_pattern, parse_permutation
    >>> pi = parse_permutation("7256134")
    >>> (2, 3, 6) in occurrences(pi, parse_pattern("13-2"))
    True
    >>> occurrences(pi, parse_pattern("1-32"))
    []
    """
    found = sorted(_search(_values(pi), pattern))
    return [tuple(i + 1 for i in occ) for occ in found]


def contains(pi: Permutation | Sequence[int], pattern: GeneralizedPattern) -> bool:
    return next(_search(_values(pi), pattern), None) is not None


def occurs_ending_at(values: Sequence[int], pattern: GeneralizedPattern, last: int) -> bool:
    """True if some occurrence uses 0-based position ``last`` for its final letter."""
    return next(_search(values, pattern, last), None) is not None


def avoids(pi: Permutation | Sequence[int],
           patterns: Iterable[GeneralizedPattern]) -> bool:
    vals = _values(pi)
    return not any(contains(vals, p) for p in patterns)
