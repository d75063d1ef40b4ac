"""Exhaustive enumeration of pattern-avoiding permutations.

Permutations are grown left to right in lexicographic order.  Avoidance is
closed under taking prefixes (an occurrence inside a prefix stays an
occurrence in every extension), so a branch is cut as soon as the newest
entry completes an occurrence, and only occurrences ending at that entry
need to be looked for.
"""

from __future__ import annotations

import enum
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterable, Iterator

from .core import GeneralizedPattern, pattern_set
from .matcher import occurs_ending_at
from . import tables

__all__ = [
    "DEFAULT_MAX_N", "ResourceCapError", "Statistic", "RefinedDistribution",
    "avoiders", "count_avoiders", "refined_distribution",
]

DEFAULT_MAX_N = 11


class ResourceCapError(ValueError):
    pass


class Statistic(enum.Enum):
    FIRST = "first"
    LAST = "last"

    def of(self, values) -> int:
        return values[0] if self is Statistic.FIRST else values[-1]


@dataclass(frozen=True)
class RefinedDistribution:
    """``rows[n][k-1]`` = number of avoiders of length n whose statistic is k."""
    statistic: Statistic
    rows: dict[int, tuple[int, ...]]
    patterns: frozenset[GeneralizedPattern] = field(default_factory=frozenset)

    def row(self, n: int) -> tuple[int, ...]:
        return self.rows[n]

    def __getitem__(self, nk: tuple[int, int]) -> int:
        n, k = nk
        row = self.rows[n]
        return row[k - 1] if 1 <= k <= len(row) else 0

    def total(self, n: int) -> int:
        return sum(self.rows[n])

    def to_csv(self) -> str:
        return tables.rows_to_csv(self.rows)

    def to_json(self) -> str:
        return tables.dumps({
            "kind": "refined_distribution",
            "statistic": self.statistic.value,
            "patterns": sorted(str(p) for p in self.patterns),
            "first_row": min(self.rows, default=1),
            "rows": tables.encode_rows(self.rows),
        })

    @classmethod
    def from_json(cls, text: str) -> RefinedDistribution:
        import json
        data = json.loads(text)
        return cls(Statistic(data["statistic"]),
                   tables.decode_rows(data["rows"], data.get("first_row", 1)),
                   pattern_set(data["patterns"]))


def _check_cap(n: int, max_n: int) -> None:
    if n < 0:
        raise ValueError("length must be nonnegative")
    if n > max_n:
        raise ResourceCapError(
            f"n={n} exceeds the brute-force cap of {max_n}; raise the cap explicitly")


def _walk(n: int, pats: tuple[GeneralizedPattern, ...], prefix: list[int],
          used: list[bool]) -> Iterator[tuple[int, ...]]:
    m = len(prefix)
    if m == n:
        yield tuple(prefix)
        return
    for v in range(1, n + 1):
        if used[v]:
            continue
        prefix.append(v)
        if not any(occurs_ending_at(prefix, p, m) for p in pats):
            used[v] = True
            yield from _walk(n, pats, prefix, used)
            used[v] = False
        prefix.pop()


def _branch(n: int, pats: tuple[GeneralizedPattern, ...], first: int | None) -> Iterator[tuple[int, ...]]:
    if n == 0:
        yield ()
        return
    used = [False] * (n + 1)
    if first is None:
        yield from _walk(n, pats, [], used)
        return
    used[first] = True
    prefix = [first]
    if not any(occurs_ending_at(prefix, p, 0) for p in pats):
        yield from _walk(n, pats, prefix, used)


def avoiders(n: int, patterns: Iterable[GeneralizedPattern], *,
             max_n: int = DEFAULT_MAX_N) -> Iterator[tuple[int, ...]]:
    """Yield S_n(patterns) in lexicographic order."""
    _check_cap(n, max_n)
    yield from _branch(n, tuple(patterns), None)


def _last_histogram(n: int, pats: tuple[GeneralizedPattern, ...], first: int) -> list[int]:
    hist = [0] * (n + 1)
    for perm in _branch(n, pats, first):
        hist[perm[-1]] += 1
    return hist


def _histograms(n: int, pats: tuple[GeneralizedPattern, ...], jobs: int) -> list[list[int]]:
    """Per first entry v (index v-1), the histogram of last entries."""
    firsts = range(1, n + 1)
    if jobs > 1 and n >= 7:
        with ProcessPoolExecutor(max_workers=min(jobs, n)) as ex:
            return list(ex.map(_last_histogram, [n] * n, [pats] * n, firsts))
    return [_last_histogram(n, pats, v) for v in firsts]


def _resolve_jobs(jobs: int | None) -> int:
    if jobs is None or jobs <= 0:
        return os.cpu_count() or 1
    return jobs


def count_avoiders(n: int, patterns: Iterable[GeneralizedPattern], *,
                   max_n: int = DEFAULT_MAX_N, jobs: int | None = 1) -> int:
    """|S_n(patterns)| by exhaustive generation.

    >>> from vincular.core import pattern_set
    >>> count_avoiders(3, pattern_set(["1-23"]))
    5
    """
    _check_cap(n, max_n)
    if n == 0:
        return 1
    pats = tuple(patterns)
    return sum(sum(h) for h in _histograms(n, pats, _resolve_jobs(jobs)))


def refined_distribution(n_max: int, patterns: Iterable[GeneralizedPattern],
                         statistic: Statistic, *, max_n: int = DEFAULT_MAX_N,
                         jobs: int | None = 1) -> RefinedDistribution:
    _check_cap(n_max, max_n)
    pats = tuple(patterns)
    jobs = _resolve_jobs(jobs)
    rows = {}
    for n in range(1, n_max + 1):
        hists = _histograms(n, pats, jobs)
        if statistic is Statistic.FIRST:
            rows[n] = tuple(sum(h) for h in hists)
        else:
            rows[n] = tuple(sum(h[k] for h in hists) for k in range(1, n + 1))
    return RefinedDistribution(statistic, rows, frozenset(pats))
