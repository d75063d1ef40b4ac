"""
Permutations and generalized (dashed) patterns.

A generalized pattern is written as blocks of digits separated by dashes,
e.g. ``13-2``.  Letters inside one block must be matched by entries that
sit next to each other in the permutation; a dash allows any gap.

>>> p = parse_pattern("1-32")
>>> str(reverse(p)), str(complement(p))
('23-1', '3-12')
>>> sorted(str(q) for q in symmetry_class(parse_pattern("1-23")))
['1-23', '12-3', '3-21', '32-1']
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Sequence

__all__ = [
    "PatternError", "PatternSyntaxError", "PatternValidityError",
    "Permutation", "GeneralizedPattern", "PatternSet",
    "parse_pattern", "parse_pattern_set", "parse_permutation", "pattern_set",
    "reverse", "complement", "reverse_complement", "symmetry_class",
    "ALL_LENGTH3_PATTERNS", "BELL_PATTERNS", "CATALAN_PATTERNS",
]


class PatternError(ValueError):
    """Base class for malformed patterns and permutations."""


class PatternSyntaxError(PatternError):
    pass


class PatternValidityError(PatternError):
    pass


def _check_bijection(values: Sequence[int], what: str) -> None:
    if sorted(values) != list(range(1, len(values) + 1)):
        raise PatternValidityError(
            f"{what} {list(values)} is not a permutation of 1..{len(values)}")


@dataclass(frozen=True)
class Permutation:
    """One-line notation, values 1..n."""
    values: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "values", tuple(int(v) for v in self.values))
        _check_bijection(self.values, "permutation")

    def __len__(self) -> int:
        return len(self.values)

    def __iter__(self):
        return iter(self.values)

    def __getitem__(self, i):
        return self.values[i]

    def __str__(self) -> str:
        return " ".join(map(str, self.values))

    def first(self) -> int:
        if not self.values:
            raise ValueError("empty permutation has no first entry")
        return self.values[0]

    def last(self) -> int:
        if not self.values:
            raise ValueError("empty permutation has no last entry")
        return self.values[-1]

    def reverse(self) -> Permutation:
        return Permutation(self.values[::-1])

    def complement(self) -> Permutation:
        n = len(self.values)
        return Permutation(tuple(n + 1 - v for v in self.values))


@dataclass(frozen=True)
class GeneralizedPattern:
    blocks: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        blocks = tuple(tuple(int(v) for v in b) for b in self.blocks)
        if not blocks or any(len(b) == 0 for b in blocks):
            raise PatternSyntaxError("pattern needs nonempty blocks")
        object.__setattr__(self, "blocks", blocks)
        _check_bijection(self.letters, "pattern")

    @property
    def letters(self) -> tuple[int, ...]:
        return tuple(v for b in self.blocks for v in b)

    def __len__(self) -> int:
        return sum(len(b) for b in self.blocks)

    def type_signature(self) -> tuple[int, ...]:
        return tuple(len(b) for b in self.blocks)

    def is_classical(self) -> bool:
        return all(len(b) == 1 for b in self.blocks)

    def adjacency(self) -> tuple[bool, ...]:
        """``adjacency()[j]`` is True when letters j and j+1 share a block."""
        out = []
        for b in self.blocks:
            out.extend([True] * (len(b) - 1))
            out.append(False)
        return tuple(out[:-1])

    def __str__(self) -> str:
        return "-".join("".join(map(str, b)) for b in self.blocks)

    def __repr__(self) -> str:
        return f"GeneralizedPattern({str(self)!r})"


PatternSet = frozenset  # frozenset[GeneralizedPattern]

_PATTERN_RE = re.compile(r"[1-9]+(-[1-9]+)*")


def parse_pattern(text: str) -> GeneralizedPattern:
    """Parse ``"13-2"`` style notation; letters are single digits 1-9."""
    text = text.strip()
    if not _PATTERN_RE.fullmatch(text):
        raise PatternSyntaxError(f"malformed pattern {text!r}")
    return GeneralizedPattern(tuple(tuple(int(c) for c in part)
                                    for part in text.split("-")))


def pattern_set(patterns: Iterable[GeneralizedPattern | str]) -> frozenset[GeneralizedPattern]:
    return frozenset(parse_pattern(p) if isinstance(p, str) else p for p in patterns)


def parse_pattern_set(text: str) -> frozenset[GeneralizedPattern]:
    """Comma-separated patterns, e.g. ``"1-23,21-3"``."""
    parts = [t for t in (s.strip() for s in text.split(","))]
    if not parts or any(not t for t in parts):
        raise PatternSyntaxError(f"malformed pattern list {text!r}")
    return pattern_set(parts)


def parse_permutation(text: str) -> Permutation:
    """Accepts ``"7 2 5 6 1 3 4"``, ``"7,2,5,..."`` or, for n <= 9, ``"7256134"``."""
    text = text.strip()
    if not text:
        return Permutation(())
    if re.fullmatch(r"[1-9]+", text):
        tokens = list(text)
    else:
        tokens = [t for t in re.split(r"[\s,]+", text) if t]
    try:
        return Permutation(tuple(int(t) for t in tokens))
    except ValueError as exc:
        if isinstance(exc, PatternError):
            raise
        raise PatternSyntaxError(f"malformed permutation {text!r}") from None


def reverse(p: GeneralizedPattern) -> GeneralizedPattern:
    # reversing the letter-and-dash string
    return GeneralizedPattern(tuple(b[::-1] for b in p.blocks[::-1]))


def complement(p: GeneralizedPattern) -> GeneralizedPattern:
    k = len(p)
    return GeneralizedPattern(tuple(tuple(k + 1 - v for v in b) for b in p.blocks))


def reverse_complement(p: GeneralizedPattern) -> GeneralizedPattern:
    return reverse(complement(p))


def symmetry_class(p: GeneralizedPattern) -> frozenset[GeneralizedPattern]:
    rc = reverse(complement(p))
    assert rc == complement(reverse(p))
    return frozenset({p, reverse(p), complement(p), rc})


ALL_LENGTH3_PATTERNS = tuple(parse_pattern(s) for s in (
    "1-23", "12-3", "1-32", "13-2", "3-12", "31-2",
    "2-13", "21-3", "2-31", "23-1", "3-21", "32-1"))

BELL_PATTERNS = tuple(parse_pattern(s) for s in (
    "1-23", "32-1", "3-21", "12-3", "3-12", "21-3", "1-32", "23-1"))

CATALAN_PATTERNS = tuple(parse_pattern(s) for s in ("2-13", "31-2", "2-31", "13-2"))
