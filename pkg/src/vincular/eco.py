"""
Succession rules, generating-tree expansion and ECO matrices.

Trees are never built node by node: each level is a histogram mapping a
label to the number of tree nodes carrying it.  Level-dependent rules get
the level passed to ``produce``; the label itself only stores the number
of active sites (and a colour for coloured rules).

>>> m = eco_matrix(builtin_rule("OMEGA_BELL"), 4)
>>> m.row(4), shift_diagonal(m).row(4)
((5, 3, 2, 5), (5, 5, 3, 2))
"""

from __future__ import annotations

import enum
import json
from collections import Counter
from dataclasses import dataclass
from typing import Callable, Mapping

from .core import GeneralizedPattern, parse_pattern, pattern_set
from .oracle import RefinedDistribution, Statistic
from . import tables

__all__ = [
    "Color", "Label", "SuccessionRule", "MatrixKind", "CountMatrix",
    "RULE_NAMES", "builtin_rule", "expand", "eco_matrix", "shift_diagonal",
    "statistic_table", "rule_for",
]


class Color(enum.Enum):
    PLAIN = "plain"
    BARRED = "barred"


@dataclass(frozen=True)
class Label:
    value: int
    color: Color = Color.PLAIN

    def __post_init__(self):
        if self.value < 1:
            raise ValueError("label values are positive")

    @property
    def barred(self) -> bool:
        return self.color is Color.BARRED

    def __str__(self) -> str:
        return f"({self.value}{'~' if self.barred else ''})"


def plain(k: int) -> Label:
    return Label(k)


def bar(k: int) -> Label:
    return Label(k, Color.BARRED)


Production = Callable[[Label, int], Mapping[Label, int]]


@dataclass(frozen=True)
class SuccessionRule:
    """Axiom at level 1 plus a production map ``(label, level) -> multiset``.

    ``column`` and ``width`` fix how a level histogram is laid out as a
    matrix row: label -> 1-based column, level -> number of columns.
    """
    name: str
    axiom: Label
    produce: Production
    column: Callable[[Label], int] = lambda lab: lab.value
    width: Callable[[int], int] | None = None


def _omega_bell(label: Label, n: int) -> Counter:
    out = Counter(plain(j) for j in range(2, label.value + 1))
    out[plain(n + 2)] += 1
    return out


def _catalan(label: Label, n: int) -> Counter:
    return Counter(plain(j) for j in range(2, label.value + 2))


def _pair_involution(label: Label, n: int) -> Counter:
    if label.value == 1:
        return Counter({plain(n + 2): 1})
    if label.value == n + 1:
        return Counter({plain(1): n, plain(n + 2): 1})
    raise ValueError(f"label {label} is unreachable at level {n}")


def _phi_motzkin(label: Label, n: int) -> Counter:
    k = label.value
    out = Counter(plain(j) for j in range(2, k + 1))
    if label.barred:
        out[bar(2)] += 1
    else:
        out[bar(k + 1)] += 1
    return out


_RULES = {
    "OMEGA_BELL": SuccessionRule(
        "OMEGA_BELL", plain(2), _omega_bell,
        column=lambda lab: lab.value - 1, width=lambda n: n),
    "CATALAN": SuccessionRule(
        "CATALAN", plain(2), _catalan,
        column=lambda lab: lab.value - 1, width=lambda n: n),
    "PAIR_INVOLUTION": SuccessionRule(
        "PAIR_INVOLUTION", plain(2), _pair_involution,
        column=lambda lab: lab.value, width=lambda n: n + 1),
    "PHI_MOTZKIN": SuccessionRule(
        "PHI_MOTZKIN", bar(2), _phi_motzkin,
        column=lambda lab: 1 if lab.barred else lab.value, width=lambda n: n // 2 + 1),
}

RULE_NAMES = tuple(_RULES)


def builtin_rule(name: str) -> SuccessionRule:
    try:
        return _RULES[name.upper()]
    except KeyError:
        raise ValueError(f"unknown rule {name!r}; expected one of {', '.join(RULE_NAMES)}") from None


def expand(rule: SuccessionRule, depth: int) -> dict[int, Counter]:
    """Label histograms for levels 1..depth.

    >>> [sum(h.values()) for h in expand(builtin_rule("PHI_MOTZKIN"), 4).values()]
    [1, 2, 4, 9]
    """
    if depth < 1:
        raise ValueError("depth must be at least 1")
    levels = {1: Counter({rule.axiom: 1})}
    for n in range(1, depth):
        nxt: Counter = Counter()
        for label, count in levels[n].items():
            for child, mult in rule.produce(label, n).items():
                nxt[child] += count * mult
        levels[n + 1] = nxt
    return levels


class MatrixKind(enum.Enum):
    LABEL_HISTOGRAM = "label_histogram"
    STATISTIC_TABLE = "statistic_table"


@dataclass(frozen=True)
class CountMatrix:
    """Exact integer matrix with 1-based rows and columns; missing cells are 0."""
    rows: dict[int, tuple[int, ...]]
    kind: MatrixKind = MatrixKind.LABEL_HISTOGRAM
    rule: str = "custom"

    @property
    def depth(self) -> int:
        return max(self.rows, default=0)

    def row(self, n: int) -> tuple[int, ...]:
        return self.rows[n]

    def __getitem__(self, nk: tuple[int, int]) -> int:
        n, k = nk
        row = self.rows.get(n, ())
        return row[k - 1] if 1 <= k <= len(row) else 0

    def column(self, k: int) -> list[int]:
        return [self[n, k] for n in range(1, self.depth + 1)]

    def to_csv(self) -> str:
        return tables.rows_to_csv(self.rows)

    def to_json(self) -> str:
        return tables.dumps({"kind": self.kind.value, "rule": self.rule,
                             "rows": tables.encode_rows(self.rows)})

    @classmethod
    def from_json(cls, text: str) -> CountMatrix:
        data = json.loads(text)
        return cls(tables.decode_rows(data["rows"]), MatrixKind(data["kind"]), data["rule"])


def eco_matrix(rule: SuccessionRule, depth: int) -> CountMatrix:
    rows = {}
    for n, hist in expand(rule, depth).items():
        cols: Counter = Counter()
        for label, count in hist.items():
            cols[rule.column(label)] += count
        width = rule.width(n) if rule.width else max(cols, default=0)
        if cols and (min(cols) < 1 or max(cols) > width):
            raise ValueError(f"rule {rule.name}: label outside columns 1..{width} at level {n}")
        rows[n] = tuple(cols[j] for j in range(1, width + 1))
    return CountMatrix(rows, MatrixKind.LABEL_HISTOGRAM, rule.name)


def shift_diagonal(m: CountMatrix) -> CountMatrix:
    """Move the diagonal to the first column: a(n,1) = m(n,n), a(n,j) = m(n,j-1)."""
    if m.kind is not MatrixKind.LABEL_HISTOGRAM:
        raise ValueError("shift_diagonal expects a label histogram")
    rows = {}
    for n, row in m.rows.items():
        if len(row) != n:
            raise ValueError(f"row {n} has {len(row)} columns; need a square lower-triangular layout")
        rows[n] = (row[n - 1],) + row[:n - 1]
    return CountMatrix(rows, MatrixKind.STATISTIC_TABLE, m.rule)


# pattern -> (rule, shift diagonal first?, statistic, flip k -> n+1-k?)
_P = parse_pattern
_TABLE_SPECS: dict[frozenset, tuple[str, bool, Statistic, bool]] = {
    frozenset([_P("1-23")]): ("OMEGA_BELL", True, Statistic.LAST, False),
    frozenset([_P("32-1")]): ("OMEGA_BELL", True, Statistic.FIRST, False),
    frozenset([_P("3-21")]): ("OMEGA_BELL", True, Statistic.LAST, True),
    frozenset([_P("12-3")]): ("OMEGA_BELL", True, Statistic.FIRST, True),
    frozenset([_P("3-12")]): ("OMEGA_BELL", False, Statistic.LAST, False),
    frozenset([_P("21-3")]): ("OMEGA_BELL", False, Statistic.FIRST, False),
    frozenset([_P("1-32")]): ("OMEGA_BELL", False, Statistic.LAST, True),
    frozenset([_P("23-1")]): ("OMEGA_BELL", False, Statistic.FIRST, True),
    frozenset([_P("2-13")]): ("CATALAN", False, Statistic.LAST, False),
    frozenset([_P("31-2")]): ("CATALAN", False, Statistic.FIRST, False),
    frozenset([_P("2-31")]): ("CATALAN", False, Statistic.LAST, True),
    frozenset([_P("13-2")]): ("CATALAN", False, Statistic.FIRST, True),
    pattern_set(["1-23", "1-32"]): ("PAIR_INVOLUTION", False, Statistic.LAST, False),
    pattern_set(["1-23", "21-3"]): ("PHI_MOTZKIN", False, Statistic.LAST, False),
}


def _key(patterns) -> frozenset[GeneralizedPattern]:
    if isinstance(patterns, (str, GeneralizedPattern)):
        patterns = [patterns]
    return pattern_set(patterns)


def rule_for(patterns) -> str:
    try:
        return _TABLE_SPECS[_key(patterns)][0]
    except KeyError:
        raise ValueError(f"no succession rule registered for {sorted(map(str, _key(patterns)))}") from None


def statistic_table(patterns, depth: int, rule_name: str | None = None) -> RefinedDistribution:
    """Refined distribution of ``patterns`` read off the generating tree.

    >>> statistic_table("3-21", 6)[6, 6]
    52
    """
    key = _key(patterns)
    try:
        name, shifted, stat, flip = _TABLE_SPECS[key]
    except KeyError:
        raise ValueError(f"no succession rule registered for {sorted(map(str, key))}") from None
    if rule_name is not None and rule_name.upper() != name:
        raise ValueError(f"{sorted(map(str, key))} is generated by {name}, not {rule_name}")
    m = eco_matrix(builtin_rule(name), depth)
    if shifted:
        m = shift_diagonal(m)
    rows = {}
    for n in range(1, depth + 1):
        if name == "PAIR_INVOLUTION":
            # label n+1 <-> ends in 1; label 1 <-> ends elsewhere, n-1 values equally often
            rest = m[n, 1] // (n - 1) if n > 1 else 0
            rows[n] = (m[n, n + 1],) + (rest,) * (n - 1)
        else:
            row = tuple(m[n, k] for k in range(1, n + 1))
            rows[n] = row[::-1] if flip else row
    return RefinedDistribution(stat, rows, key)
