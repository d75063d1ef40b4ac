"""CSV / JSON encoding for integer tables keyed by row n and column k.

JSON carries every count as a decimal string so that values past 2**53
survive consumers that parse numbers as doubles.
"""

from __future__ import annotations

import csv
import io
import json
from typing import Mapping, Sequence

CSV_HEADER = ("n", "k", "count")


def rows_to_csv(rows: Mapping[int, Sequence[int]]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_HEADER)
    for n in sorted(rows):
        for k, c in enumerate(rows[n], start=1):
            w.writerow((n, k, c))
    return buf.getvalue()


def rows_from_csv(text: str) -> dict[int, tuple[int, ...]]:
    reader = csv.reader(io.StringIO(text))
    header = next(reader)
    if tuple(header) != CSV_HEADER:
        raise ValueError(f"unexpected CSV header {header}")
    acc: dict[int, dict[int, int]] = {}
    for rec in reader:
        if not rec:
            continue
        n, k, c = map(int, rec)
        acc.setdefault(n, {})[k] = c
    return {n: tuple(cols.get(k, 0) for k in range(1, max(cols) + 1))
            for n, cols in acc.items()}


def encode_rows(rows: Mapping[int, Sequence[int]]) -> list[list[str]]:
    return [[str(c) for c in rows[n]] for n in sorted(rows)]


def decode_rows(data: Sequence[Sequence[int | str]], first_row: int = 1) -> dict[int, tuple[int, ...]]:
    return {first_row + i: tuple(int(c) for c in row) for i, row in enumerate(data)}


def dumps(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


def text_table(rows: Mapping[int, Sequence[int]], width: int | None = None) -> str:
    """Right-aligned plain-text table, one line per row n."""
    if not rows:
        return ""
    ncols = width if width is not None else max(len(r) for r in rows.values())
    cells = {n: [str(c) for c in rows[n]] + ["0"] * (ncols - len(rows[n])) for n in rows}
    w = max(len(c) for r in cells.values() for c in r) if ncols else 1
    nw = max(len(str(n)) for n in rows)
    lines = []
    for n in sorted(rows):
        lines.append(f"{n:>{nw}} | " + " ".join(c.rjust(w) for c in cells[n]).rstrip())
    return "\n".join(lines) + "\n"
