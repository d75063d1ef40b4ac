"""
Three-way consistency suites: brute force vs succession rules vs closed forms.

Each suite returns a list of ``Check`` records; nothing here raises on a
mismatch, so callers can report every failure at once.
"""

from __future__ import annotations

import dataclasses
from dataclasses import dataclass
from typing import Callable

from . import eco, formulas
from .core import BELL_PATTERNS, CATALAN_PATTERNS, pattern_set
from .oracle import avoiders, count_avoiders, refined_distribution
from .series import TruncatedSeries

__all__ = [
    "Check", "PRINTED_MATRICES", "SUITES", "run_suite",
    "bell_matrix_violations", "involution_matrix_violations",
    "motzkin_eq1_violations", "motzkin_eq2_violations", "motzkin_support_violations",
    "recurrence_residual",
]


@dataclass(frozen=True)
class Check:
    name: str
    ok: bool
    detail: str = ""


# Rows exactly as printed for the five matrices.
PRINTED_MATRICES: dict[str, tuple[str, bool, list[list[int]]]] = {
    "bell_M": ("OMEGA_BELL", False, [
        [1], [1, 1], [2, 1, 2], [5, 3, 2, 5], [15, 10, 7, 5, 15], [52, 37, 27, 20, 15, 52]]),
    "bell_A": ("OMEGA_BELL", True, [
        [1], [1, 1], [2, 2, 1], [5, 5, 3, 2], [15, 15, 10, 7, 5], [52, 52, 37, 27, 20, 15]]),
    "catalan_triangle": ("CATALAN", False, [
        [1], [1, 1], [2, 2, 1], [5, 5, 3, 1], [14, 14, 9, 4, 1], [42, 42, 28, 14, 5, 1]]),
    "involution_M": ("PAIR_INVOLUTION", False, [
        [0, 1], [1, 0, 1], [2, 0, 0, 2], [6, 0, 0, 0, 4], [16, 0, 0, 0, 0, 10],
        [50, 0, 0, 0, 0, 0, 26], [156, 0, 0, 0, 0, 0, 0, 76]]),
    "motzkin_A": ("PHI_MOTZKIN", False, [
        [1, 0, 0, 0, 0, 0], [1, 1, 0, 0, 0, 0], [2, 2, 0, 0, 0, 0], [4, 4, 1, 0, 0, 0],
        [9, 9, 3, 0, 0, 0], [21, 21, 8, 1, 0, 0], [51, 51, 21, 4, 0, 0],
        [127, 127, 55, 13, 1, 0], [323, 323, 145, 39, 5, 0], [835, 835, 385, 113, 19, 1]]),
}


def printed_matrix_checks() -> list[Check]:
    out = []
    for label, (rule, shifted, rows) in PRINTED_MATRICES.items():
        m = eco.eco_matrix(eco.builtin_rule(rule), len(rows))
        if shifted:
            m = eco.shift_diagonal(m)
        for n, printed in enumerate(rows, start=1):
            got = [m[n, k] for k in range(1, len(printed) + 1)]
            extra = [v for v in m.row(n)[len(printed):] if v]
            out.append(Check(f"{label} row {n}", got == printed and not extra,
                             f"engine {list(m.row(n))} printed {printed}"))
    return out


def bell_matrix_violations(depth: int) -> list[str]:
    m = eco.eco_matrix(eco.builtin_rule("OMEGA_BELL"), depth)
    bad = []
    if m[1, 1] != 1:
        bad.append("m(1,1) != 1")
    for n in range(2, depth + 1):
        if any(m[n, k] for k in range(n + 1, n + 3)):
            bad.append(f"row {n} nonzero past the diagonal")
        for k in range(1, n):
            if m[n, k] != sum(m[n - 1, i] for i in range(k, n)):
                bad.append(f"m({n},{k}) is not the tail sum of row {n - 1}")
        if m[n, n] != m[n, 1]:
            bad.append(f"m({n},{n}) != m({n},1)")
        if m[n, 1] != formulas.bell(n - 1):
            bad.append(f"m({n},1) != B_{n - 1}")
    return bad


def involution_matrix_violations(depth: int) -> list[str]:
    m = eco.eco_matrix(eco.builtin_rule("PAIR_INVOLUTION"), depth)
    bad = []
    if (m[1, 1], m[1, 2]) != (0, 1):
        bad.append("first row is not (0, 1)")
    for n in range(1, depth + 1):
        if n >= 2:
            if m[n, 1] != (n - 1) * m[n - 1, n]:
                bad.append(f"m({n},1) != (n-1) m({n - 1},{n})")
            if m[n, n + 1] != m[n - 1, 1] + m[n - 1, n]:
                bad.append(f"m({n},{n + 1}) != m({n - 1},1) + m({n - 1},{n})")
        if m[n, n + 1] != formulas.involutions(n - 1):
            bad.append(f"super-diagonal m({n},{n + 1}) != I_{n - 1}")
        if any(m[n, j] for j in range(2, n + 1)):
            bad.append(f"row {n} has entries off column 1 and the super-diagonal")
    return bad


def _motzkin_padded(depth: int) -> Callable[[int, int], int]:
    """Motzkin-pair table with a row 0 for the empty permutation.

    The row-0 entry a(0,1) = 1 is the boundary both recurrences need at
    rows 1 and 2; every printed row is left as the engine produced it.
    """
    m = eco.eco_matrix(eco.builtin_rule("PHI_MOTZKIN"), depth)

    def a(i: int, j: int) -> int:
        if i == 0:
            return 1 if j == 1 else 0
        return m[i, j] if i > 0 and j >= 1 else 0
    return a


def motzkin_eq1_violations(depth: int) -> list[str]:
    a = _motzkin_padded(depth)
    w = depth // 2 + 3
    bad = []
    for i in range(1, depth + 1):
        if a(i, 1) != sum(a(i - 1, r) for r in range(1, w + 1)):
            bad.append(f"a({i},1) != row {i - 1} sum")
        for j in range(2, w + 1):
            rhs = sum(a(i - 1, k) for k in range(j, w + 1)) + sum(a(i - 2, k) for k in range(j - 1, w + 1))
            if a(i, j) != rhs:
                bad.append(f"a({i},{j}) = {a(i, j)} but the two-level sum is {rhs}")
    return bad


def motzkin_eq2_violations(depth: int) -> list[str]:
    """Difference recurrence, stated for columns numbered from 0 (so j >= 3 here)."""
    a = _motzkin_padded(depth)
    bad = []
    for i in range(1, depth + 1):
        for j in range(3, depth // 2 + 4):
            rhs = a(i, j - 1) - a(i - 1, j - 1) - a(i - 2, j - 2)
            if a(i, j) != rhs:
                bad.append(f"a({i},{j}) = {a(i, j)} but the difference recurrence gives {rhs}")
    return bad


def motzkin_support_violations(depth: int) -> list[str]:
    unbounded = dataclasses.replace(eco.builtin_rule("PHI_MOTZKIN"), width=None)
    m = eco.eco_matrix(unbounded, depth)
    return [f"a({i},{j}) = {m[i, j]} beyond column {i // 2 + 1}"
            for i in range(1, depth + 1)
            for j in range(i // 2 + 2, len(m.row(i)) + 1) if m[i, j]]


def recurrence_residual(k: int, order: int) -> TruncatedSeries:
    """C_{k+2} - (1 - x) C_{k+1} + x^2 C_k."""
    c = [formulas.column_gf(j, order) for j in (k, k + 1, k + 2)]
    one_minus_x = TruncatedSeries.from_coeffs([1, -1], order)
    return c[2] - one_minus_x * c[1] + c[0].shift(2)


# --- suites -----------------------------------------------------------------

def suite_wilf(n_max: int = 8, jobs: int | None = 1) -> list[Check]:
    out = []
    for pats, seq, name in ((BELL_PATTERNS, formulas.bell, "Bell"),
                            (CATALAN_PATTERNS, formulas.catalan, "Catalan")):
        for p in pats:
            counts = [count_avoiders(n, [p], jobs=jobs) for n in range(1, n_max + 1)]
            expected = [seq(n) for n in range(1, n_max + 1)]
            out.append(Check(f"|S_n({p})| = {name}(n), n <= {n_max}", counts == expected,
                             f"{counts} vs {expected}"))
    return out


def suite_refined(n_max: int = 8, jobs: int | None = 1) -> list[Check]:
    out = []
    for key in formulas.supported_cases():
        stat = formulas.closed_form_statistic(key)
        brute = refined_distribution(n_max, key, stat, jobs=jobs)
        closed = formulas.closed_form_distribution(key, n_max)
        names = ",".join(sorted(map(str, key)))
        bad = [n for n in brute.rows if brute.rows[n] != closed.rows[n]]
        out.append(Check(f"closed form = brute force for {{{names}}} by {stat.value}, n <= {n_max}",
                         not bad, f"rows differing: {bad}" if bad else ""))
    return out


def suite_eco(n_max: int = 8, jobs: int | None = 1) -> list[Check]:
    out = printed_matrix_checks()
    for key in formulas.supported_cases():
        table = eco.statistic_table(key, n_max)
        brute = refined_distribution(n_max, key, table.statistic, jobs=jobs)
        names = ",".join(sorted(map(str, key)))
        bad = [n for n in brute.rows if brute.rows[n] != table.rows[n]]
        out.append(Check(f"generating tree = brute force for {{{names}}}, n <= {n_max}",
                         not bad, f"rows differing: {bad}" if bad else ""))
    bad = bell_matrix_violations(25)
    out.append(Check("Bell ECO matrix recursive properties, depth 25", not bad, "; ".join(bad[:3])))
    return out


def suite_pairs(n_max: int = 8, jobs: int | None = 1, depth: int = 30) -> list[Check]:
    inv = [count_avoiders(n, formulas.INVOLUTION_PAIR, jobs=jobs) for n in range(n_max + 1)]
    mot = [count_avoiders(n, formulas.MOTZKIN_PAIR, jobs=jobs) for n in range(n_max + 1)]
    triple = pattern_set(["1-23", "21-3", "12-3"])
    same = all(list(avoiders(n, formulas.MOTZKIN_PAIR)) == list(avoiders(n, triple))
               for n in range(n_max + 1))
    out = [
        Check(f"|S_n(1-23,1-32)| = I_n, n <= {n_max}",
              inv == [formulas.involutions(n) for n in range(n_max + 1)], str(inv)),
        Check(f"|S_n(1-23,21-3)| = M_n, n <= {n_max}",
              mot == [formulas.motzkin(n) for n in range(n_max + 1)], str(mot)),
        Check(f"S_n(1-23,21-3) = S_n(1-23,21-3,12-3), n <= {n_max}", same),
    ]
    for name, fn, d in (("involution matrix recurrences", involution_matrix_violations, 25),
                        ("Motzkin matrix two-level sums", motzkin_eq1_violations, depth),
                        ("Motzkin matrix difference recurrence", motzkin_eq2_violations, depth),
                        ("Motzkin matrix support bound", motzkin_support_violations, depth)):
        bad = fn(d)
        out.append(Check(f"{name}, depth {d}", not bad, "; ".join(bad[:3])))
    return out


def suite_gf(order: int = 14, rec_order: int = 20) -> list[Check]:
    m = eco.eco_matrix(eco.builtin_rule("PHI_MOTZKIN"), order + 1)
    out = []
    for k in range(7):
        coeffs = formulas.column_gf(k, order).to_list()
        column = [m[n + 1, k + 1] for n in range(order + 1)]
        out.append(Check(f"C_{k} = column {k + 1} of the Motzkin-pair matrix to x^{order}",
                         coeffs == column, f"{coeffs} vs {column}"))
    for k in range(1, 9):
        res = recurrence_residual(k, rec_order)
        out.append(Check(f"C_{k + 2} = (1-x)C_{k + 1} - x^2 C_{k} to x^{rec_order}",
                         not any(res.coeffs), str(res.to_list())))
    res0 = recurrence_residual(0, rec_order)
    out.append(Check("at k = 0 the recurrence is off by exactly -x (missing row-0 boundary term)",
                     res0.to_list() == [0, -1] + [0] * (rec_order - 1), str(res0.to_list())))
    c0 = formulas.column_gf(0, rec_order).to_list()
    out.append(Check(f"C_0 = Motzkin numbers to x^{rec_order}",
                     c0 == [formulas.motzkin(n) for n in range(rec_order + 1)]))
    return out


SUITES: dict[str, Callable[..., list[Check]]] = {
    "wilf": suite_wilf,
    "refined": suite_refined,
    "eco": suite_eco,
    "pairs": suite_pairs,
    "gf": suite_gf,
}


def run_suite(name: str, n_max: int = 8, jobs: int | None = 1) -> list[Check]:
    if name == "gf":
        return SUITES[name]()
    return SUITES[name](n_max=n_max, jobs=jobs)
