from itertools import permutations

import pytest

from vincular.core import (
    ALL_LENGTH3_PATTERNS, BELL_PATTERNS, CATALAN_PATTERNS, complement,
    parse_pattern, pattern_set, reverse,
)
from vincular.oracle import (
    RefinedDistribution, ResourceCapError, Statistic, avoiders,
    count_avoiders, refined_distribution,
)

from conftest import naive_avoiders

LAST, FIRST = Statistic.LAST, Statistic.FIRST


def ps(*names):
    return pattern_set(names)


def test_frozen_small_counts_against_naive_enumeration():
    # frozen from naive_avoiders: 5 for 1-23 at n=3, 132 for 2-13 at n=6
    assert len(naive_avoiders(3, ps("1-23"))) == 5
    assert len(naive_avoiders(6, ps("2-13"))) == 132
    assert count_avoiders(3, ps("1-23")) == 5
    assert count_avoiders(6, ps("2-13")) == 132


def test_catalan_row_sum_matches_printed_triangle():
    assert count_avoiders(6, ps("2-13")) == 42 + 42 + 28 + 14 + 5 + 1


def test_empty_permutation():
    assert count_avoiders(0, ps("1-23")) == 1
    assert list(avoiders(0, ps("1-23"))) == [()]


@pytest.mark.parametrize("p", ALL_LENGTH3_PATTERNS, ids=str)
def test_avoiders_equal_naive_filter(p):
    for n in range(7):
        assert list(avoiders(n, [p])) == naive_avoiders(n, [p])


def test_avoiders_lexicographic():
    got = list(avoiders(5, ps("1-23", "2-31")))
    assert got == sorted(got)


def test_refined_rows():
    d = refined_distribution(6, ps("1-23"), LAST)
    assert d.row(3) == (2, 2, 1)
    assert d.row(6) == (52, 52, 37, 27, 20, 15)
    assert refined_distribution(6, ps("1-23", "21-3"), LAST).row(6) == (21, 21, 8, 1, 0, 0)


def test_row_sums_and_support():
    d = refined_distribution(7, ps("3-12"), FIRST)
    for n in range(1, 8):
        assert len(d.row(n)) == n
        assert d.total(n) == count_avoiders(n, ps("3-12"))
        assert d[n, n + 1] == 0


def test_resource_cap():
    with pytest.raises(ResourceCapError):
        count_avoiders(12, ps("1-23"))
    with pytest.raises(ResourceCapError):
        refined_distribution(5, ps("1-23"), LAST, max_n=4)
    with pytest.raises(ValueError):
        count_avoiders(-1, ps("1-23"))


def test_parallel_matches_serial():
    pats = ps("2-13")
    serial = refined_distribution(8, pats, LAST, jobs=1)
    parallel = refined_distribution(8, pats, LAST, jobs=4)
    assert serial == parallel


@pytest.mark.parametrize("p", BELL_PATTERNS + CATALAN_PATTERNS, ids=str)
def test_wilf_classes_small(p):
    from vincular.formulas import bell, catalan
    seq = bell if p in BELL_PATTERNS else catalan
    assert [count_avoiders(n, [p]) for n in range(8)] == [seq(n) for n in range(8)]


@pytest.mark.parametrize("p", ALL_LENGTH3_PATTERNS, ids=str)
def test_distribution_symmetry_transport(p):
    n_max = 8
    by_last = refined_distribution(n_max, [p], LAST)
    rev_first = refined_distribution(n_max, [reverse(p)], FIRST)
    comp_last = refined_distribution(n_max, [complement(p)], LAST)
    for n in range(1, n_max + 1):
        assert by_last.row(n) == rev_first.row(n)
        assert by_last.row(n) == comp_last.row(n)[::-1]


def test_pair_identity_as_sets():
    for n in range(8):
        assert list(avoiders(n, ps("1-23", "21-3"))) == list(avoiders(n, ps("1-23", "21-3", "12-3")))


def test_pair_counts_small():
    from vincular.formulas import involutions, motzkin
    assert [count_avoiders(n, ps("1-23", "1-32")) for n in range(8)] == [involutions(n) for n in range(8)]
    assert [count_avoiders(n, ps("1-23", "21-3")) for n in range(8)] == [motzkin(n) for n in range(8)]


def test_serialization_round_trip():
    d = refined_distribution(5, ps("2-13"), FIRST)
    assert RefinedDistribution.from_json(d.to_json()) == d
    lines = d.to_csv().splitlines()
    assert lines[0] == "n,k,count"
    assert "5,1,14" in lines


def test_classical_pattern_supported():
    # 123-avoiders (classical) are counted by Catalan numbers
    assert count_avoiders(6, [parse_pattern("1-2-3")]) == 132
    brute = sum(1 for p in permutations(range(1, 7))
                if not any(p[a] < p[b] < p[c] for a in range(6) for b in range(a + 1, 6) for c in range(b + 1, 6)))
    assert brute == 132
