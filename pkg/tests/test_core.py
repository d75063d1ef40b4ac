import pytest
from hypothesis import given, strategies as st

from vincular.core import (
    ALL_LENGTH3_PATTERNS, GeneralizedPattern, Permutation, PatternSyntaxError,
    PatternValidityError, complement, parse_pattern, parse_pattern_set,
    parse_permutation, reverse, reverse_complement, symmetry_class,
)


@st.composite
def patterns(draw, max_len=7):
    k = draw(st.integers(1, max_len))
    letters = draw(st.permutations(list(range(1, k + 1))))
    cuts = draw(st.lists(st.booleans(), min_size=k - 1, max_size=k - 1))
    blocks, cur = [], [letters[0]]
    for v, cut in zip(letters[1:], cuts):
        if cut:
            blocks.append(cur)
            cur = []
        cur.append(v)
    blocks.append(cur)
    return GeneralizedPattern(tuple(map(tuple, blocks)))


def names(ps):
    return {str(p) for p in ps}


def test_parse_blocks_and_type():
    p = parse_pattern("13-2")
    assert p.blocks == ((1, 3), (2,))
    assert p.type_signature() == (2, 1)
    q = parse_pattern("123")
    assert q.blocks == ((1, 2, 3),)
    assert q.type_signature() == (3,)
    assert parse_pattern("13-26-574").type_signature() == (2, 2, 3)


def test_classical_is_all_singletons():
    assert parse_pattern("1-3-2").is_classical()
    assert not parse_pattern("13-2").is_classical()


@pytest.mark.parametrize("text", ["", "-12", "12-", "1--2", "1a-2", "0-1", "1 2"])
def test_parse_rejects_malformed(text):
    with pytest.raises(PatternSyntaxError):
        parse_pattern(text)


@pytest.mark.parametrize("text", ["13-22", "2-3", "14"])
def test_parse_rejects_non_permutations(text):
    with pytest.raises(PatternValidityError):
        parse_pattern(text)


@pytest.mark.parametrize("p, r", [("1-32", "23-1"), ("123", "321"), ("13-2", "2-31")])
def test_reverse(p, r):
    assert str(reverse(parse_pattern(p))) == r


@pytest.mark.parametrize("p, c", [("1-32", "3-12"), ("21", "12"), ("1-23", "3-21")])
def test_complement(p, c):
    assert str(complement(parse_pattern(p))) == c


def test_complement_stays_in_class():
    assert str(complement(parse_pattern("1-23"))) in {"1-23", "32-1", "3-21", "12-3"}


def test_catalan_class_closed_under_reverse():
    cls = {"2-13", "31-2", "2-31", "13-2"}
    assert {str(reverse(parse_pattern(p))) for p in cls} == cls


@pytest.mark.parametrize("p, expected", [
    ("1-23", {"1-23", "32-1", "3-21", "12-3"}),
    ("2-13", {"2-13", "31-2", "2-31", "13-2"}),
    ("12", {"12", "21"}),
])
def test_symmetry_class(p, expected):
    assert names(symmetry_class(parse_pattern(p))) == expected


def test_length3_patterns_split_into_three_classes():
    classes = {symmetry_class(p) for p in ALL_LENGTH3_PATTERNS}
    assert {frozenset(names(c)) for c in classes} == {
        frozenset({"1-23", "32-1", "3-21", "12-3"}),
        frozenset({"3-12", "21-3", "1-32", "23-1"}),
        frozenset({"2-13", "31-2", "2-31", "13-2"}),
    }


@given(patterns())
def test_reverse_and_complement_are_commuting_involutions(p):
    assert reverse(reverse(p)) == p
    assert complement(complement(p)) == p
    assert reverse(complement(p)) == complement(reverse(p)) == reverse_complement(p)


@given(patterns())
def test_render_round_trip(p):
    assert parse_pattern(str(p)) == p


def test_pattern_set_dedupes():
    ps = parse_pattern_set("1-23, 21-3,1-23")
    assert names(ps) == {"1-23", "21-3"}
    with pytest.raises(PatternSyntaxError):
        parse_pattern_set("1-23,,21-3")


def test_permutation_parsing_and_stats():
    for text in ["7 2 5 6 1 3 4", "7,2,5,6,1,3,4", "7256134"]:
        pi = parse_permutation(text)
        assert pi.values == (7, 2, 5, 6, 1, 3, 4)
    assert pi.first() == 7 and pi.last() == 4
    assert str(pi) == "7 2 5 6 1 3 4"
    assert parse_permutation("10 1 2 3 4 5 6 7 8 9").first() == 10
    assert len(parse_permutation("")) == 0


def test_permutation_validation():
    with pytest.raises(PatternValidityError):
        Permutation((1, 3))
    with pytest.raises(PatternSyntaxError):
        parse_permutation("1 x 2")
    with pytest.raises(ValueError):
        Permutation(()).first()


def test_permutation_symmetries():
    pi = Permutation((2, 3, 1))
    assert pi.reverse().values == (1, 3, 2)
    assert pi.complement().values == (2, 1, 3)
