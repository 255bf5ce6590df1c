from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from powerfree.errors import DomainError
from powerfree.repetitions import (
    CUBE,
    OVERLAP,
    ExponentThreshold,
    Mode,
    Occurrence,
    SquareSet,
    conjugates,
    count_occurrences,
    distinct_square_factors,
    factor_complexity,
    find_cube,
    find_overlap,
    find_square,
    is_cubefree,
    is_overlap_free,
    is_powerfree,
    is_square,
    is_squarefree,
    max_exponent,
    squares_of_length,
)
from powerfree.words import Word, relabel, tm_prefix

SEVEN_THIRDS = ExponentThreshold(7, 3, Mode.GE)


def word_strategy(max_size=80):
    return st.integers(2, 5).flatmap(
        lambda k: st.lists(st.integers(0, k - 1), max_size=max_size).map(lambda s: Word(bytes(s), k))
    )


# -- examples --------------------------------------------------------------


@pytest.mark.parametrize("w,expected", [("0101", True), ("", False), ("0110", False), ("00", True), ("0", False)])
def test_is_square(w, expected):
    assert is_square(w) is expected


def test_find_cube_examples():
    assert find_cube("000") == Occurrence(0, 1, 3)
    assert find_cube(tm_prefix(64)) is None
    assert find_cube("1001001") is None
    assert find_cube("010101") == Occurrence(0, 2, 6)


def test_find_cube_leftmost_then_shortest():
    # Cubes of period 1 and 2 both start at position 1; the shorter wins.
    assert find_cube("1000000") == Occurrence(1, 1, 3)
    assert find_cube("10101010000") == Occurrence(0, 2, 6)
    assert find_cube("011011011000") == Occurrence(0, 3, 9)


@pytest.mark.parametrize("w,expected", [("010010", True), ("010101", False), ("10011011001001101100", True)])
def test_is_cubefree(w, expected):
    assert is_cubefree(w) is expected
    assert is_cubefree(w, oracle=True) is expected


def test_overlap_examples():
    assert not is_overlap_free("01010")
    assert find_overlap("01010") == Occurrence(0, 2, 5)
    assert is_overlap_free(tm_prefix(128))
    assert is_overlap_free("0011")
    assert not is_overlap_free("000")


def test_powerfree_examples():
    assert not is_powerfree("0010010", SEVEN_THIRDS)
    assert is_powerfree("0010010", ExponentThreshold(7, 3, Mode.GT))
    assert is_powerfree("00", ExponentThreshold(2, 1, Mode.GT))
    assert is_powerfree("010010", SEVEN_THIRDS)


def test_threshold_validation_and_parsing():
    assert ExponentThreshold.parse("7/3", "gt") == ExponentThreshold(7, 3, Mode.GT)
    assert ExponentThreshold.parse("3").value == 3
    for bad in ("1", "2/3", "x", "3/0"):
        with pytest.raises(DomainError):
            ExponentThreshold.parse(bad)
    assert SEVEN_THIRDS.forbids(Fraction(7, 3))
    assert not ExponentThreshold(7, 3, Mode.GT).forbids(Fraction(7, 3))


def test_max_exponent_examples():
    e, occ = max_exponent("01")
    assert e == 1
    assert max_exponent("00100") == (Fraction(2), Occurrence(0, 1, 2))
    assert max_exponent("01010") == (Fraction(5, 2), Occurrence(0, 2, 5))
    assert max_exponent("001001") == (Fraction(2), Occurrence(0, 1, 2))
    with pytest.raises(DomainError):
        max_exponent("")


def test_distinct_square_factors_examples():
    assert distinct_square_factors("0101").strings() == ["0101"]
    assert distinct_square_factors("").strings() == []
    assert distinct_square_factors("00100").strings() == ["00"]
    assert distinct_square_factors("000000", max_len=4).strings() == ["00", "0000"]


def test_squares_of_length():
    w = Word("0011001100")
    assert squares_of_length(w, 8).strings() == ["00110011", "01100110", "11001100"]
    assert squares_of_length(w, 7).strings() == []


def test_count_occurrences():
    assert count_occurrences("01010", "0101010") == 2
    assert count_occurrences("00100", "10011011001001101100") == 1
    assert count_occurrences("11011", "10011011001001101100") == 2
    with pytest.raises(DomainError):
        count_occurrences("", "0101")


def test_factor_complexity():
    assert factor_complexity("0110", 1) == 2
    assert factor_complexity("0110", 2) == 3
    assert factor_complexity("0110", 0) == 1
    assert factor_complexity("", 0) == 1
    assert factor_complexity("0110", 5) == 0


def test_conjugates():
    assert {str(c) for c in conjugates("00")} == {"00"}
    assert {str(c) for c in conjugates("0110")} == {"0110", "1100", "1001", "0011"}
    assert len(conjugates("010010")) == 3
    with pytest.raises(DomainError):
        conjugates("")


def test_square_set_rejects_non_squares():
    with pytest.raises(DomainError):
        SquareSet(["0110"])
    assert SquareSet(["00", "00", "0101"]).strings() == ["00", "0101"]


def test_occurrence_exponent_and_factor():
    occ = Occurrence(1, 3, 7)
    assert occ.exponent == Fraction(7, 3)
    assert occ.factor(Word("10010010")) == Word("0010010")
    assert str(occ) == "pos=1, period=3, len=7"


def test_witness_finders():
    assert find_square("0120") is None
    assert find_square("01201") is None
    assert find_square("012012") == Occurrence(0, 3, 6)
    assert find_square("01221", oracle=True) == Occurrence(2, 1, 2)


# -- properties ------------------------------------------------------------


def test_thue_morse_overlap_free_long():
    assert is_overlap_free(tm_prefix(1 << 14))


@settings(max_examples=200, deadline=None)
@given(word_strategy())
def test_cube_and_overlap_thresholds_agree(w):
    assert is_powerfree(w, CUBE) == is_cubefree(w) == is_cubefree(w, oracle=True)
    assert is_powerfree(w, OVERLAP) == is_overlap_free(w) == is_overlap_free(w, oracle=True)
    assert is_squarefree(w) == is_squarefree(w, oracle=True)


@settings(max_examples=200, deadline=None)
@given(word_strategy(), st.permutations(range(5)))
def test_relabel_preserves_repetition_structure(w, perm):
    mapping = {a: perm[a] for a in range(5)}
    v = relabel(w, mapping, alphabet_size=5)
    assert find_cube(v) == find_cube(w)
    assert find_overlap(v) == find_overlap(w)
    if len(w):
        assert max_exponent(v) == max_exponent(w)
    assert len(distinct_square_factors(v)) == len(distinct_square_factors(w))
    for i in range(0, len(w), 5):
        assert relabel(w[i:i + 6], mapping, 5) == v[i:i + 6]
        assert is_square(w[i:i + 6]) == is_square(v[i:i + 6])


@settings(max_examples=200, deadline=None)
@given(word_strategy(120))
def test_distinct_squares_at_most_twice_length(w):
    assert len(distinct_square_factors(w)) <= 2 * len(w)


@settings(max_examples=200, deadline=None)
@given(word_strategy(), st.integers(0, 12))
def test_max_len_filter(w, cap):
    full = distinct_square_factors(w)
    assert distinct_square_factors(w, max_len=cap) == {s for s in full if len(s) <= cap}
