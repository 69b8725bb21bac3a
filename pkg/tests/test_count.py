import random
from itertools import combinations

import pytest
from hypothesis import given, settings, strategies as st

from stdpuzzle.core import CODES, Puzzle, Support, minimal_support
from stdpuzzle.count import (BoundaryProfile, OracleBoundError, base_profile,
                             brute_force_count, brute_force_profile, dp_count, dp_step,
                             dp_step_naive, exact_support_count, inverse_reduction,
                             iter_puzzles, profile, profiles, sequence)
from stdpuzzle.support import t1, t2, t3

S = Support.parse


def test_inverse_reduction_examples():
    assert inverse_reduction(1, 3, 6) == 1
    assert inverse_reduction(3, 3, 6) == 4
    assert inverse_reduction(5, 3, 6) == 7
    with pytest.raises(ValueError):
        inverse_reduction(1, 2, 2)
    with pytest.raises(ValueError):
        inverse_reduction(5, 1, 2, n=3)


@pytest.mark.parametrize("n", range(2, 7))
def test_inverse_reduction_is_the_order_injection(n):
    for X in range(1, 2 * n + 1):
        for Y in range(1, 2 * n + 1):
            if X == Y:
                continue
            rest = [v for v in range(1, 2 * n + 1) if v not in (X, Y)]
            assert [inverse_reduction(x, X, Y, n) for x in range(1, 2 * n - 1)] == rest


def test_dp_step_from_base():
    prof = dp_step(base_profile(), S("BC"))
    assert prof.counts == {(4, 2): 1, (2, 3): 1}


def test_dp_step_dead_end():
    # only one C puzzle of width 2, and it cannot be extended
    prof = dp_step(dp_step(base_profile(), S("C")), S("C"))
    assert prof.counts == {} and prof.total == 0


@pytest.mark.parametrize("n", range(2, 10))
def test_single_piece_a(n):
    prof = profile(S("A"), n)
    assert list(prof.counts.values()) == [1]


supports = st.sets(st.sampled_from(CODES), min_size=1, max_size=8).map(Support)


@settings(max_examples=60, deadline=None)
@given(supports, st.integers(2, 5))
def test_fast_step_matches_naive(s, n):
    fast = naive = base_profile()
    for _ in range(n - 1):
        fast = dp_step(fast, s)
        naive = dp_step_naive(naive, s)
    assert fast == naive


def test_worked_examples():
    assert [dp_count(S("BC"), n) for n in (2, 3, 4)] == [2, 5, 14]
    assert [dp_count(S("CK"), n) for n in (2, 3, 4)] == [2, 4, 8]
    assert dp_count(S("BCEG"), 5) == 4960
    assert brute_force_count(S("BC"), 3) == 5
    assert brute_force_count(S("CK"), 3) == 4
    assert brute_force_count(S("BJTV"), 2) == 4


def test_sequences():
    assert sequence(S("CK"), 2, 12).terms == (2, 4, 8, 26, 66, 276, 816, 4050, 13410, 75780, 274680)
    ab = sequence(S("AB"), 2, 11)
    assert ab.terms[:4] == (2, 8, 48, 384) and ab[11] == 3715891200
    assert set(sequence(S("A"), 2, 12).terms) == {1}
    with pytest.raises(ValueError):
        sequence(S("A"), 1, 3)


def test_profile_sum_identity():
    for s in ("BC", "CK", "BJTV", "ABCD", "CEHJLPRVX"):
        for prof in profiles(S(s), 8):
            if prof.n >= 2:
                assert prof.total == sum(prof.counts.values()) == dp_count(S(s), prof.n)


def test_profile_invariants():
    with pytest.raises(ValueError):
        BoundaryProfile(2, {(1, 1): 1})
    with pytest.raises(ValueError):
        BoundaryProfile(2, {(1, 5): 1})


@pytest.mark.parametrize("s", ["BC", "CK", "BJTV", "AEL", "BCEG", "ACX"])
@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_profile_matches_oracle(s, n):
    assert profile(S(s), n) == brute_force_profile(S(s), n)


def test_oracle_bound():
    with pytest.raises(OracleBoundError):
        brute_force_count(S("B"), 7)
    assert brute_force_count(S("B"), 7, bound=7) == 132


def test_oracle_puzzles_are_members():
    for p in iter_puzzles(S("BJTV"), 4):
        assert minimal_support(p).issubset(S("BJTV"))


def _exact_by_enumeration(s, n):
    return sum(1 for p in iter_puzzles(s, n) if minimal_support(p) == s)


@pytest.mark.parametrize("s", ["BC", "B", "BJTV", "ACX", "CK"])
@pytest.mark.parametrize("n", [2, 3, 4])
def test_exact_support_count(s, n):
    assert exact_support_count(S(s), n) == _exact_by_enumeration(S(s), n)


def test_exact_support_examples():
    assert exact_support_count(S("BC"), 2) == 0
    assert exact_support_count(S("B"), 3) == 2
    assert exact_support_count(S("BC"), 4) == dp_count(S("BC"), 4) - dp_count(S("B"), 4) - dp_count(S("C"), 4)


@settings(max_examples=40, deadline=None)
@given(supports, st.integers(2, 6))
def test_transform_invariance(s, n):
    c = dp_count(s, n)
    assert dp_count(t1(s), n) == dp_count(t2(s), n) == dp_count(t3(s), n) == c


@settings(max_examples=40, deadline=None)
@given(supports, st.sampled_from(CODES), st.integers(2, 6))
def test_monotone_in_support(s, extra, n):
    bigger = Support(s.codes | {extra})
    assert dp_count(s, n) <= dp_count(bigger, n)


def test_large_counts_are_exact():
    # grows past 64-bit range
    v = dp_count(S("AH"), 14)
    assert v > 2 ** 64 and isinstance(v, int)
