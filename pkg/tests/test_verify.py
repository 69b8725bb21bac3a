from fractions import Fraction

import pytest

from stdpuzzle.core import Support
from stdpuzzle.count import profile
from stdpuzzle.numbers import secant
from stdpuzzle.verify import (decimal3, q_weight, run_suite, secant_law, secant_ratio_table,
                              secant_weighted_sum, verify_bceg_conjecture, verify_catalan,
                              verify_named_supports, verify_secant_identity, verify_tangent)


def test_q_weight():
    assert q_weight(2, 1, 3) == 10
    assert q_weight(2, 4, 2) == 0
    assert q_weight(3, 1, 2) == 6
    with pytest.raises(ValueError):
        q_weight(2, 2, 2)


@pytest.mark.parametrize("n", [2, 3, 4])
def test_q_weight_pair_sum(n):
    from math import comb
    for X in range(1, 2 * n + 1):
        for Y in range(1, 2 * n + 1):
            if X != Y:
                lo, hi = min(X, Y), max(X, Y)
                assert q_weight(n, X, Y) + q_weight(n, Y, X) == sum(comb(2 * n, k) for k in range(lo, hi))


def test_secant_hand_case():
    # the four single-piece BJTV puzzles
    assert profile(Support("BJTV"), 2).counts == {(4, 2): 1, (1, 3): 1, (2, 4): 1, (3, 1): 1}
    assert secant_weighted_sum(2) == 20 == 4 * secant(2)


def test_secant_law():
    rep = verify_secant_identity(7)
    assert rep.passed
    assert rep.law == 1
    assert "differs" in rep.note
    for n, w, e, r in secant_law(7):
        assert r == Fraction(2 ** n)


def test_catalan_suite():
    rep = verify_catalan(12)
    assert rep.passed and rep.verdict == "pass"
    assert ("BC", 4, 14, 14) in rep.rows and ("BD", 2, 2, 2) in rep.rows


def test_tangent_suite():
    rep = verify_tangent(6)
    assert rep.passed
    assert ("BJTV", 3, 24, 24) in rep.rows
    assert ("EJRV", 4, 272, 272) in rep.rows


def test_bceg():
    rep = verify_bceg_conjecture(9)
    assert rep.verdict == "conjecture-consistent"
    assert ("BCEG", 9, 14756156928, 14756156928) in rep.rows


def test_named():
    rep = verify_named_supports(12)
    assert rep.passed
    acx = [a for l, n, e, a in rep.rows if l == "ACX"]
    assert acx[:7] == [3, 5, 8, 13, 21, 34, 55]
    assert [a for l, n, e, a in rep.rows if l == "CDW"][:6] == [3, 6, 18, 66, 258, 1026]
    assert [a for l, n, e, a in rep.rows if l == "ABCD"][:4] == [4, 20, 140, 1260]


def test_failure_is_reported():
    rep = verify_catalan(3)
    rep.add("X", 2, 1, 2)
    assert not rep.passed and rep.verdict == "fail"
    assert "MISMATCH" in rep.format()


def test_ratio_table():
    rows = secant_ratio_table(8)
    assert [t for _, t, _ in rows] == [9, 111, 2505, 91961, 4913789, 364074545, 35418898477]
    assert [q for _, _, q in rows] == ["1.800", "1.820", "1.809", "1.820", "1.818", "1.826", "1.827"]


def test_decimal3():
    assert decimal3(Fraction(9, 5)) == "1.800"
    assert decimal3(Fraction(1, 3)) == "0.333"
    assert decimal3(Fraction(2, 3)) == "0.667"


def test_run_suite():
    assert len(run_suite("all", 5)) == 5
    with pytest.raises(ValueError):
        run_suite("nope", 5)
