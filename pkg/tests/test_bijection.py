import random

import pytest
from hypothesis import given, strategies as st

from stdpuzzle.bijection import (FamilyError, denormalize_bjry_to_bgty, flip, gamma_family,
                                 normalize_bgty_to_bjry, normalize_trace)
from stdpuzzle.core import Puzzle, Support, minimal_support, pieces_of, reduce
from stdpuzzle.count import dp_count, iter_puzzles

ALPHA = Puzzle((11, 13, 10, 6, 12, 8, 14), (7, 9, 2, 1, 4, 3, 5))
# rows of the worked bijection table
TABLE_ROWS = [
    ((11, 13, 10, 6, 12, 8, 14), (7, 9, 2, 1, 4, 3, 5), "BGGBGB", "G", 2, (3, 4, 5, 6, 7)),
    ((11, 13, 2, 1, 4, 3, 5), (7, 9, 10, 6, 12, 8, 14), "BJYTYT", "T", 4, (5, 6, 7)),
    ((11, 13, 2, 1, 12, 8, 14), (7, 9, 10, 6, 4, 3, 5), "BJYRGB", "G", 5, (6, 7)),
    ((11, 13, 2, 1, 12, 3, 5), (7, 9, 10, 6, 4, 8, 14), "BJYRJT", "T", 6, (7,)),
]
BETA = Puzzle((11, 13, 2, 1, 12, 3, 14), (7, 9, 10, 6, 4, 8, 5))


def codes(p):
    return "".join(x.code for x in pieces_of(p))


@st.composite
def puzzles(draw, max_width=8):
    n = draw(st.integers(1, max_width))
    labels = draw(st.permutations(list(range(1, 2 * n + 1))))
    return Puzzle(tuple(labels[:n]), tuple(labels[n:]))


def test_table_trace():
    beta, steps = normalize_trace(ALPHA)
    assert beta == BETA
    assert codes(BETA) == "BJYRJR"
    assert len(steps) == len(TABLE_ROWS)
    for step, (top, bottom, pcs, piece, pos, s) in zip(steps, TABLE_ROWS):
        assert step.puzzle == Puzzle(top, bottom)
        assert codes(step.puzzle) == pcs
        assert (step.piece, step.position, step.flipped) == (piece, pos, s)


def test_flip_examples():
    assert flip(ALPHA, []) == ALPHA
    assert flip(ALPHA, range(3, 8)) == Puzzle(*TABLE_ROWS[1][:2])
    with pytest.raises(ValueError):
        flip(ALPHA, [8])
    with pytest.raises(ValueError):
        flip(ALPHA, [0])


@given(puzzles(), st.data())
def test_flip_involution(p, data):
    s = data.draw(st.sets(st.integers(1, p.width)))
    q = flip(p, s)
    assert flip(q, s) == p
    assert sorted(q.top + q.bottom) == sorted(p.top + p.bottom)


def _piece_puzzle(code):
    from stdpuzzle.core import piece_from_code
    bl, br, tr, tl = piece_from_code(code).corners
    return Puzzle((tl, tr), (bl, br))


def test_flip_piece_diagram():
    both = {c: codes(flip(_piece_puzzle(c), {1, 2})) for c in "BGTYEJRV"}
    assert [both[c] for c in "BGTY"] == list("TYBG")
    assert [both[c] for c in "EJRV"] == list("RVEJ")
    right = [codes(flip(_piece_puzzle(c), {2})) for c in "BGTY"]
    assert right == list("EJRV")


def test_stable_disjoint_families():
    assert set("BGTY").isdisjoint("EJRV")


def test_gamma_family():
    fam = gamma_family()
    names = [s.name for s in fam]
    assert len(fam) == 16 and names == sorted(names)
    for s in ("BGTY", "BJTV", "EJRV", "BGRV", "EGTY", "BJRV", "BJRY"):
        assert s in names


def test_already_normalized():
    # puzzles using only B and Y are in both families and need no flips
    for n in (2, 3, 4):
        for p in iter_puzzles(Support("BY"), n):
            assert normalize_bgty_to_bjry(p) == p
            assert normalize_trace(p)[1] == []


def test_family_error():
    with pytest.raises(FamilyError) as err:
        normalize_bgty_to_bjry(Puzzle((3, 4, 6), (1, 2, 5)))
    assert err.value.position >= 1


@pytest.mark.parametrize("n", [2, 3, 4, 5, 6])
def test_bijection_exhaustive(n):
    domain = list(iter_puzzles(Support("BGTY"), n))
    image = {normalize_bgty_to_bjry(p) for p in domain}
    assert len(image) == len(domain) == dp_count(Support("BJRY"), n)
    for beta in image:
        assert minimal_support(beta).issubset(Support("BJRY"))
    assert image == set(iter_puzzles(Support("BJRY"), n))


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_inverse(n):
    for p in iter_puzzles(Support("BGTY"), n):
        assert denormalize_bjry_to_bgty(normalize_bgty_to_bjry(p)) == p


@pytest.mark.parametrize("n", range(2, 9))
def test_bgty_doubles_bg(n):
    assert dp_count(Support("BGTY"), n) == 2 * dp_count(Support("BG"), n)


@pytest.mark.parametrize("n", range(2, 8))
def test_gamma_equinumerous(n):
    assert len({dp_count(s, n) for s in gamma_family()}) == 1
