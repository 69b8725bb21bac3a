"""Flip maps and the flip-based bijection BGTY^n -> BJRY^n."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Iterable

from .core import Puzzle, Support, pieces_of

BGTY = frozenset("BGTY")
BJRY = frozenset("BJRY")


class FamilyError(ValueError):
    """A puzzle piece lies outside the family a map is defined on."""

    def __init__(self, code: str, position: int, family: Iterable[str]):
        self.code, self.position = code, position
        fam = "".join(sorted(family))
        super().__init__(
            f"piece {code} at position ({position},{position + 1}) is not in {fam}")


def flip(puzzle: Puzzle, positions: Iterable[int]) -> Puzzle:
    """Swap top and bottom labels in the given 1-based columns."""
    s = set(positions)
    n = puzzle.width
    if any(not 1 <= i <= n for i in s):
        raise ValueError(f"flip positions must lie in 1..{n}")
    top = tuple(b if i + 1 in s else t for i, (t, b) in enumerate(zip(puzzle.top, puzzle.bottom)))
    bottom = tuple(t if i + 1 in s else b for i, (t, b) in enumerate(zip(puzzle.top, puzzle.bottom)))
    return Puzzle(top, bottom)


def gamma_family() -> list[Support]:
    """The 16 supports {B,E} x {G,J} x {T,R} x {Y,V}."""
    return sorted(Support(c) for c in product("BE", "GJ", "TR", "YV"))


@dataclass(frozen=True)
class FlipStep:
    puzzle: Puzzle          # puzzle before the flip
    piece: str              # offending piece code
    position: int           # 1-based left column of the piece
    flipped: tuple[int, ...]


def _check_family(codes: list[str], family) -> None:
    for i, c in enumerate(codes, start=1):
        if c not in family:
            raise FamilyError(c, i, family)


def normalize_trace(alpha: Puzzle) -> tuple[Puzzle, list[FlipStep]]:
    """Map a BGTY puzzle into BJRY, returning the result and each flip step."""
    codes = [p.code for p in pieces_of(alpha)]
    _check_family(codes, BGTY)
    n = alpha.width
    gamma = alpha
    steps = []
    last = 0
    while True:
        codes = [p.code for p in pieces_of(gamma)]
        pos = next((i for i, c in enumerate(codes, start=1) if c in "GT"), None)
        if pos is None:
            break
        assert pos > last, "leftmost G/T must move right"
        assert len(steps) < n - 1
        s = tuple(range(pos + 1, n + 1))
        steps.append(FlipStep(gamma, codes[pos - 1], pos, s))
        gamma = flip(gamma, s)
        last = pos
    return gamma, steps


def normalize_bgty_to_bjry(alpha: Puzzle) -> Puzzle:
    return normalize_trace(alpha)[0]


def denormalize_bjry_to_bgty(beta: Puzzle) -> Puzzle:
    """Inverse of :func:`normalize_bgty_to_bjry`.

    Later forward flips never touch an earlier J/R piece, so the J/R pieces of
    the image mark the flip positions; undo them right to left.
    """
    codes = [p.code for p in pieces_of(beta)]
    _check_family(codes, BJRY)
    n = beta.width
    gamma = beta
    for pos in reversed([i for i, c in enumerate(codes, start=1) if c in "JR"]):
        gamma = flip(gamma, range(pos + 1, n + 1))
    return gamma


def format_trace(alpha: Puzzle) -> str:
    """Table-style trace: each puzzle with its piece codes, then the flip."""
    beta, steps = normalize_trace(alpha)
    rows = [(s.puzzle, f"{s.piece}  ({s.position},{s.position + 1})  "
             f"S={{{','.join(map(str, s.flipped))}}}") for s in steps]
    rows.append((beta, ""))
    out = []
    for puzzle, note in rows:
        width = max(len(str(v)) for v in puzzle.top + puzzle.bottom) + 1
        codes = [p.code for p in pieces_of(puzzle)]
        out.append("".join(f"{v:>{width}}" for v in puzzle.top) + ("   " + note if note else ""))
        out.append(" " * (width // 2 + 1) + "".join(f"{c:>{width}}" for c in codes))
        out.append("".join(f"{v:>{width}}" for v in puzzle.bottom))
        out.append("")
    out.append(f"steps: {len(steps)}")
    out.append(f"result: {beta}")
    return "\n".join(out)
