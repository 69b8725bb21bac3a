"""Pieces, puzzles, reduction and minimal supports.

A piece is stored by its four corner labels in the fixed order
``(bottom_left, bottom_right, top_right, top_left)``.  A 2 x n puzzle is two
rows of labels; consecutive column pairs form its ``n - 1`` pieces.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations
from typing import Iterable, Iterator, NamedTuple, Sequence

# Letters I and O are not used; the 24 codes follow the lexicographic order of
# the corner permutations.
CODES = "ABCDEFGHJKLMNPQRSTUVWXYZ"


class UnknownCodeError(ValueError):
    pass


class DuplicateLabelError(ValueError):
    pass


class NotStandardError(ValueError):
    pass


class Piece(NamedTuple):
    code: str
    corners: tuple[int, int, int, int]

    @property
    def bottom_left(self) -> int:
        return self.corners[0]

    @property
    def bottom_right(self) -> int:
        return self.corners[1]

    @property
    def top_right(self) -> int:
        return self.corners[2]

    @property
    def top_left(self) -> int:
        return self.corners[3]

    def __str__(self):
        return self.code

    def matrix(self) -> str:
        """Two-line picture, top row first."""
        bl, br, tr, tl = self.corners
        return f"{tl}{tr}\n{bl}{br}"


PIECES: tuple[Piece, ...] = tuple(
    Piece(code, perm) for code, perm in zip(CODES, permutations((1, 2, 3, 4)))
)
_BY_CODE = {p.code: p for p in PIECES}
_BY_CORNERS = {p.corners: p for p in PIECES}


def piece_from_code(letter: str) -> Piece:
    try:
        return _BY_CODE[letter]
    except (KeyError, TypeError):
        raise UnknownCodeError(f"unknown piece code {letter!r}") from None


def code_from_piece(piece: Piece | Sequence[int]) -> str:
    corners = piece.corners if isinstance(piece, Piece) else tuple(piece)
    try:
        return _BY_CORNERS[corners].code
    except KeyError:
        raise ValueError(f"{corners!r} is not a standard piece") from None


def reduce(quad: Sequence[int]) -> Piece:
    """Replace four distinct labels by 1..4 keeping their relative order."""
    if len(quad) != 4:
        raise ValueError("a piece has exactly four corners")
    if len(set(quad)) != 4:
        raise DuplicateLabelError(f"corner labels must be distinct: {tuple(quad)}")
    ranks = tuple(sum(w < v for w in quad) + 1 for v in quad)
    return _BY_CORNERS[ranks]


def is_standard(top: Sequence[int], bottom: Sequence[int]) -> bool:
    if len(top) != len(bottom):
        raise ValueError("rows must have equal length")
    labels = sorted(list(top) + list(bottom))
    return labels == list(range(1, len(labels) + 1))


@dataclass(frozen=True)
class Puzzle:
    """A standard 2 x n puzzle given by its two label rows."""

    top: tuple[int, ...]
    bottom: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "top", tuple(self.top))
        object.__setattr__(self, "bottom", tuple(self.bottom))
        if not self.top:
            raise NotStandardError("a puzzle has at least one column")
        if not is_standard(self.top, self.bottom):
            raise NotStandardError(
                f"labels of {self} are not exactly 1..{2 * len(self.top)}")

    @property
    def width(self) -> int:
        return len(self.top)

    @classmethod
    def parse(cls, literal: str) -> "Puzzle":
        """Parse ``"5,7,8,4/1,2,3,6"`` (top row, then bottom row)."""
        try:
            top, bottom = literal.strip().split("/")
            return cls(tuple(int(t) for t in top.split(",")),
                       tuple(int(t) for t in bottom.split(",")))
        except ValueError as exc:
            if isinstance(exc, NotStandardError):
                raise
            raise ValueError(f"bad puzzle literal {literal!r}") from None

    def __str__(self):
        return ",".join(map(str, self.top)) + "/" + ",".join(map(str, self.bottom))

    def window(self, i: int) -> tuple[int, int, int, int]:
        """Corner quad of the piece spanning columns ``i`` and ``i + 1`` (0-based)."""
        return (self.bottom[i], self.bottom[i + 1], self.top[i + 1], self.top[i])

    def rightmost(self) -> tuple[int, int]:
        return self.top[-1], self.bottom[-1]


def pieces_of(puzzle: Puzzle) -> list[Piece]:
    return [reduce(puzzle.window(i)) for i in range(puzzle.width - 1)]


class Support:
    """A nonempty set of piece codes, named by its sorted letters."""

    __slots__ = ("codes", "name")

    def __init__(self, codes: Iterable[str | Piece]):
        letters = [c.code if isinstance(c, Piece) else c for c in codes]
        for c in letters:
            piece_from_code(c)
        if not letters:
            raise ValueError("a support is nonempty")
        if len(set(letters)) != len(letters):
            raise ValueError(f"repeated piece in support {''.join(letters)!r}")
        self.codes = frozenset(letters)
        self.name = "".join(sorted(self.codes))

    @classmethod
    def parse(cls, literal: str) -> "Support":
        return cls(literal.strip())

    @property
    def pieces(self) -> tuple[Piece, ...]:
        return tuple(_BY_CODE[c] for c in self.name)

    def __iter__(self) -> Iterator[str]:
        return iter(self.name)

    def __len__(self):
        return len(self.codes)

    def __contains__(self, item) -> bool:
        if isinstance(item, Piece):
            item = item.code
        return item in self.codes

    def __eq__(self, other):
        return isinstance(other, Support) and self.codes == other.codes

    def __hash__(self):
        return hash(self.codes)

    def __lt__(self, other: "Support"):
        return self.name < other.name

    def issubset(self, other: "Support") -> bool:
        return self.codes <= other.codes

    def __repr__(self):
        return f"Support({self.name!r})"

    def __str__(self):
        return self.name


def minimal_support(puzzle: Puzzle) -> Support:
    pieces = pieces_of(puzzle)
    if not pieces:
        raise ValueError("a width-1 puzzle has no pieces")
    return Support({p.code for p in pieces})
