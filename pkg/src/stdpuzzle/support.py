"""Support symmetries (column swap, row swap, label complement), orbits and
connectivity classes."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from itertools import combinations

from .core import CODES, PIECES, Piece, Support, code_from_piece

__all__ = [
    "ColumnSign", "SupportClass", "Support", "t1", "t2", "t3", "orbit",
    "canonical", "column_signs", "is_connected", "enumerate_connected_classes",
    "count_classes", "find_witness",
]


class ColumnSign(Enum):
    UP = "^"      # bottom label < top label
    DOWN = "v"    # bottom label > top label


def _swap_columns(c):
    bl, br, tr, tl = c
    return (br, bl, tl, tr)


def _swap_rows(c):
    bl, br, tr, tl = c
    return (tl, tr, br, bl)


def _complement(c):
    return tuple(5 - a for a in c)


def _piece_map(f) -> dict[str, str]:
    return {p.code: code_from_piece(f(p.corners)) for p in PIECES}


_T1 = _piece_map(_swap_columns)
_T2 = _piece_map(_swap_rows)
_T3 = _piece_map(_complement)


def t1(s: Support) -> Support:
    """Exchange left and right columns in every piece."""
    return Support(_T1[c] for c in s.codes)


def t2(s: Support) -> Support:
    """Exchange top and bottom rows in every piece."""
    return Support(_T2[c] for c in s.codes)


def t3(s: Support) -> Support:
    """Replace every label a by 5 - a."""
    return Support(_T3[c] for c in s.codes)


def _compose(f, g):
    return {k: f[g[k]] for k in g}


def _group() -> list[dict[str, str]]:
    ident = {c: c for c in CODES}
    elems = [ident]
    for gen in (_T1, _T2, _T3):
        elems += [_compose(gen, e) for e in elems]
    return elems


# All 8 elements of the group generated by the three commuting involutions.
GROUP = _group()


@dataclass(frozen=True)
class SupportClass:
    canonical: Support
    members: frozenset[Support]

    @property
    def size(self) -> int:
        return len(self.canonical)

    @property
    def name(self) -> str:
        return self.canonical.name


def orbit(s: Support) -> SupportClass:
    members = frozenset(Support(g[c] for c in s.codes) for g in GROUP)
    return SupportClass(min(members, key=lambda m: m.name), members)


def canonical(s: Support) -> Support:
    return orbit(s).canonical


def column_signs(p: Piece) -> tuple[ColumnSign, ColumnSign]:
    bl, br, tr, tl = p.corners
    left = ColumnSign.UP if bl < tl else ColumnSign.DOWN
    right = ColumnSign.UP if br < tr else ColumnSign.DOWN
    return left, right


_UP, _DOWN = ColumnSign.UP, ColumnSign.DOWN
_SIGNS = {p.code: column_signs(p) for p in PIECES}


def is_connected(s: Support) -> bool:
    """False for the three disconnected shapes: some UP/UP pieces with some
    DOWN/DOWN pieces and nothing else, or all UP/DOWN, or all DOWN/UP.
    Singletons count as connected."""
    if len(s) == 1:
        return True
    signs = {_SIGNS[c] for c in s.codes}
    if signs == {(_UP, _UP), (_DOWN, _DOWN)}:
        return False
    if signs == {(_UP, _DOWN)} or signs == {(_DOWN, _UP)}:
        return False
    return True


# Index-level group action for fast subset enumeration.
_INDEX = {c: i for i, c in enumerate(CODES)}
_GROUP_IDX = [tuple(_INDEX[g[c]] for c in CODES) for g in GROUP]
_SIGN_IDX = [_SIGNS[c] for c in CODES]


def _is_canonical(idx: tuple[int, ...]) -> bool:
    for g in _GROUP_IDX[1:]:
        if tuple(sorted(g[i] for i in idx)) < idx:
            return False
    return True


def _connected_idx(idx: tuple[int, ...]) -> bool:
    if len(idx) == 1:
        return True
    signs = {_SIGN_IDX[i] for i in idx}
    return not (signs == {(_UP, _UP), (_DOWN, _DOWN)}
                or signs == {(_UP, _DOWN)} or signs == {(_DOWN, _UP)})


def enumerate_connected_classes(size: int, connected_only: bool = True) -> list[SupportClass]:
    """Canonical connected classes of the given cardinality, sorted by name.

    Codes are alphabetical in index order, so comparing sorted index tuples
    is comparing names.
    """
    if not 1 <= size <= 24:
        raise ValueError("size must be between 1 and 24")
    out = []
    for idx in combinations(range(24), size):
        if connected_only and not _connected_idx(idx):
            continue
        if _is_canonical(idx):
            out.append(orbit(Support(CODES[i] for i in idx)))
    return out


def count_classes(size: int, singleton_rule: str = "vacuous") -> int:
    """Number of connected classes of a size.

    ``singleton_rule="strict"`` counts a singleton as disconnected when its
    piece alone matches a disconnected shape (UP/DOWN or DOWN/UP).
    """
    n = len(enumerate_connected_classes(size))
    if size == 1 and singleton_rule == "strict":
        n -= sum(1 for c in enumerate_connected_classes(1)
                 if _SIGNS[c.canonical.name] in {(_UP, _DOWN), (_DOWN, _UP)})
    return n


def find_witness(s: Support, first: str, second: str, n_max: int = 5):
    """A puzzle over ``s`` containing both pieces, searching widths up to n_max."""
    from .count import iter_puzzles
    from .core import pieces_of

    for n in range(3 if first != second else 2, n_max + 1):
        for puzzle in iter_puzzles(s, n, bound=max(n_max, 6)):
            codes = {p.code for p in pieces_of(puzzle)}
            if first in codes and second in codes:
                return puzzle
    return None
