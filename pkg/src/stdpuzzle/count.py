"""Exact counting of P^n, the 2 x n standard puzzles whose pieces all reduce
into a support P.

The dynamic program tracks the boundary profile f_n[X, Y]: the number of
width-n puzzles whose rightmost column has top label X and bottom label Y.
Appending a column relabels the old puzzle through the order-preserving
injection of [2n-2] into [2n] minus {X, Y}; the new piece depends only on
where the old right column falls relative to X and Y, so each new cell is a
handful of rectangle sums over the previous profile.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterator

from .core import Puzzle, Support, reduce

DEFAULT_ORACLE_BOUND = 6


class OracleBoundError(ValueError):
    pass


@dataclass(frozen=True)
class BoundaryProfile:
    """Counts keyed by ``(X, Y)`` = (top label, bottom label) of the last column.

    Only nonzero cells are stored.
    """

    n: int
    counts: dict[tuple[int, int], int] = field(default_factory=dict)

    def __post_init__(self):
        top = 2 * self.n
        for (x, y), c in self.counts.items():
            if x == y or not (1 <= x <= top and 1 <= y <= top):
                raise ValueError(f"bad profile cell {(x, y)} at width {self.n}")
            if c < 0:
                raise ValueError("profile counts are nonnegative")

    @property
    def total(self) -> int:
        return sum(self.counts.values())

    def __getitem__(self, key: tuple[int, int]) -> int:
        return self.counts.get(key, 0)

    def triples(self) -> list[tuple[int, int, int]]:
        return [(x, y, c) for (x, y), c in sorted(self.counts.items())]


@dataclass(frozen=True)
class SequenceTerms:
    support: str
    n_min: int
    n_max: int
    terms: tuple[int, ...]

    def __post_init__(self):
        assert len(self.terms) == self.n_max - self.n_min + 1

    def __getitem__(self, n: int) -> int:
        if not self.n_min <= n <= self.n_max:
            raise IndexError(n)
        return self.terms[n - self.n_min]

    def items(self):
        return zip(range(self.n_min, self.n_max + 1), self.terms)


def base_profile() -> BoundaryProfile:
    """The two standard 2 x 1 columns."""
    return BoundaryProfile(1, {(1, 2): 1, (2, 1): 1})


def inverse_reduction(x: int, X: int, Y: int, n: int | None = None) -> int:
    """Order-preserving injection of [2n-2] into [2n] minus {X, Y}."""
    if X == Y:
        raise ValueError("X and Y must differ")
    if x < 1 or (n is not None and (x > 2 * n - 2 or max(X, Y) > 2 * n)):
        raise ValueError(f"label {x} out of range")
    a, b = min(X, Y), max(X, Y)
    if x <= a - 1:
        return x
    if x <= b - 2:
        return x + 1
    return x + 2


def dp_step_naive(prev: BoundaryProfile, support: Support) -> BoundaryProfile:
    """One step of the recurrence, summing over every previous cell."""
    n = prev.n + 1
    out = {}
    for X in range(1, 2 * n + 1):
        for Y in range(1, 2 * n + 1):
            if X == Y:
                continue
            total = 0
            for (x, y), c in prev.counts.items():
                quad = (inverse_reduction(y, X, Y), Y, X, inverse_reduction(x, X, Y))
                if reduce(quad).code in support.codes:
                    total += c
            if total:
                out[X, Y] = total
    return BoundaryProfile(n, out)


# Zone of an old label relative to the new right column {a < b}:
# 0 below a, 1 between, 2 above b.
_ZONE_VALUE = (10, 30, 50)


def _zone_piece(x_above_y: bool, zx: int, zy: int, x_less_y: bool) -> str:
    """Piece code formed when old top/bottom labels sit in zones zx/zy."""
    X, Y = (40, 20) if x_above_y else (20, 40)
    x = _ZONE_VALUE[zx]
    y = _ZONE_VALUE[zy]
    if zx == zy:
        x, y = (x, x + 1) if x_less_y else (x + 1, x)
    return reduce((y, Y, X, x)).code


def _cases(x_above_y: bool) -> list[tuple[int, int, bool, str]]:
    out = []
    for zx in range(3):
        for zy in range(3):
            orders = (True, False) if zx == zy else (zx < zy,)
            for lt in orders:
                out.append((zx, zy, lt, _zone_piece(x_above_y, zx, zy, lt)))
    return out


_CASES = {True: _cases(True), False: _cases(False)}


class Transitions:
    """Admissible zone cases for one support, split by which of X, Y is larger."""

    def __init__(self, support: Support):
        self.support = support
        self.cases = {
            above: [(zx, zy, lt) for zx, zy, lt, code in _CASES[above]
                    if code in support.codes]
            for above in (True, False)
        }


def _prefix(grid: list[list[int]], m: int) -> list[list[int]]:
    pre = [[0] * (m + 1) for _ in range(m + 1)]
    for i in range(1, m + 1):
        row, prow, acc = pre[i], pre[i - 1], 0
        g = grid[i]
        for j in range(1, m + 1):
            acc += g[j]
            row[j] = prow[j] + acc
    return pre


def _rect(pre, x1, x2, y1, y2) -> int:
    if x1 > x2 or y1 > y2:
        return 0
    return pre[x2][y2] - pre[x1 - 1][y2] - pre[x2][y1 - 1] + pre[x1 - 1][y1 - 1]


def dp_step(prev: BoundaryProfile, support: Support | Transitions) -> BoundaryProfile:
    """Extend a width n-1 profile to width n."""
    trans = support if isinstance(support, Transitions) else Transitions(support)
    m = 2 * prev.n
    upper = [[0] * (m + 1) for _ in range(m + 1)]   # cells with x < y
    lower = [[0] * (m + 1) for _ in range(m + 1)]   # cells with x > y
    for (x, y), c in prev.counts.items():
        (upper if x < y else lower)[x][y] = c
    pu, pl = _prefix(upper, m), _prefix(lower, m)
    n = prev.n + 1
    out = {}
    for X in range(1, 2 * n + 1):
        for Y in range(1, 2 * n + 1):
            if X == Y:
                continue
            a, b = min(X, Y), max(X, Y)
            zones = ((1, a - 1), (a, b - 2), (b - 1, m))
            total = 0
            for zx, zy, lt in trans.cases[X > Y]:
                x1, x2 = zones[zx]
                y1, y2 = zones[zy]
                total += _rect(pu if lt else pl, x1, x2, y1, y2)
            if total:
                out[X, Y] = total
    return BoundaryProfile(n, out)


def profiles(support: Support, n_max: int) -> Iterator[BoundaryProfile]:
    """Profiles for widths 1, 2, ..., n_max."""
    trans = Transitions(support)
    prof = base_profile()
    yield prof
    for _ in range(n_max - 1):
        prof = dp_step(prof, trans)
        yield prof


def profile(support: Support, n: int) -> BoundaryProfile:
    if n < 1:
        raise ValueError("width must be at least 1")
    for prof in profiles(support, n):
        pass
    return prof


def dp_count(support: Support, n: int) -> int:
    if n < 2:
        raise ValueError("counts are defined for n >= 2")
    return profile(support, n).total


def sequence(support: Support, n_min: int = 2, n_max: int = 12) -> SequenceTerms:
    if not 2 <= n_min <= n_max:
        raise ValueError("need 2 <= n_min <= n_max")
    terms = tuple(p.total for p in profiles(support, n_max))[n_min - 1:]
    return SequenceTerms(support.name, n_min, n_max, terms)


def exact_support_count(support: Support, n: int) -> int:
    """Puzzles whose minimal support is exactly ``support`` (inclusion-exclusion)."""
    if n < 2:
        raise ValueError("counts are defined for n >= 2")
    if len(support) > 16:
        raise ValueError("support too large for subset inclusion-exclusion")
    codes = support.name
    total = 0
    for k in range(1, len(codes) + 1):
        sign = (-1) ** (len(codes) - k)
        for sub in combinations(codes, k):
            total += sign * dp_count(Support(sub), n)
    return total


# --- brute-force oracle -----------------------------------------------------

def iter_puzzles(support: Support, n: int, bound: int = DEFAULT_ORACLE_BOUND) -> Iterator[Puzzle]:
    """Every puzzle of P^n, by column-wise backtracking over label pairs.

    Each window is checked as soon as its right column is placed.
    """
    if n < 1:
        raise ValueError("width must be at least 1")
    if n > bound:
        raise OracleBoundError(f"width {n} exceeds oracle bound {bound}")
    codes = support.codes
    labels = range(1, 2 * n + 1)
    top = [0] * n
    bottom = [0] * n
    used = [False] * (2 * n + 1)

    def place(col):
        if col == n:
            yield Puzzle(tuple(top), tuple(bottom))
            return
        for t in labels:
            if used[t]:
                continue
            used[t] = True
            for b in labels:
                if used[b]:
                    continue
                if col and reduce((bottom[col - 1], b, t, top[col - 1])).code not in codes:
                    continue
                used[b] = True
                top[col], bottom[col] = t, b
                yield from place(col + 1)
                used[b] = False
            used[t] = False

    yield from place(0)


def brute_force_count(support: Support, n: int, bound: int = DEFAULT_ORACLE_BOUND) -> int:
    if n < 2:
        raise ValueError("counts are defined for n >= 2")
    return sum(1 for _ in iter_puzzles(support, n, bound))


def brute_force_profile(support: Support, n: int, bound: int = DEFAULT_ORACLE_BOUND) -> BoundaryProfile:
    counts: dict[tuple[int, int], int] = {}
    for p in iter_puzzles(support, n, bound):
        key = p.rightmost()
        counts[key] = counts.get(key, 0) + 1
    return BoundaryProfile(n, counts)
