"""Offline OEIS lookup against a stripped dump.

The stripped dump has one sequence per line::

    A000108 ,1,1,2,5,14,42,132,429,

Lines starting with ``#`` and blank lines are ignored.
"""

from __future__ import annotations

import gzip
import logging
import re
from dataclasses import dataclass, field
from math import gcd
from pathlib import Path
from typing import Sequence

log = logging.getLogger(__name__)

_LINE = re.compile(r"^(A\d{6})\s*,((?:-?\d+,)+)\s*$")
_KEY = 3   # index window length


class OeisLoadError(OSError):
    pass


@dataclass
class OeisTable:
    entries: dict[str, tuple[int, ...]]
    malformed: int = 0
    _index: dict[tuple[int, ...], list[tuple[str, int]]] = field(default_factory=dict, repr=False)

    def __post_init__(self):
        for anum, terms in self.entries.items():
            for i in range(len(terms) - _KEY + 1):
                self._index.setdefault(terms[i:i + _KEY], []).append((anum, i))

    def __len__(self):
        return len(self.entries)

    def find(self, query: Sequence[int]) -> list[tuple[str, int]]:
        """(A-number, 0-based start) of every contiguous occurrence of ``query``."""
        q = tuple(query)
        if len(q) < _KEY:
            return sorted((a, i) for a, t in self.entries.items()
                          for i in range(len(t) - len(q) + 1) if t[i:i + len(q)] == q)
        out = []
        for anum, i in self._index.get(q[:_KEY], ()):
            if self.entries[anum][i:i + len(q)] == q:
                out.append((anum, i))
        return sorted(out)


def parse_lines(lines) -> OeisTable:
    entries = {}
    malformed = 0
    for raw in lines:
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        m = _LINE.match(line)
        if not m:
            malformed += 1
            continue
        entries[m.group(1)] = tuple(int(t) for t in m.group(2).split(",") if t)
    if malformed:
        log.warning("skipped %d malformed OEIS lines", malformed)
    return OeisTable(entries, malformed)


def oeis_load(path: str | Path) -> OeisTable:
    path = Path(path)
    opener = gzip.open if path.suffix == ".gz" else open
    try:
        with opener(path, "rt", encoding="utf-8", errors="replace") as fh:
            table = parse_lines(fh)
    except OSError as exc:
        raise OeisLoadError(f"cannot read OEIS dump {path}: {exc}") from exc
    if not table.entries:
        raise OeisLoadError(f"no sequences parsed from {path}")
    return table


# --- normalizations ---------------------------------------------------------
# A normalization is named by a kind string:
#   identity, drop<k>, minus<c>, divide<d>, common_factor, div_2^n, div_n, div_n+<j>
# and maps (terms, n_min) to new terms, or None when it does not apply exactly.

_KIND = re.compile(r"^(identity|drop(\d+)|minus(\d+)|divide(\d+)|common_factor|div_2\^n|div_n(?:\+(\d+))?)$")


def _exact(terms, divisors):
    out = []
    for t, d in zip(terms, divisors):
        q, r = divmod(t, d)
        if r:
            return None
        out.append(q)
    return out


def apply_normalization(kind: str, terms: Sequence[int], n_min: int = 2) -> list[int] | None:
    m = _KIND.match(kind)
    if not m:
        raise ValueError(f"unknown normalization {kind!r}")
    terms = list(terms)
    if kind == "identity":
        return terms
    if m.group(2):
        return terms[int(m.group(2)):]
    if m.group(3):
        return [t - int(m.group(3)) for t in terms]
    if m.group(4):
        return _exact(terms, [int(m.group(4))] * len(terms))
    if kind == "common_factor":
        g = 0
        for t in terms:
            g = gcd(g, t)
        return [t // g for t in terms] if g > 1 else None
    ns = range(n_min, n_min + len(terms))
    if kind == "div_2^n":
        return _exact(terms, [2 ** n for n in ns])
    j = int(m.group(5) or 0)
    return _exact(terms, [n + j for n in ns])


def normalizations(max_drop: int = 3, constants=(1, 2)) -> list[str]:
    """The default registry used for OEIS matching."""
    return (["identity"] + [f"drop{k}" for k in range(1, max_drop + 1)]
            + [f"minus{c}" for c in constants] + ["common_factor", "div_2^n"])


NORMALIZATIONS = normalizations()


def describe(kind: str, terms: Sequence[int] = ()) -> str:
    """Human-readable form of a normalization."""
    m = _KIND.match(kind)
    if kind == "identity":
        return "as is"
    if m.group(2):
        return f"first {m.group(2)} terms dropped"
    if m.group(3):
        return f"minus {m.group(3)}"
    if m.group(4):
        return f"divided by {m.group(4)}"
    if kind == "common_factor":
        g = 0
        for t in terms:
            g = gcd(g, t)
        return f"divided by {g}"
    if kind == "div_2^n":
        return "divided by 2^n"
    return "divided by n" + (f"+{m.group(5)}" if m.group(5) else "")


@dataclass(frozen=True)
class MatchOptions:
    min_terms: int = 6
    max_drop: int = 3
    constants: tuple[int, ...] = (1, 2)
    extra: tuple[str, ...] = ()     # further normalization kinds, e.g. "div_n"
    n_min: int = 2


@dataclass(frozen=True)
class OeisHit:
    anumber: str
    kind: str
    offset: int     # index in the stored terms where the match starts


def oeis_match(terms: Sequence[int], table: OeisTable,
               options: MatchOptions | None = None) -> list[OeisHit]:
    """Hits of the terms, after each normalization, as contiguous runs in the table.

    Ordered by normalization, then A-number.  Each A-number is reported once,
    under the first normalization that finds it.
    """
    opts = options or MatchOptions()
    kinds = normalizations(opts.max_drop, opts.constants) + list(opts.extra)
    hits = []
    seen = set()
    for kind in kinds:
        q = apply_normalization(kind, terms, opts.n_min)
        if q is None or len(q) < opts.min_terms:
            continue
        if kind != "identity" and q == list(terms):
            continue
        for anum, start in table.find(q):
            if anum not in seen:
                seen.add(anum)
                hits.append(OeisHit(anum, kind, start))
    return hits


def _candidate_kinds(seq, var, max_drop=3, max_constant=4):
    kinds = [f"drop{k}" for k in range(1, max_drop + 1)]
    if seq and var:
        c = seq[0] - var[0]
        if 1 <= c <= max_constant:
            kinds.append(f"minus{c}")
        if var[0] > 0 and seq[0] % var[0] == 0 and seq[0] // var[0] > 1:
            kinds.append(f"divide{seq[0] // var[0]}")
    return kinds + ["common_factor", "div_2^n", "div_n", "div_n+1", "div_n+2"]


def explain_variant(seq: Sequence[int], var: Sequence[int], n_min: int = 2) -> str | None:
    """First normalization taking ``seq`` onto ``var`` on their common prefix.

    Constants and divisors are read off the first terms.
    """
    for kind in _candidate_kinds(list(seq), list(var)):
        q = apply_normalization(kind, seq, n_min)
        if q is None:
            continue
        k = min(len(q), len(var))
        if k and q[:k] == list(var[:k]):
            return kind
    return None


def write_stripped(entries: dict[str, Sequence[int]], path: str | Path, header: str = "") -> None:
    with open(path, "w") as fh:
        for line in header.splitlines():
            fh.write(f"# {line}\n")
        for anum in sorted(entries):
            fh.write(f"{anum} ," + "".join(f"{t}," for t in entries[anum]) + "\n")
