"""Census of connected support classes: sequences, equal-sequence groups,
OEIS hits and report rendering."""

from __future__ import annotations

import json
from collections import defaultdict
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field

from .core import Support
from .count import sequence
from .oeis import MatchOptions, OeisTable, apply_normalization, describe, oeis_match
from .support import enumerate_connected_classes

FORMATS = ("text", "json", "markdown")
SCHEMA = "stdpuzzle.census/1"


@dataclass
class SequenceRecord:
    canonical: str
    size: int
    terms: list[int]
    n_min: int = 2
    see_also: list[str] = field(default_factory=list)
    variants: list[tuple[str, list[int]]] = field(default_factory=list)
    oeis_hits: list[tuple[str, str, int]] = field(default_factory=list)

    @property
    def support(self) -> Support:
        return Support(self.canonical)

    def to_dict(self) -> dict:
        d = asdict(self)
        d["terms"] = [str(t) for t in self.terms]
        d["variants"] = [{"kind": k, "terms": [str(t) for t in ts]} for k, ts in self.variants]
        d["oeis_hits"] = [{"anumber": a, "kind": k, "offset": o} for a, k, o in self.oeis_hits]
        return d

    @classmethod
    def from_dict(cls, d: dict) -> "SequenceRecord":
        return cls(
            canonical=d["canonical"],
            size=d["size"],
            terms=[int(t) for t in d["terms"]],
            n_min=d["n_min"],
            see_also=list(d["see_also"]),
            variants=[(v["kind"], [int(t) for t in v["terms"]]) for v in d["variants"]],
            oeis_hits=[(h["anumber"], h["kind"], h["offset"]) for h in d["oeis_hits"]],
        )


def _terms(args):
    name, n_max = args
    return list(sequence(Support(name), 2, n_max).terms)


def class_terms(names: list[str], n_max: int, workers: int = 1) -> list[list[int]]:
    jobs = [(name, n_max) for name in names]
    if workers <= 1 or len(jobs) < 2:
        return [_terms(j) for j in jobs]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(_terms, jobs, chunksize=max(1, len(jobs) // (4 * workers))))


def link_see_also(records: list[SequenceRecord]) -> None:
    groups = defaultdict(list)
    for r in records:
        groups[tuple(r.terms)].append(r.canonical)
    for r in records:
        r.see_also = sorted(c for c in groups[tuple(r.terms)] if c != r.canonical)


def attach_oeis(record: SequenceRecord, table: OeisTable, options: MatchOptions | None = None) -> None:
    opts = options or MatchOptions(n_min=record.n_min)
    hits = oeis_match(record.terms, table, opts)
    record.oeis_hits = [(h.anumber, h.kind, h.offset) for h in hits]
    kinds = []
    for h in hits:
        if h.kind != "identity" and h.kind not in kinds:
            kinds.append(h.kind)
    record.variants = [(k, apply_normalization(k, record.terms, record.n_min)) for k in kinds]


def census(size: int, n_max: int = 12, workers: int = 1, table: OeisTable | None = None,
           options: MatchOptions | None = None) -> list[SequenceRecord]:
    """One record per connected class of the given size, ordered by name."""
    if n_max < 2:
        raise ValueError("n_max must be at least 2")
    classes = enumerate_connected_classes(size)
    names = [c.name for c in classes]
    records = [SequenceRecord(name, size, terms)
               for name, terms in zip(names, class_terms(names, n_max, workers))]
    link_see_also(records)
    if table is not None:
        for r in records:
            attach_oeis(r, table, options)
    return records


# --- rendering --------------------------------------------------------------

def _pieces(name: str) -> str:
    from .core import piece_from_code
    return "{" + ", ".join("[" + "".join(map(str, piece_from_code(c).corners)) + "]"
                           for c in name) + "}"


def _csv(terms) -> str:
    return ", ".join(str(t) for t in terms)


def _text(records: list[SequenceRecord]) -> str:
    out = []
    for r in records:
        head = f"{r.canonical}  {_pieces(r.canonical)}"
        if r.see_also:
            head += "  See also " + ", ".join(r.see_also)
        out.append(head)
        out.append(f"Seq= {_csv(r.terms)}")
        for kind, terms in r.variants:
            out.append(f"Var= {_csv(terms)}  ({describe(kind, r.terms)})")
        if r.oeis_hits:
            out.append("OEIS: " + ", ".join(f"{a} ({describe(k, r.terms)}, offset {o})"
                                           for a, k, o in r.oeis_hits))
        out.append("")
    return "\n".join(out)


def _markdown(records: list[SequenceRecord]) -> str:
    out = []
    for r in records:
        out.append(f"### {r.canonical}")
        out.append("")
        out.append(f"- pieces: `{_pieces(r.canonical)}`")
        if r.see_also:
            out.append(f"- see also: {', '.join(r.see_also)}")
        out.append(f"- seq: {_csv(r.terms)}")
        for kind, terms in r.variants:
            out.append(f"- var ({describe(kind, r.terms)}): {_csv(terms)}")
        for a, k, o in r.oeis_hits:
            out.append(f"- oeis: {a} ({describe(k, r.terms)}, offset {o})")
        out.append("")
    return "\n".join(out)


def emit_report(records: list[SequenceRecord], fmt: str = "text") -> str:
    if fmt == "text":
        return _text(records)
    if fmt == "markdown":
        return _markdown(records)
    if fmt == "json":
        doc = {"schema": SCHEMA, "records": [r.to_dict() for r in records]}
        return json.dumps(doc, indent=1, sort_keys=True) + "\n"
    raise ValueError(f"unknown format {fmt!r}; expected one of {FORMATS}")


def parse_report(document: str) -> list[SequenceRecord]:
    doc = json.loads(document)
    if doc.get("schema") != SCHEMA:
        raise ValueError("not a census document")
    return [SequenceRecord.from_dict(d) for d in doc["records"]]
