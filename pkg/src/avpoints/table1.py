"""Percentages of cyclic and rich squarefree isogeny classes per (q, g)."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .classify import cross_checked, enumerate_elliptic_classes, table_category
from .errors import UnsupportedDimension
from .lmfdb import fetch

CATEGORIES = ("only_rich", "only_cyclic", "both", "neither")


@dataclass
class Table1Row:
    q: int
    g: int
    source: str
    counts: dict
    trivial: dict = field(default_factory=dict)  # counts restricted to N = 1 classes

    @property
    def total(self) -> int:
        return sum(self.counts.values())

    def fractions(self, include_trivial: bool = True) -> dict:
        counts = dict(self.counts)
        if not include_trivial:
            counts = {k: v - self.trivial.get(k, 0) for k, v in counts.items()}
        tot = sum(counts.values())
        return {k: Fraction(counts[k], tot) if tot else Fraction(0) for k in CATEGORIES}

    def percents(self, include_trivial: bool = True) -> dict:
        return {k: format_percent(v) for k, v in self.fractions(include_trivial).items()}

    def to_dict(self):
        return {
            "q": self.q,
            "g": self.g,
            "source": self.source,
            "total": self.total,
            "counts": dict(self.counts),
            "fractions": {k: str(v) for k, v in self.fractions().items()},
            "percents": self.percents(),
            "percents_without_trivial": self.percents(include_trivial=False),
        }


def format_percent(x: Fraction) -> str:
    """One decimal place; an exact zero prints as 0."""
    if x == 0:
        return "0"
    # round half up on the exact value
    tenths = (x * 1000 + Fraction(1, 2)).__floor__()
    return f"{tenths // 10}.{tenths % 10}"


def classes_for(q: int, g: int, source: str = "builtin", offline: bool = True, cache_dir=None):
    if source == "builtin":
        if g != 1:
            raise UnsupportedDimension("the builtin source only enumerates g = 1")
        return enumerate_elliptic_classes(q)
    if source == "lmfdb":
        Ws = [r.to_weil() for r in fetch(g, q, cache_dir=cache_dir, offline=offline)]
        return [W for W in Ws if W.squarefree]
    raise ValueError(f"unknown source {source!r}")


def table1_row(q: int, g: int, source: str = "builtin", **kw) -> Table1Row:
    counts = {k: 0 for k in CATEGORIES}
    trivial = {k: 0 for k in CATEGORIES}
    for W in classes_for(q, g, source, **kw):
        cyc, rich, _ = cross_checked(W)
        cat = table_category(cyc, rich)
        counts[cat] += 1
        if W.N == 1:
            trivial[cat] += 1
    return Table1Row(q, g, source, counts, trivial)


def table1(qs, gs, source: str = "builtin", **kw) -> list[Table1Row]:
    return [table1_row(q, g, source, **kw) for q in qs for g in gs]


def render_table(rows, sep: str = "\t") -> str:
    head = ["q", "g", "classes", *CATEGORIES, "source"]
    lines = [sep.join(head)]
    for r in rows:
        p = r.percents()
        lines.append(sep.join([str(r.q), str(r.g), str(r.total), *(p[k] for k in CATEGORIES), r.source]))
    if any(r.g >= 2 for r in rows):
        lines.append("# g >= 2 rows are computed over the bundled fixture subset, not the full LMFDB")
    return "\n".join(lines) + "\n"
