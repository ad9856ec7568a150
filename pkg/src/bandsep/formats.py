"""Canonical readers and writers.  Vertex ids are 1-based on disk and 0-based in memory."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

import yaml

from .errors import FormatError
from .graph import Graph, Labelling
from .tdecomp import TreeDecomposition


def _lines(text: str):
    """Yield (line number, tokens) for non-blank, non-comment lines."""
    for lineno, raw in enumerate(text.splitlines(), start=1):
        toks = raw.split()
        if not toks or toks[0] == "c":
            continue
        yield lineno, toks


def _int(tok: str, lineno: int, what: str) -> int:
    try:
        return int(tok)
    except ValueError:
        raise FormatError(f"{what} {tok!r} is not an integer", lineno) from None


# ----------------------------------------------------------------- graphs


def parse_gr(text: str) -> Graph:
    it = _lines(text)
    try:
        lineno, head = next(it)
    except StopIteration:
        raise FormatError("missing header 'p tw <n> <m>'", 1) from None
    if len(head) != 4 or head[:2] != ["p", "tw"]:
        raise FormatError("malformed header, expected 'p tw <n> <m>'", lineno)
    n, m = _int(head[2], lineno, "vertex count"), _int(head[3], lineno, "edge count")
    if n < 0 or m < 0:
        raise FormatError("negative count in header", lineno)
    edges: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    last = lineno
    for lineno, toks in it:
        last = lineno
        if len(toks) != 2:
            raise FormatError("edge line must hold exactly two vertex ids", lineno)
        u, v = (_int(t, lineno, "vertex id") for t in toks)
        for x in (u, v):
            if not 1 <= x <= n:
                raise FormatError(f"vertex id {x} out of range 1..{n}", lineno)
        if u == v:
            raise FormatError(f"self-loop at vertex {u}", lineno)
        key = (min(u, v), max(u, v))
        if key in seen:
            raise FormatError(f"duplicate edge {u} {v}", lineno)
        seen.add(key)
        edges.append((u - 1, v - 1))
    if len(edges) != m:
        raise FormatError(f"header announces {m} edges, found {len(edges)}", last)
    return Graph(n, edges)


def write_gr(g: Graph) -> str:
    out = [f"p tw {g.n} {g.m}"]
    out += [f"{u + 1} {v + 1}" for u, v in g.edges()]
    return "\n".join(out) + "\n"


# ---------------------------------------------------------- decompositions


def write_td(td: TreeDecomposition) -> str:
    max_bag = max((len(b) for b in td.bags), default=0)
    out = [f"s td {len(td.bags)} {max_bag} {td.n}"]
    for i, bag in enumerate(td.bags, start=1):
        out.append(" ".join(["b", str(i)] + [str(v + 1) for v in sorted(bag)]))
    out += [f"{i + 1} {j + 1}" for i, j in td.edges]
    return "\n".join(out) + "\n"


def parse_td(text: str, g: Graph) -> TreeDecomposition:
    it = _lines(text)
    try:
        lineno, head = next(it)
    except StopIteration:
        raise FormatError("missing header 's td <bags> <max bag> <n>'", 1) from None
    if len(head) != 5 or head[:2] != ["s", "td"]:
        raise FormatError("malformed header, expected 's td <bags> <max bag> <n>'", lineno)
    nbags, max_bag, n = (_int(t, lineno, "header field") for t in head[2:])
    if n != g.n:
        raise FormatError(f"decomposition is for {n} vertices, graph has {g.n}", lineno)
    bags: dict[int, frozenset[int]] = {}
    edges: list[tuple[int, int]] = []
    for lineno, toks in it:
        if toks[0] == "b":
            if len(toks) < 2:
                raise FormatError("bag line without an index", lineno)
            i = _int(toks[1], lineno, "bag index")
            if not 1 <= i <= nbags:
                raise FormatError(f"bag index {i} out of range 1..{nbags}", lineno)
            if i in bags:
                raise FormatError(f"bag {i} listed twice", lineno)
            vs = [_int(t, lineno, "vertex id") for t in toks[2:]]
            for v in vs:
                if not 1 <= v <= n:
                    raise FormatError(f"bag {i} names unknown vertex {v}", lineno)
            if len(set(vs)) != len(vs):
                raise FormatError(f"bag {i} repeats a vertex", lineno)
            bags[i] = frozenset(v - 1 for v in vs)
        else:
            if len(toks) != 2:
                raise FormatError("tree edge line must hold exactly two bag indices", lineno)
            i, j = (_int(t, lineno, "bag index") for t in toks)
            for x in (i, j):
                if not 1 <= x <= nbags:
                    raise FormatError(f"tree edge names unknown bag {x}", lineno)
            edges.append((i - 1, j - 1))
    if len(bags) != nbags:
        missing = min(set(range(1, nbags + 1)) - set(bags))
        raise FormatError(f"bag {missing} missing", lineno)
    if max((len(b) for b in bags.values()), default=0) != max_bag:
        raise FormatError(f"header max bag size {max_bag} does not match the bags", 1)
    return TreeDecomposition(n, tuple(bags[i] for i in range(1, nbags + 1)), tuple(edges))


# --------------------------------------------------------------- orderings


def write_ordering(sigma: Labelling) -> str:
    return "".join(f"{v + 1}\n" for v in sigma.order)


def parse_ordering(text: str, n: int | None = None) -> Labelling:
    order = []
    for lineno, toks in _lines(text):
        if len(toks) != 1:
            raise FormatError("ordering line must hold one vertex id", lineno)
        order.append(_int(toks[0], lineno, "vertex id") - 1)
    if n is not None and len(order) != n:
        raise FormatError(f"ordering lists {len(order)} vertices, expected {n}", len(order))
    if sorted(order) != list(range(len(order))):
        raise FormatError("ordering is not a permutation of 1..n", len(order))
    return Labelling.from_order(order)


# ----------------------------------------------------------------- reports

KINDS = ("exact", "upper", "lower")
STATUSES = ("pass", "fail", "consistent", "not-evaluated")


@dataclass(frozen=True)
class ParameterEntry:
    name: str
    value: object
    kind: str
    certificate: str = ""

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown entry kind {self.kind!r}")
        if self.kind == "exact" and not self.certificate:
            raise ValueError(f"exact entry {self.name!r} needs a certificate or oracle tag")


@dataclass(frozen=True)
class VerdictEntry:
    name: str
    status: str
    detail: str = ""

    def __post_init__(self):
        if self.status not in STATUSES:
            raise ValueError(f"unknown verdict {self.status!r}")


@dataclass(frozen=True)
class ReportDocument:
    metadata: dict
    entries: tuple[ParameterEntry, ...] = ()
    verdicts: tuple[VerdictEntry, ...] = ()
    notes: dict = field(default_factory=dict)

    def entry(self, name: str) -> ParameterEntry | None:
        return next((e for e in self.entries if e.name == name), None)

    def verdict(self, name: str) -> VerdictEntry | None:
        return next((v for v in self.verdicts if v.name == name), None)


def _plain(x):
    """Coerce to YAML-safe builtins; exact rationals become 'p/q' strings."""
    if isinstance(x, Fraction):
        return str(x)
    if isinstance(x, dict):
        return {str(k): _plain(v) for k, v in x.items()}
    if isinstance(x, (list, tuple, set, frozenset)):
        items = sorted(x) if isinstance(x, (set, frozenset)) else x
        return [_plain(v) for v in items]
    if isinstance(x, float) and x != x:
        return "nan"
    return x


def report_to_dict(r: ReportDocument) -> dict:
    doc = {"graph": _plain(r.metadata)}
    if r.entries:
        doc["parameters"] = {
            e.name: {"value": _plain(e.value), "kind": e.kind, "certificate": e.certificate}
            for e in sorted(r.entries, key=lambda e: e.name)
        }
    if r.verdicts:
        doc["inequalities"] = {
            v.name: {"status": v.status, "detail": v.detail} for v in sorted(r.verdicts, key=lambda v: v.name)
        }
    if r.notes:
        doc["notes"] = _plain(r.notes)
    return doc


def write_report(r: ReportDocument) -> str:
    return yaml.safe_dump(report_to_dict(r), sort_keys=True, default_flow_style=None, allow_unicode=False, width=100)


def write_document(doc: dict) -> str:
    """Any mapping as a canonical YAML document (used for certificates and selftest summaries)."""
    return yaml.safe_dump(_plain(doc), sort_keys=True, default_flow_style=None, allow_unicode=False, width=100)
