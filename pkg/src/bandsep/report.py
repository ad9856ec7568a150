"""Per-graph reports: exact values, certified bounds, and interval-checked inequality verdicts.

A verdict is ``pass`` only when the left side's certified upper end is at
most the right side's certified lower end, ``fail`` only when the reverse
strict inequality is certified, and ``consistent`` when both are still
possible.  Exact values count as both ends.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .bounds import (
    boundedness_from_bandwidth,
    boundedness_from_bandwidth_sound,
    separation_from_treewidth,
    treewidth_bound_formula,
)
from .errors import CertificateError, SeparatorNotFound, SizeGuardError
from .expansion import boundedness_bounds, make_finder
from .formats import ParameterEntry, ReportDocument, VerdictEntry
from .graph import (
    Graph,
    bandwidth_of_labelling,
    components,
    degree_lower_bound,
    diameter,
    eccentricity,
    induced_subgraph,
    is_forest,
    multi_source_distances,
)
from .oracles import exact_bandwidth, exact_separation_number, exact_treewidth
from .ordering import (
    bandwidth_bound_formula,
    bandwidth_bound_planar,
    level_ordering,
    recursive_band_ordering,
)
from .separators import provider as make_provider, separator_bound_genus, validate_separator
from .tdecomp import min_degree_order, td_from_bandwidth_labelling, td_from_elimination_order, validate_tree_decomposition
from .treewidth import td_from_separators


BOUNDEDNESS_GUARD = 14


@dataclass
class ReportConfig:
    full_exact: bool = False
    bandwidth_limit: int = 10
    treewidth_limit: int = 12
    separation_limit: int = 8
    boundedness_limit: int = 12
    bdd_eps: tuple = (Fraction(1, 2), Fraction(1))
    tw_eps: tuple = (Fraction(1, 4), Fraction(1, 2))
    provider: str = "auto"
    td_eps: Fraction = Fraction(1, 10)
    td_max_n: int = 600
    seed: int = 0


@dataclass
class _Interval:
    lo: object = None
    hi: object = None
    exact: bool = False
    source: str = ""

    @classmethod
    def of(cls, value, source: str) -> _Interval:
        return cls(value, value, True, source)


def _judge(name: str, left: _Interval, right: _Interval, detail: str) -> VerdictEntry:
    """Interval semantics for ``left <= right``."""
    if left.hi is not None and right.lo is not None and left.hi <= right.lo:
        return VerdictEntry(name, "pass", detail)
    if left.lo is not None and right.hi is not None and left.lo > right.hi:
        return VerdictEntry(name, "fail", detail)
    if left.lo is None and left.hi is None or right.lo is None and right.hi is None:
        return VerdictEntry(name, "not-evaluated", detail)
    return VerdictEntry(name, "consistent", detail)


def _map(iv: _Interval, f) -> _Interval:
    """Image of an interval under a nondecreasing map."""
    return _Interval(
        None if iv.lo is None else f(iv.lo), None if iv.hi is None else f(iv.hi), iv.exact, iv.source
    )


def _entries(name: str, iv: _Interval) -> list[ParameterEntry]:
    if iv.exact:
        return [ParameterEntry(name, iv.lo, "exact", iv.source)]
    out = []
    if iv.lo is not None:
        out.append(ParameterEntry(f"{name}.lower", iv.lo, "lower", iv.source))
    if iv.hi is not None:
        out.append(ParameterEntry(f"{name}.upper", iv.hi, "upper", iv.source))
    return out


def _diameter_upper(g: Graph, exact_limit: int = 1500) -> int:
    """Exact diameter when affordable, else twice the eccentricity of a double-sweep midpoint."""
    if g.n <= exact_limit or is_forest(g):
        return diameter(g)
    dist = multi_source_distances(g, [0])
    a = max(range(g.n), key=lambda v: (dist[v], -v))
    da = multi_source_distances(g, [a])
    b = max(range(g.n), key=lambda v: (da[v], -v))
    db = multi_source_distances(g, [b])
    half = int(da[b]) // 2
    mid = min((v for v in range(g.n) if da[v] + db[v] == da[b] and da[v] == half), default=0)
    return 2 * eccentricity(g, mid)


def _bandwidth_lower(g: Graph) -> int:
    """max of ceil(maxdeg/2) and, per component, ceil((n_c - 1)/diam_c)."""
    best = degree_lower_bound(g)
    for comp in components(g):
        if len(comp) > 1:
            sub, _ = induced_subgraph(g, comp)
            best = max(best, math.ceil(Fraction(len(comp) - 1, _diameter_upper(sub))))
    return best


def _fmt_eps(e: Fraction) -> str:
    return str(e)


def build_report(g: Graph, config: ReportConfig | None = None) -> ReportDocument:
    cfg = config or ReportConfig()
    meta = {"n": g.n, "m": g.m, "max_degree": g.max_degree}
    if g.n == 0:
        return ReportDocument(meta)
    entries: list[ParameterEntry] = []
    verdicts: list[VerdictEntry] = []
    notes: dict = {"failures": {}}

    def attempt(key: str, fn):
        try:
            return fn()
        except SizeGuardError:
            if cfg.full_exact:
                raise
            return None
        except (CertificateError, SeparatorNotFound, ValueError) as exc:
            notes["failures"][key] = f"{type(exc).__name__}: {exc}"
            return None

    def exact_or_none(limit: int, fn):
        if g.n > limit and not cfg.full_exact:
            return None
        # full_exact defers to each oracle's own size guard
        return attempt(fn.__name__, lambda: fn(g) if cfg.full_exact else fn(g, limit_n=limit))

    # bandwidth
    bdw = _Interval(_bandwidth_lower(g), None, False, "")
    labellings = []
    res = exact_or_none(cfg.bandwidth_limit, exact_bandwidth)
    if res is not None:
        bdw = _Interval.of(res[0], "oracle:exact_bandwidth")
        labellings.append(res[1])
    cert = None
    if g.max_degree >= 2:
        cert = attempt("ordering", lambda: recursive_band_ordering(g, make_provider(cfg.provider)))
    if cert is not None:
        labellings.append(cert.labelling)
        notes["ordering"] = {
            "fallback": cert.fallback,
            "reason": cert.reason,
            "measured_bandwidth": cert.bandwidth,
            "s_cap": cert.s_cap,
            "b": cert.b,
            "guaranteed_bound": cert.guaranteed_bound,
            "formula_bound": None if cert.formula_bound is None else round(cert.formula_bound, 6),
            "separators": len(cert.separators),
        }
    base = level_ordering(g)
    labellings.append(base)
    notes["baseline_level_ordering_bandwidth"] = bandwidth_of_labelling(g, base)
    measured = min(bandwidth_of_labelling(g, s) for s in labellings)
    best_labelling = min(labellings, key=lambda s: bandwidth_of_labelling(g, s))
    if not bdw.exact:
        bdw.hi = measured
        bdw.source = "labelling"
    bdw_hi_pos = max(1, bdw.hi)  # positive bandwidth convention for the comparisons below

    # treewidth
    trw = _Interval(0 if g.m == 0 else 1, None, False, "")
    res = exact_or_none(cfg.treewidth_limit, exact_treewidth)
    tds = []
    if res is not None:
        trw = _Interval.of(res[0], "oracle:exact_treewidth")
        tds.append(("exact", res[1]))
    tds.append(("min_degree", td_from_elimination_order(g, min_degree_order(g))))
    tds.append(("bandwidth", td_from_bandwidth_labelling(g, best_labelling, bandwidth_of_labelling(g, best_labelling))))
    if g.n <= cfg.td_max_n:
        sep_td = attempt("td_from_separators", lambda: td_from_separators(g, cfg.td_eps, make_finder("auto", seed=cfg.seed)))
        if sep_td is not None:
            tds.append(("separators", sep_td.td))
            notes["td_from_separators"] = {"eps": cfg.td_eps, "width": sep_td.td.width, "b_used": sep_td.b_used}
    for label, td in tds:
        if not validate_tree_decomposition(g, td):
            raise CertificateError(f"{label} decomposition failed validation")
    notes["decompositions"] = {label: td.width for label, td in tds}
    if not trw.exact:
        trw.hi = min(td.width for _, td in tds)
        trw.source = "tree decomposition"

    # separation number
    sep = _Interval(1, None, False, "")
    res = exact_or_none(cfg.separation_limit, exact_separation_number)
    if res is not None:
        sep = _Interval.of(res, "oracle:exact_separation_number")
    else:
        sep.hi = separation_from_treewidth(trw.hi)
        sep.source = "treewidth + 1 on a validated decomposition"
    top = attempt("separator", lambda: make_provider(cfg.provider)(g))
    if top is not None and validate_separator(g, top):
        notes["separator"] = {
            "S": [v + 1 for v in sorted(top.S)],
            "A": [v + 1 for v in sorted(top.A)],
            "B": [v + 1 for v in sorted(top.B)],
            "source": top.source,
        }

    # boundedness
    bdd: dict[Fraction, _Interval] = {}
    for e in sorted(set(cfg.bdd_eps) | set(cfg.tw_eps)):
        limit = cfg.boundedness_limit
        if cfg.full_exact:
            limit = BOUNDEDNESS_GUARD
            if g.n > limit:
                raise SizeGuardError(f"exact_boundedness: n={g.n} exceeds size guard {limit}")
        bb = attempt(f"boundedness {e}", lambda: boundedness_bounds(g, e, bdw_upper=bdw_hi_pos, exact_limit=limit))
        if bb is None:
            bdd[e] = _Interval()
        elif bb.upper_source == "exact":
            bdd[e] = _Interval.of(bb.lower, "oracle:exact_boundedness")
        else:
            bdd[e] = _Interval(bb.lower, bb.upper, False, bb.upper_source)

    entries += _entries("bandwidth", bdw)
    entries += _entries("treewidth", trw)
    entries += _entries("separation_number", sep)
    for e, iv in bdd.items():
        entries += _entries(f"boundedness[{_fmt_eps(e)}]", iv)

    # inequalities
    verdicts.append(_judge("separation <= treewidth + 1", sep, _map(trw, lambda x: x + 1), "s <= trw + 1"))
    verdicts.append(_judge("treewidth <= bandwidth", trw, bdw, "trw <= bdw"))
    bdw_pos = _map(bdw, lambda x: max(1, x))
    for e in cfg.bdd_eps:
        verdicts.append(
            _judge(f"boundedness[{e}] <= ceil(2 bandwidth / eps)", bdd[e],
                   _map(bdw_pos, lambda x: boundedness_from_bandwidth(x, e)), "stated form")
        )
        verdicts.append(
            _judge(f"boundedness[{e}] <= 2 floor(bandwidth / eps) + 1", bdd[e],
                   _map(bdw_pos, lambda x: boundedness_from_bandwidth_sound(x, e)), "odd-size expanders included")
        )
    for e in cfg.tw_eps:
        verdicts.append(
            _judge(f"treewidth <= 2 boundedness[{e}] + 2 eps n", trw,
                   _map(bdd[e], lambda x: treewidth_bound_formula(x, e, g.n)), "")
        )
    if cert is None:
        verdicts.append(VerdictEntry("bucket ordering certificate", "not-evaluated", "no ordering produced"))
    elif cert.fallback:
        verdicts.append(VerdictEntry("bucket ordering certificate", "not-evaluated", cert.reason))
    else:
        # reaching here means every assertion inside the driver held
        verdicts.append(VerdictEntry("bucket ordering certificate", "pass",
                                     f"{cert.bandwidth} < {cert.guaranteed_bound}"))
        verdicts.append(VerdictEntry("separation tree", "pass", f"{len(cert.tree.leaves)} leaves <= b={cert.b}"))
        verdicts.append(VerdictEntry("bandwidth <= 6n / log(n / s_cap)", "pass",
                                     f"{cert.bandwidth} <= {cert.formula_bound:.6f}"))

    formulas = {}
    if g.max_degree >= 2 and g.n >= 2:
        if sep.hi is not None:
            formulas["bandwidth via separators, s at its upper bound"] = round(
                bandwidth_bound_formula(g.n, g.max_degree, sep.hi), 6)
        formulas["bandwidth if planar"] = round(bandwidth_bound_planar(g.n, g.max_degree), 6)
    formulas["separator if planar"] = round(separator_bound_genus(g.n, 0), 6)
    notes["formulas"] = {k: (None if v == math.inf else v) for k, v in formulas.items()}
    if not notes["failures"]:
        del notes["failures"]
    return ReportDocument(meta, tuple(entries), tuple(verdicts), notes)
