"""Bandwidth orderings from separators, each shipped with a checked certificate.

``decomposition_ordering`` turns a partition ``V = S + P_1..P_b + R_1..R_b``
into buckets ``B_1..B_b`` whose edges only join equal or consecutive buckets;
concatenating the buckets gives bandwidth below ``2(|S| + |P| + r)``.

``recursive_band_ordering`` builds such a partition by splitting the graph
with (s, 2/3)-separators until every part has at most ``2n/b`` vertices,
where ``b = floor(log_D(n/s))``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import CertificateError, PartitionError, SeparatorNotFound, Verdict
from .graph import Graph, Labelling, UNREACHABLE, bandwidth_of_labelling, induced_subgraph, multi_source_distances
from .separators import TWO_THIRDS, Separator, SeparatorProvider, validate_separator


@dataclass(frozen=True)
class SPRPartition:
    S: frozenset[int]
    P: tuple[frozenset[int], ...]
    R: tuple[frozenset[int], ...]
    b: int
    r: Fraction

    @property
    def p_size(self) -> int:
        return sum(len(p) for p in self.P)

    @property
    def guaranteed_bound(self) -> Fraction:
        return 2 * (len(self.S) + self.p_size + Fraction(self.r))


@dataclass(frozen=True)
class BucketAssignment:
    bucket: tuple[int, ...]  # 1-based bucket per vertex
    sizes: tuple[int, ...]


@dataclass(frozen=True)
class SeparationNode:
    label: Fraction
    children: tuple[int, ...] = ()
    vertices: frozenset[int] = frozenset()


@dataclass(frozen=True)
class SeparationTree:
    """Binary recursion tree: internal nodes are separators, leaves are final parts."""

    nodes: tuple[SeparationNode, ...]
    root: int = 0

    @property
    def leaves(self) -> list[int]:
        return [i for i, nd in enumerate(self.nodes) if not nd.children]

    @property
    def internal(self) -> list[int]:
        return [i for i, nd in enumerate(self.nodes) if nd.children]


@dataclass(frozen=True)
class OrderingCertificate:
    labelling: Labelling
    bandwidth: int
    fallback: bool
    reason: str = ""
    partition: SPRPartition | None = None
    buckets: BucketAssignment | None = None
    guaranteed_bound: Fraction | None = None
    formula_bound: float | None = None
    s_cap: int | None = None
    beta: float | None = None
    b: int | None = None
    separators: tuple[Separator, ...] = ()
    tree: SeparationTree | None = None
    extra: dict = field(default_factory=dict)


# -------------------------------------------------------------------- buckets


def bucket_index(i: int, dist_s: float, b: int) -> int:
    """Bucket of a buffer vertex of part ``i`` at distance ``dist_s`` from S (all 1-based)."""
    c = (b + 1) // 2
    if dist_s >= abs(c - i):
        return i
    if dist_s < c - i:
        return c - int(dist_s)
    return c + int(dist_s)


def validate_partition(g: Graph, part: SPRPartition) -> Verdict:
    b = part.b
    if b < 3:
        return Verdict.failed("b", f"b={b} must be at least 3")
    if len(part.P) != b or len(part.R) != b:
        return Verdict.failed("cover", f"expected {b} P-sets and {b} R-sets")
    seen: dict[int, str] = {}
    named = [("S", part.S)] + [(f"P_{i + 1}", p) for i, p in enumerate(part.P)]
    named += [(f"R_{i + 1}", r) for i, r in enumerate(part.R)]
    for name, vs in named:
        for v in vs:
            if not 0 <= v < g.n:
                return Verdict.failed("cover", f"{name} names unknown vertex {v}")
            if v in seen:
                return Verdict.failed("cover", f"vertex {v} in both {seen[v]} and {name}")
            seen[v] = name
    if len(seen) != g.n:
        return Verdict.failed("cover", f"vertex {min(set(range(g.n)) - set(seen))} in no set")
    for i, r in enumerate(part.R):
        if len(r) > part.r:
            return Verdict.failed("(i)", f"|R_{i + 1}|={len(r)} > r={part.r}")
    home = {}
    for i in range(b):
        for v in part.P[i] | part.R[i]:
            home[v] = i
    for u, v in g.edges():
        if u in home and v in home and home[u] != home[v]:
            return Verdict.failed("(ii)", f"edge ({u}, {v}) joins parts {home[u] + 1} and {home[v] + 1}")
    if part.S:
        dist = multi_source_distances(g, part.S)
        floor_half = b // 2
        for i, r in enumerate(part.R):
            for v in sorted(r):
                if dist[v] < floor_half:
                    return Verdict.failed("(iii)", f"vertex {v} of R_{i + 1} at distance {dist[v]} < {floor_half} from S")
    return Verdict.passed()


def decomposition_ordering(g: Graph, part: SPRPartition) -> OrderingCertificate:
    """Bucket placement and concatenation; the bandwidth bound is checked, not assumed."""
    verdict = validate_partition(g, part)
    if not verdict:
        raise PartitionError(verdict.condition, verdict.detail)
    b = part.b
    c = (b + 1) // 2
    dist = multi_source_distances(g, part.S)
    bucket = [0] * g.n
    for v in part.S:
        bucket[v] = c
    for i in range(b):
        for v in part.R[i]:
            bucket[v] = i + 1
        for v in part.P[i]:
            bucket[v] = bucket_index(i + 1, dist[v], b)
    sizes = [0] * (b + 1)
    for j in bucket:
        sizes[j] += 1
    for u, v in g.edges():
        if abs(bucket[u] - bucket[v]) > 1:
            raise CertificateError(f"edge ({u}, {v}) spans buckets {bucket[u]} and {bucket[v]}")
    cap = len(part.S) + part.p_size + part.r
    for j in range(1, b + 1):
        if sizes[j] > cap:
            raise CertificateError(f"bucket {j} holds {sizes[j]} > |S|+|P|+r = {cap}")
    order = sorted(range(g.n), key=lambda v: (bucket[v], v))
    sigma = Labelling.from_order(order)
    measured = bandwidth_of_labelling(g, sigma)
    bound = part.guaranteed_bound
    if not measured < bound:
        raise CertificateError(f"measured bandwidth {measured} not below 2(|S|+|P|+r) = {bound}")
    return OrderingCertificate(
        labelling=sigma,
        bandwidth=measured,
        fallback=False,
        partition=part,
        buckets=BucketAssignment(tuple(bucket), tuple(sizes[1:])),
        guaranteed_bound=bound,
    )


# --------------------------------------------------------- separation trees


def validate_separation_tree(t: SeparationTree, b) -> Verdict:
    """Binary shape, label mass <= 1, the per-node leaf inequality, and at most b leaves."""
    b = Fraction(b)
    nodes = t.nodes
    parents = [0] * len(nodes)
    for i, nd in enumerate(nodes):
        if len(nd.children) not in (0, 2):
            return Verdict.failed("binary", f"node {i} has {len(nd.children)} children")
        for ch in nd.children:
            if not 0 <= ch < len(nodes) or ch == t.root:
                return Verdict.failed("shape", f"node {i} has invalid child {ch}")
            parents[ch] += 1
    if any(p != 1 for i, p in enumerate(parents) if i != t.root) or parents[t.root]:
        return Verdict.failed("shape", "not a rooted tree")
    if any(nd.label < 0 for nd in nodes):
        return Verdict.failed("labels", "negative label")
    total = sum(nd.label for nd in nodes)
    if total > 1:
        return Verdict.failed("labels", f"labels sum to {total} > 1")
    leaves, internal = t.leaves, t.internal
    if len(internal) != len(leaves) - 1:
        return Verdict.failed("count", f"{len(internal)} internal nodes for {len(leaves)} leaves")
    for w in internal:
        leaf_kids = [u for u in nodes[w].children if not nodes[u].children]
        lhs = nodes[w].label + sum(nodes[u].label for u in leaf_kids)
        if lhs < Fraction(len(leaf_kids)) / b:
            return Verdict.failed("leaf-mass", f"node {w}: {lhs} < {len(leaf_kids)}/{b}")
    if len(leaves) > b:
        return Verdict.failed("leaves", f"{len(leaves)} leaves > b={b}")
    return Verdict.passed()


# ------------------------------------------------------------ the driver


class _BudgetExceeded(Exception):
    def __init__(self, size: int):
        self.size = size


def _band_count(n: int, delta: int, s: int) -> int:
    """floor(log_delta(n/s)) by integer arithmetic."""
    b = 0
    while s * delta ** (b + 1) <= n:
        b += 1
    return b


def _fallback(g: Graph, reason: str, s_cap: int | None, beta: float | None) -> OrderingCertificate:
    sigma = Labelling.identity(g.n)
    return OrderingCertificate(
        labelling=sigma,
        bandwidth=bandwidth_of_labelling(g, sigma),
        fallback=True,
        reason=reason,
        s_cap=s_cap,
        beta=beta,
    )


def _split_all(g: Graph, provider: SeparatorProvider, s_cap: int, b: int, strict: bool):
    """Round-based splitting until every part has at most 2n/b vertices."""
    n = g.n
    nodes: list[dict] = [{"vertices": frozenset(range(n))}]
    parts = [0]  # node ids of the current parts, in creation order
    separators: list[Separator] = []
    while True:
        if all(b * len(nodes[p]["vertices"]) <= 2 * n for p in parts):
            break
        nxt = []
        for p in parts:
            vs = nodes[p]["vertices"]
            if b * len(vs) <= 2 * n:
                nxt.append(p)
                continue
            sub, ids = induced_subgraph(g, vs)
            local = provider(sub, TWO_THIRDS)
            if local.size > s_cap:
                if strict:
                    raise SeparatorNotFound(
                        f"provider returned |S|={local.size} above s_cap={s_cap}", {"part_size": len(vs)}
                    )
                raise _BudgetExceeded(local.size)
            if not validate_separator(sub, local, s_cap):
                raise CertificateError("provider separator failed validation")
            sep = local.relabel(ids)
            separators.append(sep)
            kids = []
            for side in (sep.A, sep.B):
                nodes.append({"vertices": side})
                kids.append(len(nodes) - 1)
            nodes[p]["separator"] = sep.S
            nodes[p]["children"] = tuple(kids)
            nxt.extend(kids)
        parts = nxt
    tree_nodes = []
    for nd in nodes:
        if "children" in nd:
            tree_nodes.append(SeparationNode(Fraction(len(nd["separator"]), n), nd["children"], nd["separator"]))
        else:
            tree_nodes.append(SeparationNode(Fraction(len(nd["vertices"]), n), (), nd["vertices"]))
    final = [nodes[p]["vertices"] for p in parts]
    return final, separators, SeparationTree(tuple(tree_nodes))


def _ordering_with_budget(g: Graph, provider: SeparatorProvider, s_cap: int, strict: bool) -> OrderingCertificate:
    n, delta = g.n, g.max_degree
    if delta == 2:
        return _fallback(g, "maximum degree 2: the bound is trivial", s_cap, None)
    beta = math.log(n, delta) - math.log(s_cap, delta)
    if n <= s_cap * delta**6:
        return _fallback(g, f"log_D(n/s) = {beta:.4f} <= 6", s_cap, beta)
    b = _band_count(n, delta, s_cap)
    final, separators, tree = _split_all(g, provider, s_cap, b, strict)
    verdict = validate_separation_tree(tree, b)
    if not verdict:
        raise CertificateError(f"separation tree invalid: {verdict.condition} {verdict.detail}")
    if len(final) > b:
        raise CertificateError(f"{len(final)} parts exceed b={b}")
    s_all = frozenset().union(*(sep.S for sep in separators))
    dist = multi_source_distances(g, s_all)
    half = b // 2
    P, R = [], []
    for vs in final:
        p = frozenset(v for v in vs if dist[v] < half and dist[v] != UNREACHABLE)
        P.append(p)
        R.append(vs - p)
    while len(P) < b:
        P.append(frozenset())
        R.append(frozenset())
    part = SPRPartition(s_all, tuple(P), tuple(R), b, Fraction(2 * n, b))
    cert = decomposition_ordering(g, part)
    formula = 6 * n / beta
    if cert.bandwidth > formula + 1e-9:
        raise CertificateError(f"measured bandwidth {cert.bandwidth} exceeds 6n/beta = {formula:.3f}")
    return OrderingCertificate(
        labelling=cert.labelling,
        bandwidth=cert.bandwidth,
        fallback=False,
        partition=part,
        buckets=cert.buckets,
        guaranteed_bound=cert.guaranteed_bound,
        formula_bound=formula,
        s_cap=s_cap,
        beta=beta,
        b=b,
        separators=tuple(separators),
        tree=tree,
    )


def recursive_band_ordering(g: Graph, provider: SeparatorProvider, s_cap: int | None = None) -> OrderingCertificate:
    """Separator-driven ordering with bandwidth at most 6n/log_D(n/s_cap).

    With ``s_cap`` given, a provider separator larger than it is an error.
    Without it, the budget starts at the provider's declared ``s_max`` (or 1)
    and is raised to the largest separator seen until a run stays within it.
    """
    if g.max_degree < 2:
        raise ValueError("maximum degree below 2: no meaningful bound")
    if s_cap is not None:
        if s_cap < 1:
            raise ValueError("s_cap must be a positive integer")
        return _ordering_with_budget(g, provider, s_cap, strict=True)
    s = provider.s_max or 1
    while True:
        try:
            return _ordering_with_budget(g, provider, s, strict=False)
        except _BudgetExceeded as exc:
            s = exc.size


# ------------------------------------------------------------ bound formulas


def _log_bound(const: float, n: int, delta: int, ratio: float) -> float:
    if delta < 2:
        raise ValueError("delta must be at least 2")
    if ratio <= 1:
        return math.inf
    return const * n / math.log(ratio, delta)


def bandwidth_bound_formula(n: int, delta: int, s: float) -> float:
    """6n / log_D(n/s)."""
    return _log_bound(6, n, delta, n / s)


def bandwidth_bound_planar(n: int, delta: int) -> float:
    """15n / log_D(n)."""
    return _log_bound(15, n, delta, n)


def bandwidth_bound_genus(n: int, delta: int, genus: int) -> float:
    """15n / log_D(n/g); genus 0 uses the planar bound."""
    if genus < 0:
        raise ValueError("genus must be nonnegative")
    return bandwidth_bound_planar(n, delta) if genus == 0 else _log_bound(15, n, delta, n / genus)


def bandwidth_bound_minor(n: int, delta: int, h: int) -> float:
    """12n / log_D(n/h^3)."""
    if h < 1:
        raise ValueError("h must be at least 1")
    return _log_bound(12, n, delta, n / h**3)


def level_ordering(g: Graph) -> Labelling:
    """BFS level ordering per component from a lowest-id minimum-degree root (comparison baseline)."""
    seen = [False] * g.n
    order: list[int] = []
    for root in sorted(range(g.n), key=lambda v: (g.degree(v), v)):
        if seen[root]:
            continue
        seen[root] = True
        queue = [root]
        for u in queue:
            for w in g.adj[u]:
                if not seen[w]:
                    seen[w] = True
                    queue.append(w)
        order.extend(queue)
    return Labelling.from_order(order)
