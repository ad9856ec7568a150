"""Tree decompositions: the certificate type, its validator, and direct constructions."""

from __future__ import annotations

import heapq
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .errors import Verdict
from .graph import Graph, Labelling, bandwidth_of_labelling


@dataclass(frozen=True)
class TreeDecomposition:
    """Bags indexed ``0..k-1`` plus tree edges over those indices.

    ``n`` is the vertex count of the decomposed graph.  Edges are stored
    normalised (``i < j``, sorted) so structural equality is plain ``==``.
    """

    n: int
    bags: tuple[frozenset[int], ...]
    edges: tuple[tuple[int, int], ...] = field(default=())

    def __post_init__(self):
        object.__setattr__(self, "bags", tuple(frozenset(b) for b in self.bags))
        object.__setattr__(
            self, "edges", tuple(sorted((min(i, j), max(i, j)) for i, j in self.edges))
        )

    @property
    def width(self) -> int:
        return max((len(b) for b in self.bags), default=0) - 1

    @classmethod
    def single_bag(cls, n: int, vertices: Iterable[int] | None = None) -> TreeDecomposition:
        return cls(n, (frozenset(range(n) if vertices is None else vertices),))


def _tree_check(k: int, edges: Sequence[tuple[int, int]]) -> str | None:
    if k == 0:
        return "decomposition has no bags"
    for i, j in edges:
        if not (0 <= i < k and 0 <= j < k) or i == j:
            return f"tree edge ({i}, {j}) is not between two distinct bags"
    if len(set(edges)) != len(edges):
        return "repeated tree edge"
    if len(edges) != k - 1:
        return f"{len(edges)} tree edges for {k} bags"
    parent = list(range(k))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for i, j in edges:
        ri, rj = find(i), find(j)
        if ri == rj:
            return f"tree edge ({i}, {j}) closes a cycle"
        parent[ri] = rj
    return None


def validate_tree_decomposition(g: Graph, td: TreeDecomposition) -> Verdict:
    """Check bag cover (a), edge cover (b), tree shape, and per-vertex connectivity (c)."""
    if td.n != g.n:
        return Verdict.failed("size", f"decomposition is for n={td.n}, graph has n={g.n}")
    for i, bag in enumerate(td.bags):
        bad = [v for v in bag if not 0 <= v < g.n]
        if bad:
            return Verdict.failed("size", f"bag {i} holds unknown vertex {bad[0]}")
    covered = set().union(*td.bags) if td.bags else set()
    missing = [v for v in range(g.n) if v not in covered]
    if missing:
        return Verdict.failed("(a)", f"vertex {missing[0]} lies in no bag")
    holders: dict[int, list[int]] = {}
    for i, bag in enumerate(td.bags):
        for v in bag:
            holders.setdefault(v, []).append(i)
    for u, v in g.edges():
        small, other = (u, v) if len(holders[u]) <= len(holders[v]) else (v, u)
        if not any(other in td.bags[i] for i in holders[small]):
            return Verdict.failed("(b)", f"edge ({u}, {v}) lies in no bag")
    problem = _tree_check(len(td.bags), td.edges)
    if problem:
        return Verdict.failed("tree", problem)
    nbrs: list[list[int]] = [[] for _ in td.bags]
    for i, j in td.edges:
        nbrs[i].append(j)
        nbrs[j].append(i)
    for v in sorted(holders):
        hold = set(holders[v])
        start = holders[v][0]
        seen = {start}
        stack = [start]
        while stack:
            i = stack.pop()
            for j in nbrs[i]:
                if j in hold and j not in seen:
                    seen.add(j)
                    stack.append(j)
        if seen != hold:
            stray = min(hold - seen)
            return Verdict.failed(
                "(c)", f"bags holding vertex {v} are disconnected (bag {start} cannot reach bag {stray})"
            )
    return Verdict.passed()


def td_from_bandwidth_labelling(g: Graph, sigma: Labelling, b: int) -> TreeDecomposition:
    """Path of windows ``{i, ..., i+b}`` over label positions; width exactly ``b``."""
    if not 0 <= b <= g.n - 1:
        raise ValueError(f"window size b={b} must lie in [0, n-1]")
    measured = bandwidth_of_labelling(g, sigma)
    if measured > b:
        raise ValueError(f"labelling has bandwidth {measured} > b={b}")
    order = sigma.order
    k = g.n - b
    bags = tuple(frozenset(order[i : i + b + 1]) for i in range(k))
    return TreeDecomposition(g.n, bags, tuple((i, i + 1) for i in range(k - 1)))


def td_from_elimination_order(g: Graph, order: Sequence[int]) -> TreeDecomposition:
    """Standard elimination-game decomposition; bag ``k`` belongs to ``order[k]``.

    Each bag is attached to the bag of its earliest-eliminated later neighbor,
    or to the next bag in order when it has none (keeps the tree connected).
    """
    n = g.n
    if sorted(order) != list(range(n)):
        raise ValueError("elimination order is not a permutation")
    if n == 0:
        return TreeDecomposition(0, (frozenset(),))
    rank = {v: k for k, v in enumerate(order)}
    fill = [set(a) for a in g.adj]
    bags = []
    edges = []
    for k, v in enumerate(order):
        later = {w for w in fill[v] if rank[w] > k}
        bags.append(frozenset(later | {v}))
        for a in later:
            fill[a] |= later - {a}
        if k < n - 1:
            parent = min((rank[w] for w in later), default=k + 1)
            edges.append((k, parent))
    return TreeDecomposition(n, tuple(bags), tuple(edges))


def min_degree_order(g: Graph) -> list[int]:
    """Greedy min-degree elimination (ties: lowest id); a comparison baseline only."""
    fill = [set(a) for a in g.adj]
    heap = [(len(fill[v]), v) for v in range(g.n)]
    heapq.heapify(heap)
    done = [False] * g.n
    order = []
    while heap:
        d, v = heapq.heappop(heap)
        if done[v] or d != len(fill[v]):
            continue  # stale entry
        nb = fill[v]
        for a in nb:
            fill[a] |= nb - {a}
            fill[a].discard(v)
            heapq.heappush(heap, (len(fill[a]), a))
        done[v] = True
        order.append(v)
    return order
