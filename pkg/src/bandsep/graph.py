"""Undirected simple graphs on dense ids, labellings, and test-instance generators.

Vertices are ``0..n-1``.  Graphs are immutable once built; the adjacency
bitmasks used by the exact oracles are computed lazily and cached.
"""

from __future__ import annotations

import math
import random
from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

UNREACHABLE = math.inf


class Graph:
    __slots__ = ("n", "adj", "_masks", "_m")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 0:
            raise ValueError("vertex count must be nonnegative")
        nbrs: list[set[int]] = [set() for _ in range(n)]
        m = 0
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"self-loop at {u}")
            if v in nbrs[u]:
                raise ValueError(f"parallel edge ({u}, {v})")
            nbrs[u].add(v)
            nbrs[v].add(u)
            m += 1
        self.n = n
        self.adj: tuple[tuple[int, ...], ...] = tuple(tuple(sorted(s)) for s in nbrs)
        self._m = m
        self._masks: tuple[int, ...] | None = None

    @classmethod
    def from_adjacency(cls, adjacency: Sequence[Iterable[int]]) -> Graph:
        """Build from a symmetric neighbor list; asymmetry is an error."""
        adjacency = [set(a) for a in adjacency]
        edges = []
        for u, a in enumerate(adjacency):
            for v in a:
                if u == v:
                    raise ValueError(f"self-loop at {u}")
                if not 0 <= v < len(adjacency) or u not in adjacency[v]:
                    raise ValueError(f"adjacency not symmetric at ({u}, {v})")
                if u < v:
                    edges.append((u, v))
        return cls(len(adjacency), edges)

    @property
    def m(self) -> int:
        return self._m

    @property
    def max_degree(self) -> int:
        return max((len(a) for a in self.adj), default=0)

    @property
    def masks(self) -> tuple[int, ...]:
        if self._masks is None:
            self._masks = tuple(sum(1 << v for v in a) for a in self.adj)
        return self._masks

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def edges(self) -> list[tuple[int, int]]:
        """All edges as ``(u, v)`` with ``u < v``, sorted."""
        return [(u, v) for u in range(self.n) for v in self.adj[u] if u < v]

    def has_edge(self, u: int, v: int) -> bool:
        return (self.masks[u] >> v) & 1 == 1

    def __eq__(self, other) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self.adj == other.adj

    def __hash__(self) -> int:
        return hash((self.n, self.adj))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m}, max_degree={self.max_degree})"


@dataclass(frozen=True)
class Labelling:
    """``position[v]`` is the label of vertex ``v`` in ``1..n``."""

    position: tuple[int, ...]

    def __post_init__(self):
        n = len(self.position)
        if sorted(self.position) != list(range(1, n + 1)):
            raise ValueError("labelling is not a bijection onto 1..n")

    @classmethod
    def from_order(cls, order: Sequence[int]) -> Labelling:
        """``order[k]`` is the vertex receiving label ``k + 1``."""
        n = len(order)
        pos = [0] * n
        for k, v in enumerate(order):
            if not 0 <= v < n or pos[v]:
                raise ValueError("order is not a permutation of 0..n-1")
            pos[v] = k + 1
        return cls(tuple(pos))

    @classmethod
    def identity(cls, n: int) -> Labelling:
        return cls(tuple(range(1, n + 1)))

    @property
    def order(self) -> tuple[int, ...]:
        out = [0] * len(self.position)
        for v, p in enumerate(self.position):
            out[p - 1] = v
        return tuple(out)

    def __len__(self) -> int:
        return len(self.position)


def bandwidth_of_labelling(g: Graph, sigma: Labelling) -> int:
    if len(sigma) != g.n:
        raise ValueError(f"labelling has length {len(sigma)}, graph has {g.n} vertices")
    pos = sigma.position
    return max((abs(pos[u] - pos[v]) for u, v in g.edges()), default=0)


def degree_lower_bound(g: Graph) -> int:
    return (g.max_degree + 1) // 2


def multi_source_distances(g: Graph, sources: Iterable[int]) -> list[float]:
    """BFS distance to the nearest source; ``UNREACHABLE`` where there is none."""
    dist: list[float] = [UNREACHABLE] * g.n
    queue = deque()
    for s in sources:
        if dist[s] != 0:
            dist[s] = 0
            queue.append(s)
    while queue:
        u = queue.popleft()
        du = dist[u] + 1
        for w in g.adj[u]:
            if dist[w] == UNREACHABLE:
                dist[w] = du
                queue.append(w)
    return dist


def bfs_layers(g: Graph, root: int) -> list[list[int]]:
    """Distance layers from ``root`` within its component, each sorted."""
    dist = multi_source_distances(g, [root])
    depth = max(int(d) for d in dist if d != UNREACHABLE)
    layers: list[list[int]] = [[] for _ in range(depth + 1)]
    for v, d in enumerate(dist):
        if d != UNREACHABLE:
            layers[int(d)].append(v)
    return layers


def components(g: Graph, within: Iterable[int] | None = None) -> list[list[int]]:
    """Connected components of ``g`` (or of ``g[within]``), ordered by least vertex."""
    allowed = set(range(g.n)) if within is None else set(within)
    seen: set[int] = set()
    out = []
    for s in sorted(allowed):
        if s in seen:
            continue
        seen.add(s)
        comp = [s]
        stack = [s]
        while stack:
            u = stack.pop()
            for w in g.adj[u]:
                if w in allowed and w not in seen:
                    seen.add(w)
                    comp.append(w)
                    stack.append(w)
        out.append(sorted(comp))
    return out


def is_connected(g: Graph) -> bool:
    return g.n > 0 and len(components(g)) == 1


def eccentricity(g: Graph, v: int) -> int:
    dist = multi_source_distances(g, [v])
    if UNREACHABLE in dist:
        raise ValueError("eccentricity is undefined in a disconnected graph")
    return int(max(dist))


def diameter(g: Graph) -> int:
    if not is_connected(g):
        raise ValueError("diameter is undefined for a disconnected graph")
    if is_forest(g):
        # double sweep is exact on trees
        dist = multi_source_distances(g, [0])
        far = max(range(g.n), key=lambda v: (dist[v], -v))
        return eccentricity(g, far)
    return max(eccentricity(g, v) for v in range(g.n))


def diameter_lower_bound(g: Graph) -> Fraction:
    """``(n-1)/diam`` as an exact rational; 0 for a single vertex."""
    d = diameter(g)
    return Fraction(0) if d == 0 else Fraction(g.n - 1, d)


def neighborhood(g: Graph, u_set: Iterable[int], within: Iterable[int] | None = None) -> set[int]:
    """Outside neighbors of ``u_set``, optionally restricted to ``within``."""
    u_set = set(u_set)
    out = {w for u in u_set for w in g.adj[u]} - u_set
    return out if within is None else out & set(within)


def induced_subgraph(g: Graph, s: Iterable[int]) -> tuple[Graph, tuple[int, ...]]:
    """Return ``(g[s], ids)`` where ``ids[new] == original`` (ascending)."""
    ids = tuple(sorted(set(s)))
    if not ids:
        raise ValueError("induced subgraph of an empty vertex set")
    index = {v: i for i, v in enumerate(ids)}
    edges = [(index[u], index[v]) for u in ids for v in g.adj[u] if v in index and u < v]
    return Graph(len(ids), edges), ids


def is_forest(g: Graph) -> bool:
    return g.m == g.n - len(components(g))


# ---------------------------------------------------------------- generators

FAMILIES = (
    "path",
    "cycle",
    "complete",
    "star",
    "grid",
    "complete_binary_tree",
    "random_bounded_degree",
    "random_bipartite_bounded_degree",
    "random_near_planar",
)


def path(n: int) -> Graph:
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n: int) -> Graph:
    return Graph(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def star(k: int) -> Graph:
    """K_{1,k} with centre 0."""
    return Graph(k + 1, [(0, i) for i in range(1, k + 1)])


def grid(k: int, cols: int | None = None) -> Graph:
    cols = k if cols is None else cols
    edges = []
    for r in range(k):
        for c in range(cols):
            v = r * cols + c
            if c + 1 < cols:
                edges.append((v, v + 1))
            if r + 1 < k:
                edges.append((v, v + cols))
    return Graph(k * cols, edges)


def complete_binary_tree(depth: int) -> Graph:
    n = 2 ** (depth + 1) - 1
    return Graph(n, [((v - 1) // 2, v) for v in range(1, n)])


def _pair_stubs(stubs_a: list[int], stubs_b: list[int], rng: random.Random) -> list[tuple[int, int]]:
    rng.shuffle(stubs_a)
    rng.shuffle(stubs_b)
    edges = set()
    for u, v in zip(stubs_a, stubs_b):
        if u != v:
            edges.add((min(u, v), max(u, v)))
    return sorted(edges)


def random_bounded_degree(n: int, degree: int, seed: int = 0) -> Graph:
    """Configuration-model pairing with loops and repeats dropped (max degree <= ``degree``)."""
    if degree < 1:
        raise ValueError("degree bound must be at least 1")
    if n * degree % 2:
        raise ValueError(f"n*degree = {n * degree} is odd; stubs cannot be paired")
    if degree >= n:
        raise ValueError("degree bound must be below n")
    rng = random.Random(seed)
    stubs = [v for v in range(n) for _ in range(degree)]
    rng.shuffle(stubs)
    half = len(stubs) // 2
    return Graph(n, _pair_stubs(stubs[:half], stubs[half:], rng))


def random_bipartite_bounded_degree(n: int, degree: int, seed: int = 0) -> Graph:
    """Sides ``0..ceil(n/2)-1`` and the rest; every vertex has degree <= ``degree``."""
    if degree < 1:
        raise ValueError("degree bound must be at least 1")
    if n < 2:
        raise ValueError("need at least 2 vertices")
    rng = random.Random(seed)
    left = list(range((n + 1) // 2))
    right = list(range((n + 1) // 2, n))
    if degree > len(right):
        raise ValueError("degree bound exceeds the smaller side")
    stubs_l = [v for v in left for _ in range(degree)]
    stubs_r = [v for v in right for _ in range(degree)]
    k = min(len(stubs_l), len(stubs_r))
    rng.shuffle(stubs_l)
    rng.shuffle(stubs_r)
    return Graph(n, _pair_stubs(stubs_l[:k], stubs_r[:k], rng))


def random_near_planar(k: int, seed: int = 0, p: float = 0.5) -> Graph:
    """k x k grid; each face independently gets one random diagonal with probability ``p``."""
    rng = random.Random(seed)
    edges = grid(k).edges()
    for r in range(k - 1):
        for c in range(k - 1):
            if rng.random() < p:
                v = r * k + c
                if rng.random() < 0.5:
                    edges.append((v, v + k + 1))
                else:
                    edges.append((v + 1, v + k))
    return Graph(k * k, edges)


def generate(family: str, seed: int = 0, **params) -> Graph:
    """Dispatch to a generator by family name; random families honour ``seed``."""
    if family not in FAMILIES:
        raise ValueError(f"unknown family {family!r}; choose from {', '.join(FAMILIES)}")
    try:
        if family == "path":
            return path(params["n"])
        if family == "cycle":
            return cycle(params["n"])
        if family == "complete":
            return complete(params["n"])
        if family == "star":
            return star(params["k"])
        if family == "grid":
            return grid(params["k"], params.get("cols"))
        if family == "complete_binary_tree":
            return complete_binary_tree(params["depth"])
        if family == "random_bounded_degree":
            return random_bounded_degree(params["n"], params["degree"], seed)
        if family == "random_bipartite_bounded_degree":
            return random_bipartite_bounded_degree(params["n"], params["degree"], seed)
        return random_near_planar(params["k"], seed, params.get("p", 0.5))
    except KeyError as exc:
        raise ValueError(f"family {family!r} needs parameter {exc.args[0]!r}") from None


def to_fraction(x) -> Fraction:
    """Exact rational from an int, Fraction, ``"p/q"`` string, or decimal float."""
    if isinstance(x, float):
        return Fraction(repr(x))
    return Fraction(x)
