"""Balanced vertex separators: the certificate, its validator, and the finders.

A separator ``(S, A, B)`` of ``g`` with balance ``alpha`` partitions the vertex
set, keeps ``|A|, |B| <= alpha*n`` and has no edge between ``A`` and ``B``.
Every finder validates its output before returning it.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Callable

from .errors import CertificateError, ExpanderFound, SeparatorNotFound, SizeGuardError, Verdict
from .expansion import EXHAUSTIVE_ABSENCE, Finder, check_nonexpanding, make_finder
from .graph import (
    Graph,
    bfs_layers,
    components,
    induced_subgraph,
    is_connected,
    is_forest,
    neighborhood,
    to_fraction,
)
from .spectral import fiedler_vector, sweep_order
from .tdecomp import TreeDecomposition, validate_tree_decomposition

TWO_THIRDS = Fraction(2, 3)


@dataclass(frozen=True)
class Separator:
    S: frozenset[int]
    A: frozenset[int]
    B: frozenset[int]
    alpha: Fraction = TWO_THIRDS
    source: str = "exact"

    @property
    def size(self) -> int:
        return len(self.S)

    def relabel(self, ids: tuple[int, ...]) -> Separator:
        """Translate from induced-subgraph ids back to the parent graph's ids."""
        return Separator(
            frozenset(ids[v] for v in self.S),
            frozenset(ids[v] for v in self.A),
            frozenset(ids[v] for v in self.B),
            self.alpha,
            self.source,
        )


def validate_separator(g: Graph, sep: Separator, s_max: int | None = None) -> Verdict:
    alpha = Fraction(sep.alpha)
    if not Fraction(1, 2) <= alpha < 1:
        return Verdict.failed("alpha", f"alpha={alpha} outside [1/2, 1)")
    parts = (sep.S, sep.A, sep.B)
    if any(v < 0 or v >= g.n for p in parts for v in p):
        return Verdict.failed("(a)", "a part names a vertex outside the graph")
    if sep.S & sep.A or sep.S & sep.B or sep.A & sep.B:
        return Verdict.failed("(a)", "S, A, B are not pairwise disjoint")
    if len(sep.S) + len(sep.A) + len(sep.B) != g.n:
        missing = min(set(range(g.n)) - sep.S - sep.A - sep.B)
        return Verdict.failed("(a)", f"vertex {missing} is in no part")
    if s_max is not None and len(sep.S) > s_max:
        return Verdict.failed("(b)", f"|S|={len(sep.S)} exceeds budget {s_max}")
    for name, side in (("A", sep.A), ("B", sep.B)):
        if len(side) > alpha * g.n:
            return Verdict.failed("(b)", f"|{name}|={len(side)} > {alpha}*{g.n}")
    for u in sorted(sep.A):
        for w in g.adj[u]:
            if w in sep.B:
                return Verdict.failed("(c)", f"edge ({u}, {w}) joins A and B")
    return Verdict.passed()


def _certified(g: Graph, sep: Separator, s_max: int | None = None) -> Separator:
    verdict = validate_separator(g, sep, s_max)
    if not verdict:
        raise CertificateError(f"{sep.source} separator invalid: {verdict.condition} {verdict.detail}")
    return sep


def _greedy_sides(comps: list[list[int]]) -> tuple[set[int], set[int]]:
    """Largest component first, each into the currently smaller side (ties: side A)."""
    a: set[int] = set()
    b: set[int] = set()
    for comp in sorted(comps, key=lambda c: (-len(c), c[0])):
        (a if len(a) <= len(b) else b).update(comp)
    return a, b


def _fits(size: int, alpha: Fraction, n: int) -> bool:
    return size <= alpha * n


def _empty_separator(g: Graph, alpha: Fraction, source: str) -> Separator | None:
    """S = {} if the components already group into two balanced sides."""
    if g.n == 0:
        return None
    a, b = _greedy_sides(components(g))
    if _fits(len(a), alpha, g.n) and _fits(len(b), alpha, g.n):
        return Separator(frozenset(), frozenset(a), frozenset(b), alpha, source)
    return None


# --------------------------------------------------------------------- exact


def _exact_grouping(sizes: list[int], lo: int, hi: int) -> list[int] | None:
    """Indices of a subset with sum in [lo, hi], as balanced as possible; None if none."""
    reach: dict[int, list[int]] = {0: []}
    for i, sz in enumerate(sizes):
        for t, picked in list(reach.items()):
            if t + sz not in reach:
                reach[t + sz] = picked + [i]
    total = sum(sizes)
    ok = [t for t in reach if lo <= t <= hi]
    if not ok:
        return None
    best = min(ok, key=lambda t: (abs(2 * t - total), t))
    return reach[best]


def find_separator_exact(g: Graph, alpha=TWO_THIRDS, limit_n: int = 16) -> Separator:
    """Minimum |S| over all (S, A, B); ties broken by the lexicographically smallest S."""
    alpha = to_fraction(alpha)
    if g.n > limit_n:
        raise SizeGuardError(f"find_separator_exact: n={g.n} exceeds size guard {limit_n}")
    if g.n == 0:
        raise ValueError("empty graph")
    cap = math.floor(alpha * g.n)
    for k in range(g.n + 1):
        for s in combinations(range(g.n), k):
            rest = set(range(g.n)) - set(s)
            comps = components(g, rest) if rest else []
            sizes = [len(c) for c in comps]
            picked = _exact_grouping(sizes, len(rest) - cap, cap)
            if picked is None:
                continue
            a = frozenset(v for i in picked for v in comps[i])
            sep = Separator(frozenset(s), a, frozenset(rest) - a, alpha, "exact")
            return _certified(g, sep)
    raise AssertionError("unreachable: S = V always separates")


# ----------------------------------------------------------------- bfs layer


def find_separator_bfs_layer(g: Graph, alpha=TWO_THIRDS) -> Separator:
    """Smallest BFS layer whose removal leaves two nonempty balanced sides.

    The root is the lowest-id vertex of minimum degree.  Ties between layers
    of equal size go to the more balanced split, then to the shallower layer.
    """
    alpha = to_fraction(alpha)
    if not is_connected(g):
        raise ValueError("bfs-layer separator needs a connected graph")
    root = min(range(g.n), key=lambda v: (g.degree(v), v))
    layers = bfs_layers(g, root)
    best = None
    for i, layer in enumerate(layers):
        rest = set(range(g.n)) - set(layer)
        a, b = _greedy_sides(components(g, rest))
        if not a or not b or not (_fits(len(a), alpha, g.n) and _fits(len(b), alpha, g.n)):
            continue
        key = (len(layer), max(len(a), len(b)), i)
        if best is None or key < best[0]:
            best = (key, Separator(frozenset(layer), frozenset(a), frozenset(b), alpha, "bfs_layer"))
    if best is None:
        raise SeparatorNotFound("no BFS layer yields a balanced split", {"root": root, "layers": len(layers)})
    return _certified(g, best[1])


# ------------------------------------------------------------------ spectral


def find_separator_spectral(g: Graph, alpha=TWO_THIRDS, iterations: int = 20000, tolerance: float = 1e-6, seed: int = 0) -> Separator:
    """Sweep cut over an approximate Fiedler vector.

    Each prefix/suffix split is turned into (S, A, B) by moving the boundary of
    the smaller side into S.  The candidate with the fewest separator vertices
    wins (then better balance, then shorter prefix).
    """
    alpha = to_fraction(alpha)
    if g.n < 3:
        raise ValueError("spectral separator needs at least 3 vertices")
    if not is_connected(g):
        raise ValueError("spectral separator needs a connected graph")
    fied = fiedler_vector(g, iterations=iterations, tolerance=tolerance, seed=seed)
    if not fied.converged:
        raise SeparatorNotFound("power iteration did not converge", fied.diagnostics())
    order = sweep_order(fied.vector)
    n = g.n
    inside = [False] * n
    hits = [0] * n  # neighbours inside the prefix
    bd_in = 0  # prefix vertices with a neighbour outside
    bd_out = 0  # outside vertices with a neighbour inside
    best = None
    for k, v in enumerate(order[:-1], start=1):
        if hits[v]:
            bd_out -= 1
        if hits[v] < g.degree(v):
            bd_in += 1
        inside[v] = True
        for u in g.adj[v]:
            if inside[u]:
                if hits[u] == g.degree(u) - 1:
                    bd_in -= 1
            elif hits[u] == 0:
                bd_out += 1
            hits[u] += 1
        small, large = (k, n - k) if k <= n - k else (n - k, k)
        s_size = bd_in if k <= n - k else bd_out
        if not _fits(large, alpha, n) or not _fits(small - s_size, alpha, n):
            continue
        key = (s_size, large, k)
        if best is None or key < best:
            best = key
    if best is None:
        raise SeparatorNotFound("no sweep prefix yields a balanced split", fied.diagnostics())
    k = best[2]
    prefix = set(order[:k])
    suffix = set(order[k:])
    small, large = (prefix, suffix) if k <= n - k else (suffix, prefix)
    s = {v for v in small if any(u in large for u in g.adj[v])}
    return _certified(g, Separator(frozenset(s), frozenset(small - s), frozenset(large), alpha, "spectral"))


# ------------------------------------------------------------------ centroid


def find_separator_centroid(g: Graph, alpha=TWO_THIRDS) -> Separator:
    """One-vertex separator of a forest: the centroid of its largest tree."""
    alpha = to_fraction(alpha)
    if not is_forest(g):
        raise ValueError("centroid separator needs a forest")
    empty = _empty_separator(g, alpha, "centroid")
    if empty is not None:
        return empty
    comps = components(g)
    big = max(comps, key=lambda c: (len(c), -c[0]))
    root = big[0]
    parent = {root: -1}
    order = [root]
    for u in order:
        for w in g.adj[u]:
            if w not in parent:
                parent[w] = u
                order.append(w)
    sub = {v: 1 for v in big}
    for u in reversed(order[1:]):
        sub[parent[u]] += sub[u]
    total = len(big)

    def heaviest_piece(v: int) -> int:
        pieces = [sub[w] for w in g.adj[v] if parent.get(w) == v]
        pieces.append(total - sub[v])
        return max(pieces)

    c = min(big, key=lambda v: (heaviest_piece(v), v))
    a, b = _greedy_sides(components(g, set(range(g.n)) - {c}))
    sep = Separator(frozenset([c]), frozenset(a), frozenset(b), alpha, "centroid")
    if not validate_separator(g, sep):
        raise SeparatorNotFound("centroid split is not balanced", {"centroid": c})
    return sep


# ------------------------------------------------------- from non-expansion


def separator_from_nonexpanding(g: Graph, eps, finder: Finder | None = None) -> Separator:
    """Peel non-expanding sets until fewer than 2n/3 vertices remain.

    Round i takes W_i in G_i = G[V_i] with |W_i| <= |V_i|/2 and
    |N(W_i)| <= eps|W_i|, moves W_i to A and its neighbourhood to S.  The
    result has |S| <= (2/3)eps*n, |A| <= 2n/3, |B| < 2n/3 whenever the
    finder succeeds on every G_i it is handed.
    """
    eps = to_fraction(eps)
    if eps <= 0:
        raise ValueError("eps must be positive")
    if g.n == 0:
        raise ValueError("empty graph")
    finder = finder or make_finder("exact")
    n = g.n
    current = set(range(n))
    a: set[int] = set()
    s: set[int] = set()
    while True:
        sub, ids = induced_subgraph(g, current)
        wit = finder(sub, eps)
        if wit is None or wit.kind == EXHAUSTIVE_ABSENCE:
            raise ExpanderFound(current, proven=wit is not None)
        if not check_nonexpanding(sub, wit.vertices, eps):
            raise CertificateError("finder returned a set violating the non-expansion inequalities")
        w = {ids[v] for v in wit.vertices}
        nb = neighborhood(g, w, within=current)
        a |= w
        s |= nb
        current -= w | nb
        if 3 * len(current) < 2 * n:
            break
    sep = Separator(frozenset(s), frozenset(a), frozenset(current), TWO_THIRDS, "from_expansion")
    _certified(g, sep)
    if 3 * len(s) > 2 * eps * n or 3 * len(a) > 2 * n or 3 * len(current) >= 2 * n:
        raise CertificateError("peeling construction exceeded its size guarantees")
    return sep


# ------------------------------------------------ from a tree decomposition


def separator_from_tree_decomposition(g: Graph, td: TreeDecomposition) -> Separator:
    """A bag whose removal leaves components of at most n/2 vertices, grouped 2/3-balanced.

    Such a bag exists in every tree decomposition.  Vertices of the bag that
    can join a side without breaking balance or separation are moved out of S.
    """
    verdict = validate_tree_decomposition(g, td)
    if not verdict:
        raise ValueError(f"invalid tree decomposition: {verdict.condition} {verdict.detail}")
    empty = _empty_separator(g, TWO_THIRDS, "from_td")
    if empty is not None:
        return empty
    n = g.n
    for bag in td.bags:
        rest = set(range(n)) - bag
        comps = components(g, rest)
        if any(2 * len(c) > n for c in comps):
            continue
        a, b = _greedy_sides(comps)
        s = set(bag)
        for v in sorted(bag):
            nbrs = set(g.adj[v])
            for side, other in ((a, b), (b, a)):
                if not nbrs & other and 3 * (len(side) + 1) <= 2 * n:
                    side.add(v)
                    s.discard(v)
                    break
        return _certified(g, Separator(frozenset(s), frozenset(a), frozenset(b), TWO_THIRDS, "from_td"))
    raise CertificateError("no central bag found; the decomposition cannot be valid")


# --------------------------------------------------------------- providers


@dataclass(frozen=True)
class SeparatorProvider:
    """A separator strategy with a declared budget on |S|."""

    name: str
    find: Callable[[Graph, Fraction], Separator]
    s_max: int | None = None

    def __call__(self, g: Graph, alpha=TWO_THIRDS) -> Separator:
        sep = self.find(g, to_fraction(alpha))
        if self.s_max is not None and sep.size > self.s_max:
            raise SeparatorNotFound(
                f"{self.name} separator has {sep.size} vertices, budget is {self.s_max}",
                {"size": sep.size, "budget": self.s_max},
            )
        return _certified(g, sep)

    def with_budget(self, s_max: int | None) -> SeparatorProvider:
        return SeparatorProvider(self.name, self.find, s_max)


def _auto(g: Graph, alpha: Fraction) -> Separator:
    empty = _empty_separator(g, alpha, "auto")
    if empty is not None:
        return empty
    if is_forest(g):
        return find_separator_centroid(g, alpha)
    if g.n <= 12:
        return find_separator_exact(g, alpha)
    if not is_connected(g):
        # separate the largest component and keep the rest on the lighter side
        big = max(components(g), key=len)
        sub, ids = induced_subgraph(g, big)
        inner = _auto(sub, alpha).relabel(ids)
        others = set(range(g.n)) - set(big)
        a, b = set(inner.A), set(inner.B)
        (a if len(a) <= len(b) else b).update(others)
        sep = Separator(inner.S, frozenset(a), frozenset(b), alpha, inner.source)
        if not validate_separator(g, sep):
            raise SeparatorNotFound("largest-component split does not balance the whole graph")
        return sep
    try:
        return find_separator_bfs_layer(g, alpha)
    except SeparatorNotFound:
        return find_separator_spectral(g, alpha)


PROVIDERS = {
    "exact": find_separator_exact,
    "bfs": find_separator_bfs_layer,
    "spectral": find_separator_spectral,
    "centroid": find_separator_centroid,
    "auto": _auto,
}


def provider(name: str, s_max: int | None = None) -> SeparatorProvider:
    if name not in PROVIDERS:
        raise ValueError(f"unknown provider {name!r}; choose from {', '.join(PROVIDERS)}")
    return SeparatorProvider(name, PROVIDERS[name], s_max)


# ------------------------------------------------------------ bound formulas


def separator_bound_genus(n: int, genus: int) -> float:
    """6*sqrt(g*n) + 2*sqrt(2n)."""
    if n < 1 or genus < 0:
        raise ValueError("need n >= 1 and genus >= 0")
    return 6 * math.sqrt(genus * n) + 2 * math.sqrt(2 * n)


def separator_bound_minor(n: int, h: int) -> float:
    """h^(3/2) * sqrt(n) for graphs without a minor on h vertices."""
    if n < 1 or h < 1:
        raise ValueError("need n >= 1 and h >= 1")
    return h**1.5 * math.sqrt(n)

