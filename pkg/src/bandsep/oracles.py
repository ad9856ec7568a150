"""Brute-force ground truth for bandwidth, treewidth, separation number and boundedness.

Every routine here is exponential and guarded by a size limit; exceeding it
raises ``SizeGuardError`` rather than falling back to anything approximate.
Vertex sets are int bitmasks internally.

Two reductions keep the enumerations finite, both about "subgraph" in the
definitions meaning any (not necessarily induced) subgraph:

* Separation number.  A separator of ``G[V']`` separates every spanning
  subgraph of ``G[V']`` too (fewer edges, same part sizes), so the maximum of
  the minimum separator size over all subgraphs is attained on induced ones.
* Boundedness.  If ``G' = (V', E')`` is an expander then so is ``G[V']``,
  because adding edges inside ``V'`` only enlarges every ``N(U)``.  Hence the
  largest expanding subgraph can be taken induced.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from .errors import SizeGuardError
from .graph import Graph, Labelling, components, degree_lower_bound, diameter, induced_subgraph, to_fraction
from .tdecomp import TreeDecomposition, td_from_elimination_order


def _guard(g: Graph, limit_n: int, what: str) -> None:
    if g.n > limit_n:
        raise SizeGuardError(f"{what}: n={g.n} exceeds size guard {limit_n}")
    if g.n == 0:
        raise ValueError(f"{what}: empty graph")


def _bits(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def _union_table(masks: tuple[int, ...]) -> list[int]:
    """``table[x]`` = OR of ``masks[v]`` over the bits ``v`` of ``x``."""
    table = [0] * (1 << len(masks))
    for x in range(1, len(table)):
        low = x & -x
        table[x] = table[x ^ low] | masks[low.bit_length() - 1]
    return table


# ------------------------------------------------------------------ bandwidth


def _bandwidth_lower_bound(g: Graph) -> int:
    lb = degree_lower_bound(g)
    for comp in components(g):
        if len(comp) > 1:
            sub, _ = induced_subgraph(g, comp)
            d = diameter(sub)
            lb = max(lb, -(-(len(comp) - 1) // d))
    return lb


def _layout_within(g: Graph, k: int) -> list[int] | None:
    """Depth-first placement of positions 1..n; returns an order of bandwidth <= k or None.

    Pruning: a placed vertex at position q with d unplaced neighbours needs
    d <= q + k - p free slots after position p.  Failed states are memoised on
    (placed set, last k placed vertices), which determines the future exactly.
    """
    n = g.n
    pos = [-1] * n
    open_count = [len(a) for a in g.adj]
    order: list[int] = []
    dead: set[tuple[int, tuple[int, ...]]] = set()

    def feasible_after(p: int) -> bool:
        lo = max(0, p - k + 1)
        for q in range(lo, p + 1):
            u = order[q]
            if open_count[u] > q + k - p:
                return False
        for q in range(0, lo):
            if open_count[order[q]]:
                return False
        return True

    def place(p: int, placed: int) -> bool:
        if p == n:
            return True
        key = (placed, tuple(order[max(0, p - k) :]))
        if key in dead:
            return False
        for v in range(n):
            if placed >> v & 1:
                continue
            if any(pos[u] >= 0 and pos[u] < p - k for u in g.adj[v]):
                continue
            pos[v] = p
            order.append(v)
            for u in g.adj[v]:
                open_count[u] -= 1
            if feasible_after(p) and place(p + 1, placed | 1 << v):
                return True
            for u in g.adj[v]:
                open_count[u] += 1
            order.pop()
            pos[v] = -1
        dead.add(key)
        return False

    return list(order) if place(0, 0) else None


def exact_bandwidth(g: Graph, limit_n: int = 12) -> tuple[int, Labelling]:
    """Minimum bandwidth over all labellings, with a witness achieving it.

    Edgeless graphs return 0 (the measured minimum); callers comparing against
    bounds that assume a positive bandwidth clamp to 1 themselves.
    """
    _guard(g, limit_n, "exact_bandwidth")
    if g.m == 0:
        return 0, Labelling.identity(g.n)
    for k in range(max(1, _bandwidth_lower_bound(g)), g.n):
        order = _layout_within(g, k)
        if order is not None:
            return k, Labelling.from_order(order)
    raise AssertionError("unreachable: bandwidth n-1 is always feasible")


# ------------------------------------------------------------------ treewidth


def _elimination_width_table(g: Graph) -> tuple[list[int], list[int]]:
    """TW(S) = min over v in S of max(TW(S - v), |Q(S - v, v)|), with TW(empty) = -1.

    Q(S, v) is the set of vertices outside S + v reachable from v through S.
    Returns the table and the argmin vertex per subset.
    """
    n = g.n
    masks = g.masks
    full = (1 << n) - 1
    tw = [-1] * (1 << n)
    choice = [-1] * (1 << n)
    for s in range(1, full + 1):
        best, arg = n + 1, -1
        for v in _bits(s):
            rest = s ^ (1 << v)
            prev = tw[rest]
            if prev >= best:
                continue
            allowed = s
            reach = frontier = 1 << v
            while frontier:
                grow = 0
                for u in _bits(frontier):
                    grow |= masks[u]
                frontier = grow & allowed & ~reach
                reach |= frontier
            nb = 0
            for u in _bits(reach):
                nb |= masks[u]
            q = (nb & ~allowed).bit_count()
            val = max(prev, q)
            if val < best:
                best, arg = val, v
        tw[s] = best
        choice[s] = arg
    return tw, choice


def exact_treewidth(g: Graph, limit_n: int = 12) -> tuple[int, TreeDecomposition]:
    """Treewidth via the subset recurrence, with a witness decomposition of that width."""
    _guard(g, limit_n, "exact_treewidth")
    tw, choice = _elimination_width_table(g)
    s = (1 << g.n) - 1
    late_first = []
    while s:
        v = choice[s]
        late_first.append(v)
        s ^= 1 << v
    td = td_from_elimination_order(g, late_first[::-1])
    return tw[(1 << g.n) - 1], td


# ---------------------------------------------------------- separation number


def _splits_two_thirds(masks: tuple[int, ...], rest: int, total: int) -> bool:
    """Can the components of G[rest] be grouped into two sides, each <= 2*total/3?"""
    sizes = []
    left = rest
    while left:
        low = left & -left
        comp = frontier = low
        while frontier:
            grow = 0
            for u in _bits(frontier):
                grow |= masks[u]
            frontier = grow & rest & ~comp
            comp |= frontier
        sizes.append(comp.bit_count())
        left &= ~comp
    cap = 2 * total // 3
    whole = sum(sizes)
    sums = 1
    for sz in sizes:
        sums |= sums << sz
    return any(sums >> t & 1 and whole - t <= cap for t in range(cap + 1))


def _min_separator_size(masks: tuple[int, ...], vmask: int) -> int:
    members = _bits(vmask)
    total = len(members)
    for k in range(total + 1):
        for s in combinations(members, k):
            smask = sum(1 << v for v in s)
            if _splits_two_thirds(masks, vmask & ~smask, total):
                return k
    raise AssertionError("unreachable: S = V' always separates")


def exact_separation_number(g: Graph, limit_n: int = 10) -> int:
    """max over induced subgraphs G[V'] of the least |S| of a (|S|, 2/3)-separator.

    Single-vertex subgraphs force the value to at least 1 on any nonempty graph.
    """
    _guard(g, limit_n, "exact_separation_number")
    best = 0
    for vmask in range(1, 1 << g.n):
        best = max(best, _min_separator_size(g.masks, vmask))
    return best


# ------------------------------------------------------------------ expansion


def _expansion_violation(table: list[int] | None, masks, vmask: int, eps: Fraction) -> int | None:
    """Smallest-first search for U within vmask with |U| <= |V'|/2 and |N(U)| < eps|U|."""
    members = _bits(vmask)
    num, den = eps.numerator, eps.denominator
    for k in range(1, len(members) // 2 + 1):
        for u in combinations(members, k):
            umask = sum(1 << v for v in u)
            if table is not None:
                nb = table[umask]
            else:
                nb = 0
                for v in u:
                    nb |= masks[v]
            if (nb & vmask & ~umask).bit_count() * den < num * k:
                return umask
    return None


def is_epsilon_expander(g: Graph, eps, limit_n: int = 20) -> tuple[bool, frozenset[int] | None]:
    """Exhaustive check of every nonempty U with |U| <= n/2; returns a violating U if any."""
    eps = to_fraction(eps)
    if eps <= 0:
        raise ValueError("eps must be positive")
    _guard(g, limit_n, "is_epsilon_expander")
    table = _union_table(g.masks) if g.n <= 16 else None
    bad = _expansion_violation(table, g.masks, (1 << g.n) - 1, eps)
    return (True, None) if bad is None else (False, frozenset(_bits(bad)))


@dataclass(frozen=True)
class BoundednessResult:
    value: int
    expander: frozenset[int]  # a largest induced expander; empty only for n = 0


def exact_boundedness(g: Graph, eps, limit_n: int = 14) -> BoundednessResult:
    """Largest |V'| with G[V'] an eps-expander.  A single vertex is vacuously one."""
    eps = to_fraction(eps)
    if eps <= 0:
        raise ValueError("eps must be positive")
    _guard(g, limit_n, "exact_boundedness")
    table = _union_table(g.masks)
    for size in range(g.n, 0, -1):
        for vs in combinations(range(g.n), size):
            vmask = sum(1 << v for v in vs)
            if _expansion_violation(table, g.masks, vmask, eps) is None:
                return BoundednessResult(size, frozenset(vs))
    raise AssertionError("unreachable: single vertices are expanders")
