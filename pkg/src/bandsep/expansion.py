"""Non-expanding set search and two-sided estimates of eps-boundedness.

Only exhaustive search may claim that a graph expands.  The sweep heuristic
either returns a re-checked witness or nothing.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Callable

from .bounds import boundedness_from_bandwidth_sound
from .errors import CertificateError, SizeGuardError
from .graph import Graph, induced_subgraph, neighborhood, to_fraction
from .oracles import _union_table, exact_boundedness, is_epsilon_expander
from .spectral import fiedler_vector, sweep_order

EXPANDER_SUBGRAPH = "expander_subgraph"
NONEXPANDING_SET = "nonexpanding_set"
EXHAUSTIVE_ABSENCE = "exhaustive_absence"


@dataclass(frozen=True)
class ExpansionWitness:
    kind: str
    vertices: frozenset[int]
    eps: Fraction
    boundary: frozenset[int] = frozenset()

    @property
    def ratio(self) -> Fraction | None:
        if self.kind != NONEXPANDING_SET:
            return None
        return Fraction(len(self.boundary), len(self.vertices))


def check_nonexpanding(g: Graph, w, eps) -> bool:
    """Exact test of the defining inequalities: 0 < |W| <= n/2 and |N(W)| <= eps|W|."""
    w = set(w)
    eps = to_fraction(eps)
    return 0 < len(w) and 2 * len(w) <= g.n and len(neighborhood(g, w)) <= eps * len(w)


def _exact_search(g: Graph, eps: Fraction, limit_n: int) -> ExpansionWitness:
    if g.n > limit_n:
        raise SizeGuardError(f"nonexpanding_set: n={g.n} exceeds size guard {limit_n}")
    masks = g.masks
    table = _union_table(masks) if g.n <= 16 else None
    full = (1 << g.n) - 1
    num, den = eps.numerator, eps.denominator
    for k in range(g.n // 2, 0, -1):
        for w in combinations(range(g.n), k):
            wmask = sum(1 << v for v in w)
            if table is not None:
                nb = table[wmask]
            else:
                nb = 0
                for v in w:
                    nb |= masks[v]
            if (nb & full & ~wmask).bit_count() * den <= num * k:
                ws = frozenset(w)
                return ExpansionWitness(NONEXPANDING_SET, ws, eps, frozenset(neighborhood(g, ws)))
    return ExpansionWitness(EXHAUSTIVE_ABSENCE, frozenset(range(g.n)), eps)


def _sweep_search(g: Graph, eps: Fraction, seed: int, iterations: int) -> ExpansionWitness | None:
    if g.n < 2:
        return None
    order = sweep_order(fiedler_vector(g, iterations=iterations, seed=seed).vector)
    best: tuple[int, list[int]] | None = None
    for direction in (order, order[::-1]):
        inside = [False] * g.n
        hits = [0] * g.n
        boundary = 0
        for k, v in enumerate(direction[: g.n // 2], start=1):
            if hits[v]:
                boundary -= 1
            inside[v] = True
            for u in g.adj[v]:
                if not inside[u] and hits[u] == 0:
                    boundary += 1
                hits[u] += 1
            if boundary <= eps * k and (best is None or k > best[0]):
                best = (k, direction[:k])
    if best is None:
        return None
    ws = frozenset(best[1])
    nb = frozenset(neighborhood(g, ws))
    if not check_nonexpanding(g, ws, eps):
        raise CertificateError("sweep produced a set that fails the non-expansion test")
    return ExpansionWitness(NONEXPANDING_SET, ws, eps, nb)


def nonexpanding_set(
    g: Graph, eps, mode: str = "exact", limit_n: int = 20, seed: int = 0, iterations: int = 5000
) -> ExpansionWitness | None:
    """Find W with |W| <= n/2 and |N(W)| <= eps|W|.

    ``exact`` searches sizes from n/2 downwards and returns the first hit, or an
    ``exhaustive_absence`` witness proving that ``g`` is an eps-expander.
    ``sweep`` scans prefixes of an approximate Fiedler ordering (both ends),
    returns the largest qualifying prefix, or ``None``.
    """
    eps = to_fraction(eps)
    if eps <= 0:
        raise ValueError("eps must be positive")
    if mode == "exact":
        return _exact_search(g, eps, limit_n)
    if mode == "sweep":
        return _sweep_search(g, eps, seed, iterations)
    raise ValueError(f"unknown mode {mode!r}")


Finder = Callable[[Graph, Fraction], "ExpansionWitness | None"]


def make_finder(mode: str = "auto", exact_limit: int = 14, seed: int = 0, guard: int = 20) -> Finder:
    """A non-expanding set strategy: ``exact``, ``sweep``, or ``auto`` (exact up to ``exact_limit``).

    ``guard`` is the size limit of the ``exact`` mode.
    """
    if mode not in ("exact", "sweep", "auto"):
        raise ValueError(f"unknown finder mode {mode!r}")

    def find(g: Graph, eps: Fraction) -> ExpansionWitness | None:
        if mode == "exact":
            return nonexpanding_set(g, eps, "exact", limit_n=guard)
        if mode == "auto" and g.n <= exact_limit:
            return nonexpanding_set(g, eps, "exact", limit_n=exact_limit)
        return nonexpanding_set(g, eps, "sweep", seed=seed)

    find.mode = mode
    return find


# --------------------------------------------------------------- boundedness


@dataclass(frozen=True)
class BoundednessBounds:
    lower: int
    lower_witness: ExpansionWitness | None
    upper: int
    upper_source: str


def _grow_expanders(g: Graph, eps: Fraction, seeds: int, max_size: int) -> frozenset[int]:
    """Greedy growth from high-degree seeds; keeps the largest exactly verified expander."""
    best = frozenset([0]) if g.n else frozenset()
    starts = sorted(range(g.n), key=lambda v: (-g.degree(v), v))[:seeds]
    for s in starts:
        cur = {s}
        while len(cur) < min(max_size, g.n):
            cand = neighborhood(g, cur)
            if not cand:
                break
            v = max(sorted(cand), key=lambda x: sum(1 for y in g.adj[x] if y in cur))
            cur.add(v)
            if len(cur) > len(best):
                sub, _ = induced_subgraph(g, cur)
                if is_epsilon_expander(sub, eps)[0]:
                    best = frozenset(cur)
    return best


def boundedness_bounds(
    g: Graph, eps, bdw_upper: int | None = None, exact_limit: int = 14, seeds: int = 8, grow_to: int = 12
) -> BoundednessBounds:
    """Sound interval for b_eps(G).

    The bandwidth route uses b_eps <= 2*floor(bdw/eps) + 1: taking the first
    floor(b/2) vertices of an expander on b vertices in any labelling forces an
    edge of length at least eps*floor(b/2).
    """
    eps = to_fraction(eps)
    if eps <= 0:
        raise ValueError("eps must be positive")
    if g.n == 0:
        return BoundednessBounds(0, None, 0, "empty graph")
    upper, source = g.n, "trivial: n"
    if g.n <= exact_limit:
        res = exact_boundedness(g, eps, limit_n=exact_limit)
        wit = ExpansionWitness(EXPANDER_SUBGRAPH, res.expander, eps)
        return BoundednessBounds(res.value, wit, res.value, "exact")
    if bdw_upper is not None:
        via = boundedness_from_bandwidth_sound(bdw_upper, eps)
        if via < upper:
            upper, source = via, f"bandwidth upper bound {bdw_upper}"
    found = _grow_expanders(g, eps, seeds, grow_to)
    lower = len(found)
    if lower > upper:
        raise CertificateError(f"verified expander of size {lower} exceeds upper bound {upper}")
    return BoundednessBounds(lower, ExpansionWitness(EXPANDER_SUBGRAPH, found, eps), upper, source)
