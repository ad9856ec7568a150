"""Seeded test corpora: small random connected graphs and named families."""

from __future__ import annotations

import random
from dataclasses import dataclass

from .graph import Graph, complete, complete_binary_tree, cycle, grid, path, star


@dataclass(frozen=True)
class CorpusGraph:
    name: str
    graph: Graph


def random_connected(n: int, max_degree: int, seed: int) -> Graph:
    """Random spanning tree under the degree cap, then a random number of extra edges under the cap."""
    if n < 1:
        raise ValueError("n must be positive")
    if max_degree < 2 and n > 2:
        raise ValueError("a connected graph on more than 2 vertices needs max degree >= 2")
    rng = random.Random(seed)
    deg = [0] * n
    edges: set[tuple[int, int]] = set()
    perm = list(range(n))
    rng.shuffle(perm)
    for k in range(1, n):
        v = perm[k]
        u = rng.choice([perm[j] for j in range(k) if deg[perm[j]] < max_degree])
        edges.add((min(u, v), max(u, v)))
        deg[u] += 1
        deg[v] += 1
    for _ in range(rng.randint(0, n)):
        u, v = rng.sample(range(n), 2) if n > 1 else (0, 0)
        key = (min(u, v), max(u, v))
        if u != v and key not in edges and deg[u] < max_degree and deg[v] < max_degree:
            edges.add(key)
            deg[u] += 1
            deg[v] += 1
    return Graph(n, sorted(edges))


def random_corpus(count: int = 200, seed: int = 0, n_min: int = 5, n_max: int = 8, max_degree: int = 4) -> list[CorpusGraph]:
    rng = random.Random(seed)
    out = []
    for i in range(count):
        n = rng.randint(n_min, n_max)
        gseed = rng.randrange(2**32)
        out.append(CorpusGraph(f"random-{i}-n{n}", random_connected(n, max_degree, gseed)))
    return out


def random_sparse(n: int, edges: int, max_degree: int, seed: int) -> Graph:
    """Up to ``edges`` random edges under the degree cap; may be disconnected."""
    rng = random.Random(seed)
    deg = [0] * n
    chosen: set[tuple[int, int]] = set()
    for _ in range(edges):
        if n < 2:
            break
        u, v = rng.sample(range(n), 2)
        key = (min(u, v), max(u, v))
        if key not in chosen and deg[u] < max_degree and deg[v] < max_degree:
            chosen.add(key)
            deg[u] += 1
            deg[v] += 1
    return Graph(n, sorted(chosen))


def sparse_corpus(count: int = 60, seed: int = 0, n_min: int = 6, n_max: int = 12, max_degree: int = 4) -> list[CorpusGraph]:
    """Sparse, often disconnected graphs; the regime where no large expander exists."""
    rng = random.Random(seed)
    out = []
    for i in range(count):
        n = rng.randint(n_min, n_max)
        m = rng.randint(0, n)
        out.append(CorpusGraph(f"sparse-{i}-n{n}-m{m}", random_sparse(n, m, max_degree, rng.randrange(2**32))))
    return out


def named_corpus(n_max: int = 10) -> list[CorpusGraph]:
    """Small members of the standard families with at most ``n_max`` vertices."""
    out = []
    for n in range(1, n_max + 1):
        out.append(CorpusGraph(f"path-{n}", path(n)))
        if n >= 3:
            out.append(CorpusGraph(f"cycle-{n}", cycle(n)))
        if n <= 7:
            out.append(CorpusGraph(f"complete-{n}", complete(n)))
        if n >= 2:
            out.append(CorpusGraph(f"star-{n - 1}", star(n - 1)))
    for rows, cols in ((2, 2), (2, 3), (2, 4), (3, 3), (2, 5), (3, 3)):
        if rows * cols <= n_max:
            out.append(CorpusGraph(f"grid-{rows}x{cols}", grid(rows, cols)))
    for depth in (1, 2):
        if 2 ** (depth + 1) - 1 <= n_max:
            out.append(CorpusGraph(f"binary-tree-{depth}", complete_binary_tree(depth)))
    seen, unique = set(), []
    for cg in out:
        if cg.name not in seen:
            seen.add(cg.name)
            unique.append(cg)
    return unique


def full_corpus(count: int = 200, seed: int = 0, n_max: int = 8) -> list[CorpusGraph]:
    """Named families and random connected graphs up to ``n_max``, plus the sparse corpus up to 12."""
    return named_corpus(n_max=n_max) + random_corpus(count=count, seed=seed, n_max=n_max) + sparse_corpus(seed=seed)
