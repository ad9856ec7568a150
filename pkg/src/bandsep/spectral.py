"""Approximate Fiedler vectors by shifted power iteration with deflation."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy import sparse

from .graph import Graph


@dataclass(frozen=True)
class FiedlerResult:
    vector: np.ndarray
    eigenvalue: float
    residual: float
    iterations: int
    converged: bool

    def diagnostics(self) -> dict:
        return {
            "eigenvalue": self.eigenvalue,
            "residual": self.residual,
            "iterations": self.iterations,
            "converged": self.converged,
        }


def laplacian(g: Graph) -> sparse.csr_matrix:
    rows, cols = [], []
    for u, v in g.edges():
        rows += [u, v]
        cols += [v, u]
    adj = sparse.csr_matrix((np.ones(len(rows)), (rows, cols)), shape=(g.n, g.n))
    return sparse.diags(np.asarray(adj.sum(axis=1)).ravel()) - adj


def fiedler_vector(g: Graph, iterations: int = 20000, tolerance: float = 1e-6, seed: int = 0) -> FiedlerResult:
    """Power iteration on ``cI - L`` with the constant vector projected out.

    ``c = 2*maxdeg + 1`` bounds the Laplacian spectrum, so the dominant
    surviving direction is the eigenvector of the second-smallest eigenvalue.
    Converged means ``||Lx - lambda x|| <= tolerance * c``.
    """
    n = g.n
    if n < 2:
        raise ValueError("need at least 2 vertices")
    lap = laplacian(g)
    c = 2.0 * g.max_degree + 1.0
    x = np.random.default_rng(seed).standard_normal(n)
    x -= x.mean()
    x /= np.linalg.norm(x)
    lam, resid, it = 0.0, np.inf, 0
    for it in range(1, iterations + 1):
        lx = lap @ x
        y = c * x - lx
        y -= y.mean()
        norm = np.linalg.norm(y)
        if norm == 0.0:
            break
        x = y / norm
        if it % 25 == 0 or it == iterations:
            lx = lap @ x
            lam = float(x @ lx)
            resid = float(np.linalg.norm(lx - lam * x))
            if resid <= tolerance * c:
                return FiedlerResult(x, lam, resid, it, True)
    return FiedlerResult(x, lam, resid, it, False)


def sweep_order(vec: np.ndarray) -> list[int]:
    """Vertices by ascending coordinate; ties by id."""
    return [int(v) for v in np.argsort(vec, kind="stable")]
