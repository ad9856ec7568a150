"""Closed-form links between the four parameters and the constant budgets between them."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .graph import to_fraction


def boundedness_from_bandwidth(bdw: int, eps) -> int:
    """ceil(2*bdw/eps), the bandwidth-to-boundedness bound as usually stated.

    This is not sound for expanders on an odd number of vertices (a path on
    three vertices is a 1-expander of bandwidth 1); use
    ``boundedness_from_bandwidth_sound`` when a certified bound is needed.
    """
    eps = to_fraction(eps)
    if eps <= 0:
        raise ValueError("eps must be positive")
    return math.ceil(2 * bdw / eps)


def boundedness_from_bandwidth_sound(bdw: int, eps) -> int:
    """2*floor(bdw/eps) + 1, valid for every graph and every eps > 0."""
    eps = to_fraction(eps)
    if eps <= 0:
        raise ValueError("eps must be positive")
    return 2 * math.floor(bdw / eps) + 1


def separation_from_treewidth(trw: int) -> int:
    if trw < 0:
        raise ValueError("treewidth must be nonnegative")
    return trw + 1


DIRECTIONS = ("tw->sep", "sep->bw", "bw->bdd", "bdd->tw")


@dataclass(frozen=True)
class Budget:
    """Parameters demanded of the source property so the target property holds."""

    direction: str
    source: dict
    rule: str


def _fmt(x) -> str:
    if isinstance(x, Fraction):
        return str(x.numerator) if x.denominator == 1 else str(x)
    return f"{x:g}"


def equivalence_budgets(direction: str, target_beta, delta: int | None = None, eps=None) -> Budget:
    """The constant map of the sublinear-equivalence proof, one implication at a time.

    ``tw->sep``  given beta_4, take beta_1 = beta_4/2 and n_4 = max{n_1, 2/beta_4}.
    ``sep->bw``  given beta_2, take beta_4 = d^(-6/beta_2) with d = max{2, delta}.
    ``bw->bdd``  given beta_3 and eps, take beta_2 = eps*beta_3/2.
    ``bdd->tw``  given beta_1, take beta_3 = eps = beta_1/4.

    Exact inputs (int/Fraction) stay exact where the map is rational.
    """
    if direction not in DIRECTIONS:
        raise ValueError(f"unknown direction {direction!r}; choose from {', '.join(DIRECTIONS)}")
    if isinstance(target_beta, str):
        target_beta = Fraction(target_beta)
    if target_beta <= 0:
        raise ValueError("target beta must be positive")
    if direction == "tw->sep":
        b1 = target_beta / 2
        return Budget(direction, {"beta_1": b1}, f"n >= max{{n_1, {_fmt(2 / target_beta)}}}")
    if direction == "sep->bw":
        if delta is None:
            raise ValueError("sep->bw needs the maximum degree delta")
        d = max(2, delta)
        exponent = 6 / target_beta
        if isinstance(exponent, Fraction) and exponent.denominator == 1:
            beta_4 = Fraction(1, d ** int(exponent))
        else:
            beta_4 = d ** (-float(exponent))
            if beta_4 == 0.0:
                # below float range: round the demand down to a smaller exact value
                beta_4 = Fraction(1, d ** math.ceil(exponent))
        return Budget(direction, {"beta_4": beta_4}, "n >= n_4")
    if direction == "bw->bdd":
        if eps is None:
            raise ValueError("bw->bdd needs eps")
        if isinstance(eps, str):
            eps = Fraction(eps)
        return Budget(direction, {"beta_2": eps * target_beta / 2}, "n >= n_2")
    q = target_beta / 4
    return Budget(direction, {"beta_3": q, "eps": q}, "n >= n_3")


def universality_min_degree(r: int, gamma, n: int) -> int:
    """ceil(((r-1)/r + gamma) * n), the minimum-degree threshold for embedding r-chromatic graphs."""
    gamma = to_fraction(gamma)
    if r < 2:
        raise ValueError("r must be at least 2")
    if not 0 < gamma < Fraction(1, r):
        raise ValueError("gamma must lie in (0, 1/r)")
    return math.ceil((Fraction(r - 1, r) + gamma) * n)


def treewidth_bound_formula(b_eps, eps, n: int):
    """2*b_eps + 2*eps*n; exact when the inputs are."""
    if isinstance(eps, str):
        eps = Fraction(eps)
    return 2 * b_eps + 2 * eps * n
