import math
from fractions import Fraction
from itertools import combinations

import pytest
from hypothesis import given, settings

from bandsep.errors import ExpanderFound, SeparatorNotFound, SizeGuardError
from bandsep.expansion import make_finder
from bandsep.graph import Graph, complete, complete_binary_tree, cycle, grid, induced_subgraph, path
from bandsep.oracles import exact_boundedness, exact_separation_number, exact_treewidth
from bandsep.separators import (
    TWO_THIRDS,
    Separator,
    find_separator_bfs_layer,
    find_separator_centroid,
    find_separator_exact,
    find_separator_spectral,
    provider,
    separator_bound_genus,
    separator_bound_minor,
    separator_from_nonexpanding,
    separator_from_tree_decomposition,
    validate_separator,
)
from bandsep.tdecomp import TreeDecomposition, td_from_elimination_order, min_degree_order
from brute import brute_min_separator
from strategies import graphs

F = frozenset


def bridged_cliques():
    edges = [(i + o, j + o) for o in (0, 5) for i in range(5) for j in range(i + 1, 5)]
    return Graph(10, edges + [(4, 5)])


def test_validate_separator_examples():
    assert validate_separator(path(3), Separator(F({1}), F({0}), F({2})))
    bad = validate_separator(complete(3), Separator(F(), F({0}), F({1, 2})))
    assert not bad and bad.condition == "(c)"
    bad = validate_separator(path(4), Separator(F(), F(range(4)), F()))
    assert not bad and bad.condition == "(b)"
    bad = validate_separator(path(4), Separator(F({1}), F({0, 1}), F({2, 3})))
    assert not bad and bad.condition == "(a)"


def test_exact_separator_examples():
    assert find_separator_exact(path(5)).size == 1
    # exhaustive reference: two vertices already split the 3x3 grid 1 : 6
    assert brute_min_separator(grid(3)) == 2
    assert find_separator_exact(grid(3)).size == 2
    assert find_separator_exact(complete(6)).size == 2
    with pytest.raises(SizeGuardError):
        find_separator_exact(path(17))


def test_bfs_layer_examples():
    assert find_separator_bfs_layer(path(9)).S == {4}
    for k in range(3, 9):
        assert find_separator_bfs_layer(grid(k)).size <= k
    with pytest.raises(SeparatorNotFound):
        find_separator_bfs_layer(complete(5))
    with pytest.raises(ValueError):
        find_separator_bfs_layer(Graph(4, [(0, 1)]))


def test_spectral_examples():
    sep = find_separator_spectral(bridged_cliques())
    assert sep.size == 1 and sep.S <= {4, 5}
    assert find_separator_spectral(cycle(8)).size == 2
    with pytest.raises(ValueError):
        find_separator_spectral(path(2))


def test_spectral_nonconvergence_is_reported():
    with pytest.raises(SeparatorNotFound) as err:
        find_separator_spectral(grid(6), iterations=3)
    assert err.value.diagnostics["converged"] is False


def test_centroid_on_trees():
    t = complete_binary_tree(5)
    assert find_separator_centroid(t).size == 1
    with pytest.raises(ValueError):
        find_separator_centroid(cycle(5))


def test_separator_from_nonexpanding_examples():
    sep = separator_from_nonexpanding(Graph(8), Fraction(1, 2))
    assert sep.S == F()
    two_k10 = Graph(20, [(i + o, j + o) for o in (0, 10) for i in range(10) for j in range(i + 1, 10)])
    sep = separator_from_nonexpanding(two_k10, Fraction(1, 10))
    assert sep.S == F() and {sep.A, sep.B} == {F(range(10)), F(range(10, 20))}
    sep = separator_from_nonexpanding(path(20), Fraction(1, 4))
    assert sep.size <= 3 and max(len(sep.A), len(sep.B)) <= 13
    with pytest.raises(ExpanderFound) as err:
        separator_from_nonexpanding(complete(6), Fraction(1, 2))
    assert err.value.proven and err.value.vertices == F(range(6))


def test_separator_from_tree_decomposition_examples():
    p5 = path(5)
    td = TreeDecomposition(5, [{i, i + 1} for i in range(4)], [(i, i + 1) for i in range(3)])
    assert separator_from_tree_decomposition(p5, td).size <= 2
    t = complete_binary_tree(2)
    _, witness = exact_treewidth(t)
    sep = separator_from_tree_decomposition(t, witness)
    assert sep.size <= 2 and sep.size >= find_separator_exact(t).size
    sep = separator_from_tree_decomposition(complete(5), TreeDecomposition.single_bag(5))
    assert validate_separator(complete(5), sep) and sep.size <= 5
    with pytest.raises(ValueError):
        separator_from_tree_decomposition(p5, TreeDecomposition(5, [{0, 1}], []))


def test_bound_formulas():
    assert separator_bound_genus(100, 0) == pytest.approx(2 * math.sqrt(200))
    assert separator_bound_minor(100, 5) == pytest.approx(5**1.5 * 10)
    with pytest.raises(ValueError):
        separator_bound_genus(0, 0)


def test_provider_budget():
    p = provider("bfs", s_max=1)
    assert p(path(9)).size == 1
    with pytest.raises(SeparatorNotFound):
        p(grid(5))
    with pytest.raises(ValueError):
        provider("nonsense")


@given(graphs(max_n=9))
def test_every_provider_output_validates(g):
    for name in ("exact", "auto"):
        sep = provider(name)(g)
        assert validate_separator(g, sep)
        assert sep.alpha == TWO_THIRDS


@given(graphs(min_n=3, max_n=12, connected=True))
def test_heuristics_valid_or_explicit_failure(g):
    for finder in (find_separator_bfs_layer, find_separator_spectral):
        try:
            sep = finder(g)
        except SeparatorNotFound:
            continue
        assert validate_separator(g, sep)


@settings(max_examples=25)
@given(graphs(max_n=7))
def test_exact_separator_over_subgraphs_equals_separation_number(g):
    best = 0
    for k in range(1, g.n + 1):
        for verts in combinations(range(g.n), k):
            sub, _ = induced_subgraph(g, verts)
            best = max(best, find_separator_exact(sub).size)
    assert best == exact_separation_number(g)


@given(graphs(max_n=10))
def test_decomposition_separator_within_treewidth_plus_one(g):
    tw, td = exact_treewidth(g)
    sep = separator_from_tree_decomposition(g, td)
    assert validate_separator(g, sep, tw + 1)
    heuristic = td_from_elimination_order(g, min_degree_order(g))
    assert validate_separator(g, separator_from_tree_decomposition(g, heuristic), heuristic.width + 1)


@given(graphs(min_n=2, max_n=12, max_degree=4))
def test_peeling_separator_on_bounded_graphs(g):
    for eps in (Fraction(1, 4), Fraction(1, 2)):
        if 2 * exact_boundedness(g, eps).value >= g.n:
            continue
        sep = separator_from_nonexpanding(g, eps, make_finder("exact"))
        assert 3 * sep.size <= 2 * eps * g.n
        assert 3 * max(len(sep.A), len(sep.B)) <= 2 * g.n
        assert validate_separator(g, sep)
