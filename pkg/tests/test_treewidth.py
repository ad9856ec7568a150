from fractions import Fraction

import pytest
from hypothesis import given

from bandsep.bounds import treewidth_bound_formula
from bandsep.expansion import make_finder
from bandsep.graph import Graph, Labelling, complete, cycle, path
from bandsep.oracles import exact_bandwidth, exact_boundedness, exact_treewidth
from bandsep.tdecomp import (
    TreeDecomposition,
    min_degree_order,
    td_from_bandwidth_labelling,
    td_from_elimination_order,
    validate_tree_decomposition,
)
from bandsep.treewidth import td_from_separators
from strategies import graphs


def test_validator_examples():
    k3 = TreeDecomposition.single_bag(3)
    assert validate_tree_decomposition(complete(3), k3) and k3.width == 2
    p3 = TreeDecomposition(3, ({0, 1}, {1, 2}), ((0, 1),))
    assert validate_tree_decomposition(path(3), p3) and p3.width == 1
    bad = validate_tree_decomposition(path(3), TreeDecomposition(3, ({0, 1}, {2}), ((0, 1),)))
    assert not bad and bad.condition == "(b)" and "(1, 2)" in bad.detail


def test_validator_other_conditions():
    g = path(3)
    assert validate_tree_decomposition(g, TreeDecomposition(3, ({0, 1},))).condition == "(a)"
    assert validate_tree_decomposition(g, TreeDecomposition(3, ({0, 1}, {1, 2}))).condition == "tree"
    split = TreeDecomposition(3, ({0, 1}, {2}, {1, 2}), ((0, 1), (1, 2)))
    assert validate_tree_decomposition(g, split).condition == "(c)"


def test_td_from_bandwidth_labelling_examples():
    td = td_from_bandwidth_labelling(path(5), Labelling.identity(5), 1)
    assert len(td.bags) == 4 and all(len(b) == 2 for b in td.bags) and td.width == 1
    td = td_from_bandwidth_labelling(complete(4), Labelling((2, 4, 1, 3)), 3)
    assert len(td.bags) == 1 and td.width == 3
    td = td_from_bandwidth_labelling(cycle(6), Labelling((1, 3, 5, 6, 4, 2)), 2)
    assert td.width == 2 and validate_tree_decomposition(cycle(6), td)
    with pytest.raises(ValueError):
        td_from_bandwidth_labelling(cycle(6), Labelling.identity(6), 2)


def test_td_from_separators_examples():
    res = td_from_separators(Graph(6), Fraction(1, 2))
    assert res.td.width == 0
    td, b_used = td_from_separators(path(32), Fraction(1, 4), make_finder("exact", guard=32), base_size=4)
    assert validate_tree_decomposition(path(32), td)
    assert td.width <= treewidth_bound_formula(b_used, Fraction(1, 4), 32)
    assert td.width < 24
    two_k5 = Graph(10, [(i + o, j + o) for o in (0, 5) for i in range(5) for j in range(i + 1, 5)])
    res = td_from_separators(two_k5, Fraction(1, 10))
    assert res.td.width == 4


def test_treewidth_bound_formula():
    assert treewidth_bound_formula(0, 0, 100) == 0
    assert treewidth_bound_formula(10, Fraction(1, 10), 100) == 40


@given(graphs(max_n=9))
def test_every_builder_validates(g):
    tds = [td_from_elimination_order(g, min_degree_order(g))]
    if g.n <= 8:
        value, sigma = exact_bandwidth(g)
        tds.append(td_from_bandwidth_labelling(g, sigma, value))
        assert tds[-1].width == value or g.n == 1
    tds.append(td_from_separators(g, Fraction(1, 4), base_size=2).td)
    for td in tds:
        assert validate_tree_decomposition(g, td)


@given(graphs(max_n=9))
def test_treewidth_below_boundedness_formula(g):
    tw, _ = exact_treewidth(g)
    for eps in (Fraction(1, 4), Fraction(1, 2)):
        assert tw <= treewidth_bound_formula(exact_boundedness(g, eps).value, eps, g.n)


@given(graphs(max_n=10, max_degree=4))
def test_separator_recursion_is_an_upper_bound(g):
    tw, _ = exact_treewidth(g)
    res = td_from_separators(g, Fraction(1, 10), make_finder("exact"), base_size=2)
    assert res.td.width >= tw
    assert res.td.width <= treewidth_bound_formula(res.b_used, Fraction(1, 10), g.n)
