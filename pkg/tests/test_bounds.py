from fractions import Fraction

import pytest
from hypothesis import given

from bandsep.bounds import (
    DIRECTIONS,
    boundedness_from_bandwidth,
    boundedness_from_bandwidth_sound,
    equivalence_budgets,
    separation_from_treewidth,
    universality_min_degree,
)
from bandsep.graph import cycle, path
from bandsep.oracles import exact_bandwidth, exact_boundedness, exact_separation_number, exact_treewidth
from strategies import graphs


def test_boundedness_from_bandwidth_values():
    assert boundedness_from_bandwidth(1, 1) == 2
    assert boundedness_from_bandwidth(5, Fraction(1, 2)) == 20
    assert boundedness_from_bandwidth_sound(1, 1) == 3
    assert boundedness_from_bandwidth_sound(5, Fraction(1, 2)) == 21
    with pytest.raises(ValueError):
        boundedness_from_bandwidth(1, 0)
    with pytest.raises(ValueError):
        boundedness_from_bandwidth_sound(1, -1)


def test_stated_bound_fails_on_odd_expanders():
    # a 3-vertex path and a 5-cycle are 1-expanders; their bandwidths are 1 and 2
    assert exact_boundedness(path(3), 1).value == 3 > boundedness_from_bandwidth(1, 1)
    assert exact_bandwidth(cycle(5))[0] == 2
    assert exact_boundedness(cycle(5), 1).value == 5 > boundedness_from_bandwidth(2, 1) - 0
    assert exact_boundedness(cycle(5), 1).value <= boundedness_from_bandwidth_sound(2, 1)


def test_separation_from_treewidth():
    assert separation_from_treewidth(0) == 1
    assert separation_from_treewidth(4) == 5
    with pytest.raises(ValueError):
        separation_from_treewidth(-1)


def test_budget_values():
    b = equivalence_budgets("tw->sep", Fraction(1, 10))
    assert b.source == {"beta_1": Fraction(1, 20)} and b.rule == "n >= max{n_1, 20}"
    b = equivalence_budgets("sep->bw", Fraction(1, 2), delta=3)
    assert b.source["beta_4"] == Fraction(1, 3**12)
    b = equivalence_budgets("sep->bw", Fraction(1, 2), delta=1)
    assert b.source["beta_4"] == Fraction(1, 2**12)
    assert equivalence_budgets("sep->bw", 0.5, delta=3).source["beta_4"] == pytest.approx(3.0**-12)
    tiny = equivalence_budgets("sep->bw", 1e-5, delta=4).source["beta_4"]
    assert 0 < tiny <= Fraction(1, 4**600000)
    b = equivalence_budgets("bdd->tw", Fraction(1, 5))
    assert b.source == {"beta_3": Fraction(1, 20), "eps": Fraction(1, 20)}
    b = equivalence_budgets("bw->bdd", Fraction(1, 2), eps=Fraction(1, 4))
    assert b.source == {"beta_2": Fraction(1, 16)}


def test_budget_errors():
    with pytest.raises(ValueError):
        equivalence_budgets("sep->bw", Fraction(1, 2))
    with pytest.raises(ValueError):
        equivalence_budgets("bw->bdd", Fraction(1, 2))
    with pytest.raises(ValueError):
        equivalence_budgets("tw->bw", Fraction(1, 2))
    with pytest.raises(ValueError):
        equivalence_budgets("tw->sep", 0)


def test_composed_budgets_stay_positive():
    beta = Fraction(1, 10)
    b1 = equivalence_budgets("tw->sep", beta).source["beta_1"]
    b3 = equivalence_budgets("bdd->tw", b1).source["beta_3"]
    b2 = equivalence_budgets("bw->bdd", b3, eps=b3).source["beta_2"]
    b4 = equivalence_budgets("sep->bw", b2, delta=4).source["beta_4"]
    assert b4 > 0
    assert set(DIRECTIONS) == {"tw->sep", "sep->bw", "bw->bdd", "bdd->tw"}


def test_universality_thresholds():
    assert universality_min_degree(2, Fraction(1, 10), 100) == 60
    assert universality_min_degree(4, Fraction(1, 100), 400) == 304
    assert universality_min_degree(3, Fraction(1, 100), 300) == 203
    with pytest.raises(ValueError):
        universality_min_degree(1, Fraction(1, 10), 10)
    with pytest.raises(ValueError):
        universality_min_degree(3, Fraction(1, 3), 10)


@given(graphs(max_n=8))
def test_oracle_sweep(g):
    bdw, _ = exact_bandwidth(g)
    tw, _ = exact_treewidth(g)
    assert tw <= bdw
    if g.n <= 7:
        assert exact_separation_number(g) <= separation_from_treewidth(tw)
    for eps in (Fraction(1, 2), Fraction(1)):
        assert exact_boundedness(g, eps).value <= boundedness_from_bandwidth_sound(max(bdw, 0), eps)
