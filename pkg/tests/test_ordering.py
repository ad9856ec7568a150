import math
import random
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from bandsep.errors import PartitionError, SeparatorNotFound
from bandsep.graph import Graph, bandwidth_of_labelling, complete_binary_tree, cycle, grid, path, random_bounded_degree
from bandsep.oracles import exact_bandwidth
from bandsep.ordering import (
    SeparationNode,
    SeparationTree,
    SPRPartition,
    bandwidth_bound_formula,
    bandwidth_bound_genus,
    bandwidth_bound_minor,
    bandwidth_bound_planar,
    bucket_index,
    decomposition_ordering,
    level_ordering,
    recursive_band_ordering,
    validate_partition,
    validate_separation_tree,
)
from bandsep.separators import provider
from partitions import random_partition
from strategies import graphs

F = frozenset
E = frozenset()


def test_bucket_index_cases():
    assert bucket_index(4, 0, 7) == 4
    assert bucket_index(1, 1, 7) == 3
    assert bucket_index(6, 1, 7) == 5
    assert bucket_index(2, math.inf, 7) == 2


def test_path_partition():
    part = SPRPartition(F({4}), (F({3}), E, F({5})), (F({0, 1, 2}), E, F({6, 7, 8})), 3, Fraction(3))
    cert = decomposition_ordering(path(9), part)
    # buckets 1: 0-3, 2: 4, 3: 5-8, which is the identity order
    assert cert.labelling.order == tuple(range(9))
    assert cert.bandwidth == 1 < cert.guaranteed_bound == 12


def test_single_bucket_partition():
    g = grid(3)
    part = SPRPartition(F(range(9)), (E, E, E), (E, E, E), 3, Fraction(0))
    cert = decomposition_ordering(g, part)
    assert cert.buckets.sizes == (0, 9, 0)
    assert cert.bandwidth <= 8 < 18


def test_partition_violations_are_named():
    g = path(9)
    bad = SPRPartition(E, (E, E, E), (F(range(5)), E, F(range(5, 9))), 3, Fraction(5))
    with pytest.raises(PartitionError) as err:
        decomposition_ordering(g, bad)
    assert err.value.condition == "(ii)"
    small_r = SPRPartition(E, (E, E, E), (F(range(9)), E, E), 3, Fraction(4))
    assert validate_partition(g, small_r).condition == "(i)"
    # with b = 5 the R-sets must stay at distance 2 from S; vertex 3 is at distance 1
    close = SPRPartition(F({4}), (E,) * 5, (F({0, 1, 2, 3}), E, E, E, F({5, 6, 7, 8})), 5, Fraction(4))
    assert validate_partition(g, close).condition == "(iii)"
    missing = SPRPartition(E, (E, E, E), (F(range(8)), E, E), 3, Fraction(9))
    assert validate_partition(g, missing).condition == "cover"
    assert validate_partition(g, SPRPartition(E, (E, E), (F(range(9)), E), 2, Fraction(9))).condition == "b"


def test_separation_tree_examples():
    ok = SeparationTree((SeparationNode(Fraction(2, 12), (1, 2)), SeparationNode(Fraction(5, 12)), SeparationNode(Fraction(5, 12))))
    assert validate_separation_tree(ok, 6)
    nodes = [SeparationNode(Fraction(0), (2 * i + 1, 2 * i + 2)) for i in range(7)]
    nodes += [SeparationNode(Fraction(1, 8)) for _ in range(8)]
    assert not validate_separation_tree(SeparationTree(tuple(nodes)), 6)
    heavy = SeparationTree((SeparationNode(Fraction(1, 2), (1, 2)), SeparationNode(Fraction(1, 2)), SeparationNode(Fraction(1, 2))))
    assert validate_separation_tree(heavy, 6).condition == "labels"
    unary = SeparationTree((SeparationNode(Fraction(0), (1,)), SeparationNode(Fraction(1))))
    assert validate_separation_tree(unary, 6).condition == "binary"


def test_binary_tree_run():
    g = complete_binary_tree(9)
    cert = recursive_band_ordering(g, provider("centroid"), s_cap=1)
    assert not cert.fallback and cert.b == 6
    assert cert.bandwidth < cert.guaranteed_bound
    assert cert.bandwidth <= bandwidth_bound_formula(g.n, 3, 1)
    assert bandwidth_of_labelling(g, cert.labelling) == cert.bandwidth
    assert validate_separation_tree(cert.tree, cert.b)
    assert len(cert.tree.leaves) <= 6 and len(cert.separators) <= 5
    for sep in cert.separators:
        assert sep.size == 1


def test_fallbacks_and_errors():
    c = recursive_band_ordering(cycle(100), provider("bfs"))
    assert c.fallback and c.labelling.order == tuple(range(100))
    assert recursive_band_ordering(grid(3), provider("exact"), s_cap=3).fallback
    with pytest.raises(ValueError):
        recursive_band_ordering(Graph(4, [(0, 1)]), provider("bfs"))
    with pytest.raises(ValueError):
        recursive_band_ordering(complete_binary_tree(9), provider("centroid"), s_cap=0)
    with pytest.raises(SeparatorNotFound):
        recursive_band_ordering(random_bounded_degree(800, 3, seed=1), provider("bfs"), s_cap=1)


def test_budget_discovery_matches_explicit_cap():
    g = complete_binary_tree(9)
    found = recursive_band_ordering(g, provider("centroid"))
    assert found.s_cap == 1
    assert found.labelling == recursive_band_ordering(g, provider("centroid"), s_cap=1).labelling


def test_bound_formula_values():
    assert bandwidth_bound_formula(4096, 4, 1) == pytest.approx(4096)
    assert bandwidth_bound_formula(4**8, 4, 4) == pytest.approx(6 * 65536 / 7)
    assert bandwidth_bound_planar(1024, 4) == pytest.approx(3072)
    assert bandwidth_bound_genus(1024, 4, 0) == bandwidth_bound_planar(1024, 4)
    assert bandwidth_bound_genus(1024, 4, 4) == pytest.approx(15 * 1024 / 4)
    assert bandwidth_bound_minor(4**6, 4, 4) == pytest.approx(12 * 4096 / 3)
    assert bandwidth_bound_formula(10, 3, 10) == math.inf
    with pytest.raises(ValueError):
        bandwidth_bound_planar(10, 1)


def test_paths_and_cycles_below_every_formula():
    for n in (64, 200):
        for d in (2, 3, 4):
            bounds = [bandwidth_bound_formula(n, d, 1), bandwidth_bound_planar(n, d), bandwidth_bound_minor(n, d, 2)]
            assert all(2 < x for x in bounds)
    assert exact_bandwidth(path(9))[0] == 1 and exact_bandwidth(cycle(9))[0] == 2


@given(st.integers(0, 10_000), st.sampled_from(["random", "random", "empty", "all"]))
def test_random_partitions_obey_the_certificate(seed, mode):
    rng = random.Random(seed)
    g = random_bounded_degree(rng.choice([12, 20, 30]), rng.choice([2, 3, 4]), seed=seed)
    part = random_partition(g, rng, mode)
    assert validate_partition(g, part)
    cert = decomposition_ordering(g, part)
    assert cert.bandwidth < part.guaranteed_bound
    bucket = cert.buckets.bucket
    for u, v in g.edges():
        assert abs(bucket[u] - bucket[v]) <= 1
    cap = len(part.S) + part.p_size + part.r
    assert all(size <= cap for size in cert.buckets.sizes)


@given(graphs(min_n=2, max_n=12, max_degree=4))
def test_small_inputs_fall_back_soundly(g):
    if g.max_degree < 2:
        return
    cert = recursive_band_ordering(g, provider("auto"))
    assert cert.fallback and cert.bandwidth <= g.n - 1
    if g.n <= 9:
        assert exact_bandwidth(g)[0] <= cert.bandwidth


@given(graphs(min_n=1, max_n=9))
def test_level_ordering_is_a_labelling(g):
    sigma = level_ordering(g)
    assert sorted(sigma.order) == list(range(g.n))
