from itertools import combinations

import pytest
from hypothesis import given, settings

from exceptions.exception import NoSmallTransversal, OracleLimitExceeded
from generators import random_family
from graph_core import Graph, is_independent
from independence import (
    alpha_exact,
    alpha_poly_oct2,
    core_corona_oracle,
    core_corona_poly,
    enumerate_mis,
    odd_cycle_transversal,
)
from models import IndependenceMethod
from tests.named_graphs import BOWTIE, C4, C5, DUMBBELL, FUSED5, THETA7, TWO_TRIANGLES
from tests.strategies import families, graphs, seeds


def brute_force_alpha(g: Graph) -> int:
    for size in range(g.n, 0, -1):
        if any(is_independent(g, chosen) for chosen in combinations(g.vertices, size)):
            return size
    return 0


@pytest.mark.parametrize("g, alpha", [
    (C5, 2),
    (DUMBBELL, 2),
    (THETA7, 3),
    (BOWTIE, 2),
    (Graph(0), 0),
    (Graph(3), 3),
])
def test_alpha_exact(g, alpha):
    assert alpha_exact(g) == alpha


@settings(max_examples=60, deadline=None)
@given(graphs(max_n=9))
def test_alpha_exact_matches_brute_force(g):
    assert alpha_exact(g) == brute_force_alpha(g)


def test_alpha_oracle_limit():
    with pytest.raises(OracleLimitExceeded):
        alpha_exact(Graph(33))


def test_enumerate_mis_bowtie():
    assert enumerate_mis(BOWTIE) == [
        frozenset({0, 3}), frozenset({0, 4}), frozenset({1, 3}), frozenset({1, 4}),
    ]


def test_enumerate_mis_edgeless_and_empty():
    assert enumerate_mis(Graph(2)) == [frozenset({0, 1})]
    assert enumerate_mis(Graph(0)) == [frozenset()]


@pytest.mark.parametrize("g, core, corona", [
    (THETA7, {3}, {0, 1, 3, 5, 6}),
    (DUMBBELL, set(), set(range(6))),
    (BOWTIE, set(), {0, 1, 3, 4}),
    (FUSED5, set(), set(range(5))),
    (C5, set(), set(range(5))),
])
def test_core_corona_oracle(g, core, corona):
    profile = core_corona_oracle(g)
    assert profile.core == frozenset(core)
    assert profile.corona == frozenset(corona)
    assert profile.method == IndependenceMethod.ORACLE


def test_core_corona_oracle_counts_mis():
    assert core_corona_oracle(BOWTIE).mis_count == 4


def test_odd_cycle_transversal():
    assert odd_cycle_transversal(C4) == ()
    assert odd_cycle_transversal(C5) == (0,)
    assert odd_cycle_transversal(TWO_TRIANGLES) == (0, 3)


def test_no_small_transversal():
    three_triangles = Graph(9, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (6, 7), (7, 8), (6, 8)])
    with pytest.raises(NoSmallTransversal):
        odd_cycle_transversal(three_triangles)


@pytest.mark.parametrize("g", [C5, DUMBBELL, THETA7, BOWTIE, FUSED5, TWO_TRIANGLES])
def test_poly_path_matches_oracle_on_named_graphs(g):
    oracle = core_corona_oracle(g)
    poly = core_corona_poly(g)
    assert alpha_poly_oct2(g) == oracle.alpha
    assert (poly.alpha, poly.core, poly.corona) == (oracle.alpha, oracle.core, oracle.corona)
    assert poly.method == IndependenceMethod.POLY_OCT2


@settings(max_examples=40, deadline=None)
@given(families, seeds)
def test_poly_path_matches_oracle_on_generated_families(kind, seed):
    g, _ = random_family(kind, 14, seed)
    oracle = core_corona_oracle(g)
    poly = core_corona_poly(g)
    assert (poly.alpha, poly.core, poly.corona) == (oracle.alpha, oracle.core, oracle.corona)


@settings(max_examples=60, deadline=None)
@given(graphs(max_n=8))
def test_poly_path_matches_oracle_where_applicable(g):
    try:
        alpha = alpha_poly_oct2(g)
    except NoSmallTransversal:
        return
    assert alpha == alpha_exact(g)
