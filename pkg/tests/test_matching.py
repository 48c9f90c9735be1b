import random

import networkx as nx
import pytest
from hypothesis import given, settings

from exceptions.exception import OracleLimitExceeded, OverlappingSets
from generators import random_gnp
from graph_core import Graph, is_independent
from independence import core_corona_oracle, enumerate_mis
from matching import (
    can_match_into,
    failing_cross_pairs,
    gallai_edmonds,
    is_core_vertex_by_matchability,
    is_factor_critical,
    is_matching_covered,
    is_maximum_by_matchability,
    matching_number_exhaustive,
    maximum_matching,
    tutte_berge_bound,
)
from models import GallaiEdmonds
from tests.named_graphs import BOWTIE, C4, C5, C6, DUMBBELL, FUSED5, PATH4, THETA7, TWO_TRIANGLES
from tests.strategies import graphs
from utils.seed_utils import SeedUtils


def test_maximum_matching_sizes():
    assert maximum_matching(DUMBBELL).size == 3
    assert maximum_matching(C5).size == 2
    assert maximum_matching(Graph(3)).size == 0


def test_matching_involution():
    matching = maximum_matching(DUMBBELL)
    for v in DUMBBELL.vertices:
        assert matching.partner(matching.partner(v)) == v
    assert matching.covered == frozenset(range(6))


@settings(max_examples=60, deadline=None)
@given(graphs(max_n=10))
def test_maximum_matching_agrees_with_exhaustive_oracle(g):
    matching = maximum_matching(g)
    assert nx.is_matching(g.nx, set(matching.pairs))
    assert matching.size == matching_number_exhaustive(g)


def test_exhaustive_oracle_limit():
    with pytest.raises(OracleLimitExceeded):
        matching_number_exhaustive(Graph(17))


def test_gallai_edmonds_theta7():
    assert gallai_edmonds(THETA7) == GallaiEdmonds(
        D=frozenset({0, 1, 2, 4, 5, 6}), A=frozenset({3}), C=frozenset()
    )


def test_gallai_edmonds_factor_critical_and_perfect():
    assert gallai_edmonds(C5) == GallaiEdmonds(D=frozenset(range(5)), A=frozenset(), C=frozenset())
    assert gallai_edmonds(DUMBBELL) == GallaiEdmonds(D=frozenset(), A=frozenset(), C=frozenset(range(6)))
    assert gallai_edmonds(TWO_TRIANGLES).D == frozenset(range(6))


@settings(max_examples=40, deadline=None)
@given(graphs(max_n=9))
def test_gallai_edmonds_partitions_vertices(g):
    ge = gallai_edmonds(g)
    assert ge.D | ge.A | ge.C == frozenset(g.vertices)
    assert not (ge.D & ge.A) and not (ge.D & ge.C) and not (ge.A & ge.C)


@pytest.mark.parametrize("g, expected", [
    (C5, True),
    (FUSED5, True),
    (BOWTIE, True),
    (C4, False),
    (DUMBBELL, False),
])
def test_is_factor_critical(g, expected):
    assert is_factor_critical(g) is expected


@pytest.mark.parametrize("g, expected", [
    (C4, True),
    (C6, True),
    (PATH4, False),
    (C5, False),
])
def test_is_matching_covered(g, expected):
    assert is_matching_covered(g) is expected


def test_can_match_into():
    matching = can_match_into(THETA7, [2, 4], [3, 0])
    assert matching is not None
    assert matching.size == 2
    assert can_match_into(THETA7, [0, 1], [2]) is None


def test_can_match_into_rejects_overlap():
    with pytest.raises(OverlappingSets):
        can_match_into(C5, [0, 1], [1, 3])


def test_core_certifier_on_theta7():
    s = frozenset({0, 3, 5})
    assert is_maximum_by_matchability(THETA7, s)
    assert is_core_vertex_by_matchability(THETA7, s, 3)
    assert not is_core_vertex_by_matchability(THETA7, s, 0)


def test_berge_certifier_rejects_non_maximum():
    assert not is_maximum_by_matchability(C5, {0})
    assert not is_maximum_by_matchability(C5, {0, 1})


@settings(max_examples=50, deadline=None)
@given(graphs(min_n=1, max_n=8))
def test_matchability_certifiers_agree_with_oracle(g):
    maximum = enumerate_mis(g)
    for s in maximum:
        assert is_maximum_by_matchability(g, s)

    profile = core_corona_oracle(g)
    s = maximum[0]
    for v in sorted(s):
        assert is_core_vertex_by_matchability(g, s, v) == (v in profile.core)

    for v in g.vertices:
        smaller = frozenset(range(v)) & s
        if is_independent(g, smaller) and len(smaller) < profile.alpha:
            assert not is_maximum_by_matchability(g, smaller)


def test_cross_pairs_on_matching_covered_cycle():
    assert failing_cross_pairs(C6, [0, 2, 4], [1, 3, 5], 20, random.Random(1)) == []


def test_cross_pairs_detect_failures():
    failures = failing_cross_pairs(PATH4, [0, 2], [1, 3], 200, random.Random(3))
    assert set(failures) == {(2, 1)}


def test_tutte_berge_bound():
    assert tutte_berge_bound(THETA7, {3}) == 3
    assert tutte_berge_bound(THETA7, set()) == 3
    assert tutte_berge_bound(Graph(3), set()) == 0
    assert tutte_berge_bound(Graph(0), set()) == 0


@settings(max_examples=50, deadline=None)
@given(graphs(max_n=9))
def test_tutte_berge_bound_is_tight_at_the_barrier(g):
    mu = maximum_matching(g).size
    assert tutte_berge_bound(g, gallai_edmonds(g).A) == mu
    for v in g.vertices:
        assert tutte_berge_bound(g, {v}) >= mu


@pytest.mark.slow
def test_maximum_matching_agrees_with_exhaustive_oracle_at_full_size():
    for i in range(200):
        g = random_gnp(1 + i % 12, 0.5, SeedUtils.sub_seed(7, i))
        assert maximum_matching(g).size == matching_number_exhaustive(g)
