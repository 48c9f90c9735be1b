import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from exceptions.exception import BudgetTooSmall, ValidationError, WrongFamily
from family import classify
from generators import companion_H, random_factor_critical, random_factor_critical_recipe, random_family, random_gnp
from graph_core import bipartition
from matching import is_factor_critical, is_matching_covered
from models import MINIMUM_ORDER, FamilyTag
from tests.strategies import families, seeds
from utils.seed_utils import SeedUtils


def test_random_family_is_deterministic():
    for kind in MINIMUM_ORDER:
        assert random_family(kind, 12, 42) == random_family(kind, 12, 42)


@settings(max_examples=80, deadline=None)
@given(families, seeds, st.integers(min_value=7, max_value=24))
def test_random_family_respects_budget(kind, seed, size_budget):
    g, recipe = random_family(kind, size_budget, seed)
    assert MINIMUM_ORDER[kind] <= g.n <= size_budget
    assert recipe.base is not None


@pytest.mark.parametrize("kind", list(MINIMUM_ORDER))
def test_minimum_budget_is_enough(kind):
    g, _ = random_family(kind, MINIMUM_ORDER[kind], 0)
    assert g.n == MINIMUM_ORDER[kind]
    assert classify(g).tag == kind


def test_budget_too_small():
    with pytest.raises(BudgetTooSmall):
        random_family(FamilyTag.FUSED_ODD, 4, 0)
    with pytest.raises(BudgetTooSmall):
        random_factor_critical_recipe(2, 0)


def test_out_of_scope_cannot_be_generated():
    with pytest.raises(WrongFamily):
        random_family(FamilyTag.OUT_OF_SCOPE, 10, 0)


@settings(max_examples=40, deadline=None)
@given(seeds, st.integers(min_value=3, max_value=14))
def test_random_factor_critical(seed, size_budget):
    g = random_factor_critical(size_budget, seed)
    assert g.n <= size_budget
    assert is_factor_critical(g)


def test_random_gnp():
    complete = random_gnp(5, 1.0, 9)
    assert complete.m == 10
    assert random_gnp(5, 0.0, 9).m == 0
    assert random_gnp(10, 0.5, 3) == random_gnp(10, 0.5, 3)


def test_random_gnp_rejects_probability():
    with pytest.raises(ValidationError):
        random_gnp(5, 1.5, 0)


def test_companion_of_even_linked(theta7):
    cls = classify(theta7)
    h = companion_H(theta7, cls)
    assert h.n == 8
    assert set(h.neighbors(7)) == {2, 4}
    rest = h.nx.subgraph([v for v in h.vertices if v not in cls.X])
    assert bipartition(rest) is not None
    assert is_matching_covered(rest)


def test_companion_of_odd_linked(dumbbell):
    cls = classify(dumbbell)
    h = companion_H(dumbbell, cls)
    assert h.n == 8
    assert h.has_edge(2, 6) and h.has_edge(6, 7) and h.has_edge(7, 3)


def test_companion_requires_linked_family(bowtie):
    with pytest.raises(WrongFamily):
        companion_H(bowtie, classify(bowtie))


@settings(max_examples=30, deadline=None)
@given(st.sampled_from([FamilyTag.EVEN_LINKED, FamilyTag.ODD_LINKED]), seeds)
def test_companion_of_generated_linked_graphs(kind, seed):
    g, _ = random_family(kind, 14, seed)
    cls = classify(g, assume_bicritical=True)
    h = companion_H(g, cls)
    rest = h.nx.subgraph([v for v in h.vertices if v not in cls.X])
    assert is_matching_covered(rest)


def test_sub_seed():
    assert SeedUtils.sub_seed(0, 0) == 0xE220A8397B1DCDAF
    assert SeedUtils.sub_seed_path(5, 1, 2) == SeedUtils.sub_seed(SeedUtils.sub_seed(5, 1), 2)
    assert len({SeedUtils.sub_seed(7, i) for i in range(100)}) == 100
