import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from bicritical import certify_by_recipe, is_2bicritical
from exceptions.exception import InvalidRecipeStep, OracleLimitExceeded
from generators import build, random_factor_critical_recipe, random_family
from graph_core import Graph
from models import GENERATED_FAMILIES, EarPendantRecipe, EarStep, OddCycleBase, OddK4HomeomorphBase, PendantStep
from tests.named_graphs import BOWTIE, C3, C4, C5, DIAMOND, DUMBBELL, FUSED5, K4, THETA7, TWO_TRIANGLES
from tests.strategies import families, seeds
from utils.seed_utils import SeedUtils


@pytest.mark.parametrize("g", [C3, C5, K4, BOWTIE, FUSED5, DUMBBELL, THETA7, TWO_TRIANGLES])
def test_bicritical_graphs(g):
    verdict = is_2bicritical(g)
    assert verdict.is_bicritical
    assert verdict.witness is None


@pytest.mark.parametrize("g, witness", [
    (C4, {0, 2}),
    (DIAMOND, {2, 3}),
    (Graph(4), {0}),
    (Graph(3, [(0, 1)]), {0}),
])
def test_smallest_witness(g, witness):
    verdict = is_2bicritical(g)
    assert not verdict.is_bicritical
    assert verdict.witness == frozenset(witness)
    assert len(g.neighborhood(verdict.witness)) <= len(verdict.witness)


def test_empty_graph_is_vacuously_bicritical():
    assert is_2bicritical(Graph(0)).is_bicritical


def test_oracle_limit():
    with pytest.raises(OracleLimitExceeded):
        is_2bicritical(Graph(27))


@settings(max_examples=40, deadline=None)
@given(families, seeds, st.integers(min_value=7, max_value=16))
def test_generated_families_are_bicritical(kind, seed, size_budget):
    g, recipe = random_family(kind, size_budget, seed)
    assert certify_by_recipe(recipe)
    assert is_2bicritical(g).is_bicritical


@settings(max_examples=40, deadline=None)
@given(seeds, st.integers(min_value=3, max_value=16))
def test_factor_critical_recipes_are_bicritical(seed, size_budget):
    recipe = random_factor_critical_recipe(size_budget, seed)
    g = build(recipe)
    assert g.n <= size_budget
    assert is_2bicritical(g).is_bicritical


@pytest.mark.parametrize("path_lens", [(1, 1, 1, 1, 1, 1), (3, 1, 1, 1, 1, 1), (1, 3, 1, 1, 3, 1)])
def test_odd_k4_homeomorphs_are_bicritical(path_lens):
    recipe = EarPendantRecipe(base=OddK4HomeomorphBase(path_lens=path_lens))
    g = build(recipe)
    assert g.n == 4 + sum(length - 1 for length in path_lens)
    assert certify_by_recipe(recipe)
    assert is_2bicritical(g).is_bicritical


def test_pendant_recipe_builds_dumbbell():
    recipe = EarPendantRecipe(
        base=OddCycleBase(len=3),
        steps=[PendantStep(cycle_len=3, path_len=1, attach=2)],
    )
    assert build(recipe) == DUMBBELL


def test_ear_recipe_builds_fused5():
    recipe = EarPendantRecipe(base=OddCycleBase(len=3), steps=[EarStep(u=0, v=1, internal_len=2)])
    assert build(recipe) == FUSED5


@pytest.mark.parametrize("step", [
    EarStep(u=0, v=1, internal_len=1),
    EarStep(u=0, v=1, internal_len=0),
    EarStep(u=0, v=7, internal_len=2),
    EarStep(u=0, v=0, internal_len=0),
    PendantStep(cycle_len=4, path_len=1, attach=0),
    PendantStep(cycle_len=3, path_len=0, attach=0),
    PendantStep(cycle_len=3, path_len=1, attach=5),
])
def test_invalid_steps_are_rejected(step):
    recipe = EarPendantRecipe(base=OddCycleBase(len=3), steps=[step])
    with pytest.raises(InvalidRecipeStep):
        build(recipe)


def test_invalid_step_reports_every_failed_rule():
    recipe = EarPendantRecipe(base=OddCycleBase(len=3), steps=[EarStep(u=0, v=9, internal_len=1)])
    with pytest.raises(InvalidRecipeStep, match="; "):
        build(recipe)


def test_even_base_cycle_is_rejected():
    with pytest.raises(InvalidRecipeStep):
        build(EarPendantRecipe(base=OddCycleBase(len=4)))


@pytest.mark.slow
def test_generated_recipes_are_bicritical_at_full_size():
    for i in range(500):
        kind = GENERATED_FAMILIES[i % len(GENERATED_FAMILIES)]
        g, recipe = random_family(kind, 24, SeedUtils.sub_seed(11, i))
        assert g.n <= 24
        assert certify_by_recipe(recipe)
        assert is_2bicritical(g).is_bicritical, recipe
