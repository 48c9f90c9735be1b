import logging
import random
from typing import List, Optional, Set, Tuple

import networkx as nx

from exceptions.exception import BudgetTooSmall, TheoremViolation, ValidationError, WrongFamily
from graph_core import Graph, bipartition, cycle_graph
from matching import is_matching_covered
from models import (
    MINIMUM_ORDER,
    EarPendantRecipe,
    EarStep,
    FamilyClassification,
    FamilyTag,
    OddCycleBase,
    OddK4HomeomorphBase,
    PendantStep,
)
from policy import ReplayState
from validators.recipe_validator import StepValidator

logger = logging.getLogger(__name__)

K4_EDGES = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]


class _Replay:
    def __init__(self):
        self.n = 0
        self.edges: Set[Tuple[int, int]] = set()

    @property
    def state(self) -> ReplayState:
        return ReplayState(self.n, frozenset(self.edges))

    def fresh(self, count: int) -> List[int]:
        created = list(range(self.n, self.n + count))
        self.n += count
        return created

    def path(self, vertices: List[int]) -> None:
        for u, v in zip(vertices, vertices[1:]):
            self.edges.add((min(u, v), max(u, v)))

    def odd_cycle(self, length: int) -> List[int]:
        created = self.fresh(length)
        for u, v in cycle_graph(length, offset=created[0]):
            self.edges.add((min(u, v), max(u, v)))
        return created

    def apply(self, item) -> None:
        StepValidator(item, self.state).validate()
        if isinstance(item, OddCycleBase):
            self.odd_cycle(item.len)
        elif isinstance(item, OddK4HomeomorphBase):
            corners = self.fresh(4)
            for (a, b), length in zip(K4_EDGES, item.path_lens):
                self.path([corners[a]] + self.fresh(length - 1) + [corners[b]])
        elif isinstance(item, EarStep):
            self.path([item.u] + self.fresh(item.internal_len) + [item.v])
        elif isinstance(item, PendantStep):
            inner = self.fresh(item.path_len - 1)
            cycle = self.odd_cycle(item.cycle_len)
            self.path([item.attach] + inner + [cycle[0]])


def build(recipe: EarPendantRecipe) -> Graph:
    replay = _Replay()
    replay.apply(recipe.base)
    for step in recipe.steps:
        replay.apply(step)
    for component in recipe.detached:
        replay.apply(component)
    return Graph(replay.n, replay.edges)


def _odd_lengths(low: int, high: int) -> List[int]:
    return [length for length in range(low, high + 1) if length % 2 == 1]


def _check_budget(kind: FamilyTag, size_budget: int) -> None:
    if kind not in MINIMUM_ORDER:
        raise WrongFamily(f"Cannot generate instances of {kind.value}")
    minimum = MINIMUM_ORDER[kind]
    if size_budget < minimum:
        raise BudgetTooSmall(f"{kind.value} needs at least {minimum} vertices, budget is {size_budget}")


def _one_odd_cycle(size_budget: int, rng: random.Random) -> EarPendantRecipe:
    return EarPendantRecipe(base=OddCycleBase(len=rng.choice(_odd_lengths(3, size_budget))))


def _fused_odd(size_budget: int, rng: random.Random) -> EarPendantRecipe:
    length = rng.choice(_odd_lengths(3, size_budget - 2))
    internal = [k for k in range(0, size_budget - length + 1, 2) if k > 0 or length >= 5]
    internal_len = rng.choice(internal)

    u = rng.randrange(length)
    if internal_len == 0:
        far = [v for v in range(length) if v != u and (v - u) % length not in (1, length - 1)]
        v = rng.choice(far)
    else:
        v = rng.randrange(length)
    return EarPendantRecipe(
        base=OddCycleBase(len=length),
        steps=[EarStep(u=u, v=v, internal_len=internal_len)],
    )


def _linked(size_budget: int, parity: int, rng: random.Random) -> EarPendantRecipe:
    min_path = 2 if parity == 0 else 1
    spare = size_budget - (3 + 3 + min_path - 1)

    grow = rng.randint(0, spare // 2)
    first_len = 3 + 2 * grow
    spare -= 2 * grow
    grow = rng.randint(0, spare // 2)
    second_len = 3 + 2 * grow
    spare -= 2 * grow
    grow = rng.randint(0, spare // 2)
    path_len = min_path + 2 * grow
    spare -= 2 * grow

    attach = rng.randrange(first_len)
    # P = x, inner path vertices, first vertex of the pendant cycle
    linking_path = [attach] + list(range(first_len, first_len + path_len))
    steps = [PendantStep(cycle_len=second_len, path_len=path_len, attach=attach)]

    chords = set()
    for _ in range(rng.randint(0, spare // 2 + 1)):
        candidates = []
        for i in range(len(linking_path)):
            for j in range(i + 1, len(linking_path), 2):
                lowest = 2 if j - i == 1 else 0
                if lowest == 0 and (i, j) in chords:
                    lowest = 2
                if lowest <= spare:
                    candidates.append((i, j, lowest))
        if not candidates:
            break
        i, j, lowest = rng.choice(candidates)
        internal_len = lowest + 2 * rng.randint(0, (spare - lowest) // 2)
        if internal_len == 0:
            chords.add((i, j))
        spare -= internal_len
        steps.append(EarStep(u=linking_path[i], v=linking_path[j], internal_len=internal_len))

    return EarPendantRecipe(base=OddCycleBase(len=first_len), steps=steps)


def _disconnected_pair(size_budget: int, rng: random.Random) -> EarPendantRecipe:
    first_len = rng.choice(_odd_lengths(3, size_budget - 3))
    second_len = rng.choice(_odd_lengths(3, size_budget - first_len))
    return EarPendantRecipe(base=OddCycleBase(len=first_len), detached=[OddCycleBase(len=second_len)])


def random_family(kind: FamilyTag, size_budget: int, seed: int) -> Tuple[Graph, EarPendantRecipe]:
    _check_budget(kind, size_budget)
    rng = random.Random(seed)

    if kind == FamilyTag.ONE_ODD_CYCLE:
        recipe = _one_odd_cycle(size_budget, rng)
    elif kind == FamilyTag.FUSED_ODD:
        recipe = _fused_odd(size_budget, rng)
    elif kind == FamilyTag.EVEN_LINKED:
        recipe = _linked(size_budget, 0, rng)
    elif kind == FamilyTag.ODD_LINKED:
        recipe = _linked(size_budget, 1, rng)
    else:
        recipe = _disconnected_pair(size_budget, rng)

    return build(recipe), recipe


def random_factor_critical_recipe(size_budget: int, seed: int) -> EarPendantRecipe:
    if size_budget < 3:
        raise BudgetTooSmall(f"Factor-critical graphs need at least 3 vertices, budget is {size_budget}")
    rng = random.Random(seed)
    length = rng.choice(_odd_lengths(3, size_budget))
    spare = size_budget - length
    n = length
    edges = {(min(u, v), max(u, v)) for u, v in cycle_graph(length)}
    steps = []

    for _ in range(rng.randint(0, spare // 2 + 1)):
        u, v = rng.randrange(n), rng.randrange(n)
        lowest = 0 if u != v and (min(u, v), max(u, v)) not in edges else 2
        if lowest > spare:
            continue
        internal_len = lowest + 2 * rng.randint(0, (spare - lowest) // 2)
        path = [u] + list(range(n, n + internal_len)) + [v]
        edges.update((min(a, b), max(a, b)) for a, b in zip(path, path[1:]))
        steps.append(EarStep(u=u, v=v, internal_len=internal_len))
        n += internal_len
        spare -= internal_len

    return EarPendantRecipe(base=OddCycleBase(len=length), steps=steps)


def random_factor_critical(size_budget: int, seed: int) -> Graph:
    return build(random_factor_critical_recipe(size_budget, seed))


def random_gnp(n: int, p: float, seed: int) -> Graph:
    if not 0.0 <= p <= 1.0:
        raise ValidationError(f"Edge probability must lie in [0, 1], got {p}")
    # edges are drawn in lexicographic pair order from random.Random(seed)
    return Graph.from_networkx(nx.gnp_random_graph(n, p, seed=seed))


def _augmentations(cls: FamilyClassification) -> List[Tuple[str, int]]:
    single = ("single vertex joined to x and y", 1)
    double = ("path x-w1-w2-y", 2)
    return [single, double] if cls.tag == FamilyTag.EVEN_LINKED else [double, single]


def _augment(g: Graph, x: int, y: int, added: int) -> Graph:
    chain = [x] + list(range(g.n, g.n + added)) + [y]
    return Graph(g.n + added, list(g.edges) + list(zip(chain, chain[1:])))


def companion_H(g: Graph, cls: FamilyClassification) -> Graph:
    """Bipartite matching-covered companion: H - X is an even cycle through P plus the odd ears on P."""
    if cls.tag not in (FamilyTag.EVEN_LINKED, FamilyTag.ODD_LINKED):
        raise WrongFamily(f"Companion graph is defined for linked families only, got {cls.tag.value}")

    for name, added in _augmentations(cls):
        h = _augment(g, cls.x, cls.y, added)
        core = h.nx.subgraph([v for v in h.vertices if v not in cls.X])
        if bipartition(core) is not None and is_matching_covered(core):
            logger.info(f"Companion graph for {cls.tag.value} built with augmentation: {name}")
            return h
        logger.info(f"Augmentation '{name}' does not make H - X matching-covered for {cls.tag.value}")

    raise TheoremViolation(f"No augmentation makes H - X bipartite and matching-covered ({cls.tag.value})")
