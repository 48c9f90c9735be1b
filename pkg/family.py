import logging
from typing import Iterator, List, Sequence, Tuple

import networkx as nx

from bicritical import is_2bicritical
from config import CYCLE_CAP
from exceptions.exception import StructureViolation
from graph_core import Graph, bipartition, connected_components
from models import CycleList, FamilyClassification, FamilyTag

logger = logging.getLogger(__name__)


def canonical_cycle(cycle: Sequence[int]) -> Tuple[int, ...]:
    """Rotate to start at the minimum vertex, then orient towards its smaller cycle neighbour."""
    start = cycle.index(min(cycle))
    rotated = list(cycle[start:]) + list(cycle[:start])
    if len(rotated) > 2 and rotated[-1] < rotated[1]:
        rotated = [rotated[0]] + rotated[1:][::-1]
    return tuple(rotated)


def _canonical_cycles(g: Graph) -> Iterator[Tuple[int, ...]]:
    seen = set()
    for cycle in nx.simple_cycles(g.nx):
        if len(cycle) < 3:
            continue
        canonical = canonical_cycle(cycle)
        if canonical not in seen:
            seen.add(canonical)
            yield canonical


def enumerate_cycles(g: Graph, cap: int = CYCLE_CAP) -> CycleList:
    if cap < 1:
        raise ValueError(f"Cycle cap must be positive, got {cap}")

    found = []
    truncated = False
    for canonical in _canonical_cycles(g):
        if len(found) == cap:
            truncated = True
            break
        found.append(canonical)

    cycles = sorted(found, key=lambda c: (len(c), c))
    odd_count = sum(1 for c in cycles if len(c) % 2 == 1)
    if truncated:
        logger.warning(f"Cycle enumeration truncated at {cap} cycles; counts are lower bounds")
    return CycleList(cycles=cycles, odd_count=odd_count, truncated=truncated)


def _out_of_scope(reason: str, cycles: CycleList) -> FamilyClassification:
    odd = cycles.odd_cycles
    return FamilyClassification(
        tag=FamilyTag.OUT_OF_SCOPE,
        C=odd[0] if odd else (),
        C_prime=odd[1] if len(odd) > 1 else None,
        reason=reason,
    )


def _cycle_edges(cycle: Sequence[int]) -> set:
    return {(min(u, v), max(u, v)) for u, v in zip(cycle, list(cycle[1:]) + [cycle[0]])}


def _attachment(g: Graph, cycle: Sequence[int]) -> int:
    attachments = [v for v in cycle if g.degree(v) >= 3]
    if len(attachments) != 1:
        raise StructureViolation(
            f"Cycle {list(cycle)} has {len(attachments)} vertices of degree >= 3, expected exactly one"
        )
    return attachments[0]


def _classify_pair(g: Graph, first: Tuple[int, ...], second: Tuple[int, ...]) -> FamilyClassification:
    components = connected_components(g)
    if len(components) > 1:
        spans = {frozenset(first), frozenset(second)} == set(components)
        if len(components) == 2 and spans and g.m == g.n:
            return FamilyClassification(tag=FamilyTag.DISCONNECTED_PAIR, C=first, C_prime=second)
        raise StructureViolation("Disconnected graph is not a pair of odd cycles")

    shared = frozenset(first) & frozenset(second)
    if shared:
        union_vertices = frozenset(first) | frozenset(second)
        union_edges = _cycle_edges(first) | _cycle_edges(second)
        if union_vertices != frozenset(g.vertices) or union_edges != set(g.edges):
            raise StructureViolation("Overlapping odd cycles do not cover the graph")
        return FamilyClassification(
            tag=FamilyTag.FUSED_ODD,
            C=first,
            C_prime=second,
            shared=shared,
            x=min(shared) if len(shared) == 1 else None,
        )

    x, y = _attachment(g, first), _attachment(g, second)
    cycle_vertices = frozenset(first) | frozenset(second)
    X = frozenset(v for v in cycle_vertices if g.degree(v) == 2)
    linked = g.nx.subgraph([v for v in g.vertices if v not in X])
    if not nx.is_connected(linked):
        raise StructureViolation("G - X is disconnected")
    sides = bipartition(linked)
    if sides is None:
        raise StructureViolation("G - X is not bipartite")

    side_a, side_b = sides if x in sides[0] else (sides[1], sides[0])
    if y in side_a:
        tag = FamilyTag.EVEN_LINKED
        if len(side_a) != len(side_b) + 1:
            raise StructureViolation(f"Even-linked parts have sizes {len(side_a)} and {len(side_b)}")
    else:
        tag = FamilyTag.ODD_LINKED
        if len(side_a) != len(side_b):
            raise StructureViolation(f"Odd-linked parts have sizes {len(side_a)} and {len(side_b)}")

    return FamilyClassification(tag=tag, C=first, C_prime=second, x=x, y=y, X=X, A=side_a, B=side_b)


def _odd_cycles_upto(g: Graph, limit: int, cap: int) -> CycleList:
    """Cycles until `cap` are seen or the odd ones exceed `limit`; odd_count then reads limit + 1."""
    found: List[Tuple[int, ...]] = []
    odd_count = 0
    truncated = False
    for canonical in _canonical_cycles(g):
        if len(found) == cap:
            truncated = True
            break
        found.append(canonical)
        odd_count += len(canonical) % 2
        if odd_count > limit:
            break
    found.sort(key=lambda c: (len(c), c))
    return CycleList(cycles=found, odd_count=odd_count, truncated=truncated)


def classify(g: Graph, assume_bicritical: bool = False, cap: int = CYCLE_CAP) -> FamilyClassification:
    cycles = _odd_cycles_upto(g, 2, cap)
    if cycles.truncated:
        return _out_of_scope(f"cycle enumeration truncated at {cap}", cycles)
    if cycles.odd_count > 2:
        return _out_of_scope("more than two odd cycles", cycles)
    if cycles.odd_count == 0:
        # a nonempty bipartite graph always has a side S with |N(S)| <= |S|
        return _out_of_scope("not 2-bicritical" if g.n else "empty graph", cycles)

    if not assume_bicritical and not is_2bicritical(g).is_bicritical:
        return _out_of_scope("not 2-bicritical", cycles)

    odd = cycles.odd_cycles
    if cycles.odd_count == 1:
        if len(odd[0]) == g.n and g.m == g.n:
            return FamilyClassification(tag=FamilyTag.ONE_ODD_CYCLE, C=odd[0])
        return _out_of_scope("unique odd cycle does not span the graph", cycles)

    classification = _classify_pair(g, odd[0], odd[1])
    logger.info(f"Classified graph with n={g.n}, m={g.m} as {classification.tag.value}")
    return classification
