import logging
import random
from typing import Dict, Iterable, List, Optional, Tuple

import networkx as nx

from config import MATCHING_ORACLE_LIMIT
from exceptions.exception import OracleLimitExceeded, OverlappingSets, TheoremViolation
from graph_core import GraphLike, as_networkx, connected_components, is_independent, neighborhood
from models import GallaiEdmonds, Matching

logger = logging.getLogger(__name__)


def _without(graph: nx.Graph, vertices: Iterable[int]) -> nx.Graph:
    dropped = set(vertices)
    return graph.subgraph([v for v in graph if v not in dropped])


def matching_number(g: GraphLike) -> int:
    return len(nx.max_weight_matching(as_networkx(g), maxcardinality=True))


def maximum_matching(g: GraphLike) -> Matching:
    """Blossom matching; `gallai_edmonds` certifies its size against the Tutte-Berge bound."""
    graph = as_networkx(g)
    pairs = nx.max_weight_matching(graph, maxcardinality=True)
    if not nx.is_matching(graph, pairs):
        raise TheoremViolation(f"Blossom search returned a non-matching: {sorted(pairs)}")
    return Matching.from_pairs(pairs)


def matching_number_exhaustive(g: GraphLike) -> int:
    """μ by exhaustive branching on the lowest remaining vertex; the oracle for `maximum_matching`."""
    graph = as_networkx(g)
    if graph.number_of_nodes() > MATCHING_ORACLE_LIMIT:
        raise OracleLimitExceeded(
            f"Exhaustive matching limited to {MATCHING_ORACLE_LIMIT} vertices, got {graph.number_of_nodes()}"
        )
    memo: Dict[frozenset, int] = {}

    def best(remaining: frozenset) -> int:
        if len(remaining) < 2:
            return 0
        if remaining in memo:
            return memo[remaining]
        v = min(remaining)
        rest = remaining - {v}
        value = best(rest)
        for u in graph[v]:
            if u in rest:
                value = max(value, 1 + best(rest - {u}))
        memo[remaining] = value
        return value

    return best(frozenset(graph.nodes))


def is_factor_critical(g: GraphLike) -> bool:
    graph = as_networkx(g)
    n = graph.number_of_nodes()
    if n % 2 == 0:
        return False
    target = (n - 1) // 2
    return all(matching_number(_without(graph, [v])) == target for v in sorted(graph))


def is_matching_covered(g: GraphLike) -> bool:
    graph = as_networkx(g)
    n = graph.number_of_nodes()
    if n == 0 or n % 2 == 1 or not nx.is_connected(graph):
        return False
    if matching_number(graph) != n // 2:
        return False
    target = n // 2 - 1
    return all(matching_number(_without(graph, edge)) == target for edge in sorted(graph.edges))


def tutte_berge_bound(g: GraphLike, barrier: Iterable[int]) -> int:
    """(n + |S| - odd(G - S)) / 2, an upper bound on μ for every S."""
    graph = as_networkx(g)
    removed = frozenset(barrier)
    odd = sum(1 for component in connected_components(_without(graph, removed)) if len(component) % 2 == 1)
    return (graph.number_of_nodes() + len(removed) - odd) // 2


def gallai_edmonds(g: GraphLike) -> GallaiEdmonds:
    graph = as_networkx(g)
    size = matching_number(graph)
    deficient = frozenset(
        v for v in sorted(graph) if matching_number(_without(graph, [v])) == size
    )
    barrier = neighborhood(graph, deficient) - deficient
    rest = frozenset(graph.nodes) - deficient - barrier
    decomposition = GallaiEdmonds(D=deficient, A=barrier, C=rest)
    _check_gallai_edmonds(graph, decomposition)
    return decomposition


def _check_gallai_edmonds(graph: nx.Graph, ge: GallaiEdmonds) -> None:
    components = connected_components(graph.subgraph(ge.D))
    for component in components:
        if not is_factor_critical(graph.subgraph(component)):
            raise TheoremViolation(f"Component {sorted(component)} of G[D] is not factor-critical")

    owner = {v: i for i, component in enumerate(components) for v in component}
    matching = maximum_matching(graph)
    bound = tutte_berge_bound(graph, ge.A)
    if matching.size != bound:
        raise TheoremViolation(
            f"Matching of size {matching.size} misses the Tutte-Berge bound {bound} at A = {sorted(ge.A)}"
        )
    if not ge.C <= matching.covered:
        raise TheoremViolation(f"Maximum matching misses vertices of C: {sorted(ge.C - matching.covered)}")

    used = set()
    for a in sorted(ge.A):
        partner = matching.partner(a)
        if partner not in owner or owner[partner] in used:
            raise TheoremViolation(f"Barrier vertex {a} is not matched into a distinct D-component")
        used.add(owner[partner])


def can_match_into(g: GraphLike, T: Iterable[int], S: Iterable[int]) -> Optional[Matching]:
    """Match every t in T to a distinct neighbour in S, exploring in ascending vertex order."""
    graph = as_networkx(g)
    sources, targets = frozenset(T), frozenset(S)
    if sources & targets:
        raise OverlappingSets(f"T and S overlap on {sorted(sources & targets)}")
    if len(sources) > len(targets):
        return None

    owner: Dict[int, int] = {}

    def augment(t: int, visited: set) -> bool:
        for s in sorted(graph[t]):
            if s not in targets or s in visited:
                continue
            visited.add(s)
            if s not in owner or augment(owner[s], visited):
                owner[s] = t
                return True
        return False

    for t in sorted(sources):
        if not augment(t, set()):
            return None
    return Matching.from_pairs((t, s) for s, t in owner.items())


def is_maximum_by_matchability(g: GraphLike, S: Iterable[int]) -> bool:
    """An independent S is maximum iff every independent set disjoint from S matches into S."""
    graph = as_networkx(g)
    members = frozenset(S)
    if not is_independent(graph, members):
        return False
    outside = _without(graph, members)
    # maximal independent sets of G - S are the maximal cliques of its complement
    for maximal in nx.find_cliques(nx.complement(outside)):
        if can_match_into(graph, maximal, members) is None:
            return False
    return True


def is_core_vertex_by_matchability(g: GraphLike, S: Iterable[int], v: int) -> bool:
    """True iff v ∈ core(G) and S is maximum: every independent T disjoint from S matches into S - {v}."""
    graph = as_networkx(g)
    members = frozenset(S)
    if v not in members or not is_independent(graph, members):
        return False
    outside = _without(graph, members)
    for maximal in nx.find_cliques(nx.complement(outside)):
        if can_match_into(graph, maximal, members - {v}) is None:
            return False
    return True


def has_perfect_matching_after(g: GraphLike, vertices: Iterable[int]) -> bool:
    graph = _without(as_networkx(g), vertices)
    n = graph.number_of_nodes()
    return n % 2 == 0 and matching_number(graph) == n // 2


def failing_cross_pairs(
    g: GraphLike,
    side_a: Iterable[int],
    side_b: Iterable[int],
    samples: int,
    rng: random.Random,
) -> List[Tuple[int, int]]:
    """Sample cross pairs (v in A, w in B) and return those where G - v - w has no perfect matching."""
    left, right = sorted(side_a), sorted(side_b)
    if not left or not right:
        return []
    failures = []
    for _ in range(samples):
        v, w = rng.choice(left), rng.choice(right)
        if not has_perfect_matching_after(g, (v, w)):
            failures.append((v, w))
    return failures
