import logging
from itertools import combinations
from typing import Iterator, List, Tuple

import networkx as nx

from config import MIS_ORACLE_LIMIT
from exceptions.exception import NoSmallTransversal, OracleLimitExceeded
from graph_core import GraphLike, as_networkx, bipartition, is_independent, neighborhood
from models import IndependenceMethod, IndependenceProfile

logger = logging.getLogger(__name__)


def _check_oracle_limit(graph: nx.Graph, limit: int = MIS_ORACLE_LIMIT) -> None:
    n = graph.number_of_nodes()
    if n > limit:
        raise OracleLimitExceeded(f"Independence oracle limited to {limit} vertices, got {n}")


def _without(graph: nx.Graph, vertices) -> nx.Graph:
    dropped = set(vertices)
    return graph.subgraph([v for v in graph if v not in dropped])


def alpha_exact(g: GraphLike) -> int:
    """Exact α(G) as the maximum clique of the complement.

    The clique search is branch and bound with a greedy colouring bound, which on
    the complement is a greedy clique-cover bound on G.
    """
    graph = as_networkx(g)
    _check_oracle_limit(graph)
    if graph.number_of_nodes() == 0:
        return 0
    _, weight = nx.max_weight_clique(nx.complement(graph), weight=None)
    return weight


def iter_mis(g: GraphLike, alpha: int) -> Iterator[frozenset[int]]:
    """Yield every independent set of size alpha, in no particular order."""
    graph = as_networkx(g)
    if graph.number_of_nodes() == 0:
        yield frozenset()
        return
    for maximal in nx.find_cliques(nx.complement(graph)):
        if len(maximal) == alpha:
            yield frozenset(maximal)


def enumerate_mis(g: GraphLike) -> List[frozenset[int]]:
    graph = as_networkx(g)
    alpha = alpha_exact(graph)
    return sorted(iter_mis(graph, alpha), key=sorted)


def core_corona_oracle(g: GraphLike) -> IndependenceProfile:
    graph = as_networkx(g)
    alpha = alpha_exact(graph)
    core = None
    corona = set()
    count = 0
    for independent in iter_mis(graph, alpha):
        core = set(independent) if core is None else core & independent
        corona |= independent
        count += 1
    return IndependenceProfile(
        alpha=alpha,
        core=frozenset(core or ()),
        corona=frozenset(corona),
        mis_count=count,
        method=IndependenceMethod.ORACLE,
    )


def odd_cycle_transversal(g: GraphLike, max_size: int = 2) -> Tuple[int, ...]:
    """First T (by size, then lexicographic) with G - T bipartite."""
    graph = as_networkx(g)
    vertices = sorted(graph)
    for size in range(max_size + 1):
        for candidate in combinations(vertices, size):
            if bipartition(_without(graph, candidate)) is not None:
                return candidate
    raise NoSmallTransversal(f"No odd cycle transversal of size at most {max_size}")


def _alpha_bipartite(graph: nx.Graph) -> int:
    if graph.number_of_edges() == 0:
        return graph.number_of_nodes()
    side_a, _ = bipartition(graph)
    matched = nx.bipartite.hopcroft_karp_matching(graph, top_nodes=side_a)
    # König: α = n - μ on bipartite graphs
    return graph.number_of_nodes() - len(matched) // 2


def _alpha_with_transversal(graph: nx.Graph, transversal) -> int:
    members = [v for v in transversal if v in graph]
    best = 0
    for size in range(len(members) + 1):
        for chosen in combinations(members, size):
            if not is_independent(graph, chosen):
                continue
            rest = _without(graph, set(members) | neighborhood(graph, chosen))
            best = max(best, size + _alpha_bipartite(rest))
    return best


def alpha_poly_oct2(g: GraphLike) -> int:
    graph = as_networkx(g)
    return _alpha_with_transversal(graph, odd_cycle_transversal(graph))


def core_corona_poly(g: GraphLike) -> IndependenceProfile:
    graph = as_networkx(g)
    transversal = odd_cycle_transversal(graph)
    alpha = _alpha_with_transversal(graph, transversal)

    core = set()
    corona = set()
    for v in sorted(graph):
        if _alpha_with_transversal(_without(graph, [v]), transversal) == alpha - 1:
            core.add(v)
        closed = {v} | set(graph[v])
        if _alpha_with_transversal(_without(graph, closed), transversal) == alpha - 1:
            corona.add(v)

    return IndependenceProfile(
        alpha=alpha,
        core=frozenset(core),
        corona=frozenset(corona),
        method=IndependenceMethod.POLY_OCT2,
    )
