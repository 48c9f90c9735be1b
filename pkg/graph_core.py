import json
import logging
from typing import Dict, Iterable, List, Optional, Sequence, Tuple, Union

import networkx as nx

from exceptions.exception import (
    DuplicateEdge,
    InvalidCharacter,
    MalformedEdgeLine,
    MalformedHeader,
    SelfLoop,
    TruncatedPayload,
    VertexOutOfRange,
)

logger = logging.getLogger(__name__)

GRAPH6_HEADER = ">>graph6<<"


class Graph:
    """Immutable simple undirected graph on the vertices 0..n-1.

    Every algorithm module reads it through `nx`, a frozen networkx view, so
    that vertex-deleted minors can be passed around as subgraph views without
    copying or relabelling.
    """

    __slots__ = ("_n", "_edges", "_adjacency", "_nx")

    def __init__(self, n: int, edges: Iterable[Sequence[int]] = ()):
        if n < 0:
            raise MalformedHeader(f"Vertex count must be non-negative, got {n}")
        seen = set()
        adjacency: List[List[int]] = [[] for _ in range(n)]
        for edge in edges:
            u, v = int(edge[0]), int(edge[1])
            for w in (u, v):
                if not 0 <= w < n:
                    raise VertexOutOfRange(f"Vertex {w} outside 0..{n - 1}")
            if u == v:
                raise SelfLoop(f"Self-loop at vertex {u}")
            key = (min(u, v), max(u, v))
            if key in seen:
                raise DuplicateEdge(f"Duplicate edge {key[0]} {key[1]}")
            seen.add(key)
            adjacency[u].append(v)
            adjacency[v].append(u)

        self._n = n
        self._edges = tuple(sorted(seen))
        self._adjacency = tuple(tuple(sorted(neighbors)) for neighbors in adjacency)
        graph = nx.Graph()
        graph.add_nodes_from(range(n))
        graph.add_edges_from(self._edges)
        self._nx = nx.freeze(graph)

    @classmethod
    def from_networkx(cls, graph: nx.Graph) -> "Graph":
        """Copy-construct from any networkx graph, relabelling nodes in ascending order."""
        order = {v: i for i, v in enumerate(sorted(graph.nodes))}
        return cls(len(order), ((order[u], order[v]) for u, v in graph.edges))

    @property
    def n(self) -> int:
        return self._n

    @property
    def m(self) -> int:
        return len(self._edges)

    @property
    def edges(self) -> Tuple[Tuple[int, int], ...]:
        return self._edges

    @property
    def adjacency(self) -> Tuple[Tuple[int, ...], ...]:
        return self._adjacency

    @property
    def nx(self) -> nx.Graph:
        return self._nx

    @property
    def vertices(self) -> range:
        return range(self._n)

    def neighbors(self, v: int) -> Tuple[int, ...]:
        return self._adjacency[v]

    def degree(self, v: int) -> int:
        return len(self._adjacency[v])

    def neighborhood(self, vertices: Iterable[int]) -> frozenset[int]:
        return neighborhood(self._nx, vertices)

    def has_edge(self, u: int, v: int) -> bool:
        return self._nx.has_edge(u, v)

    def __eq__(self, other) -> bool:
        return isinstance(other, Graph) and self._n == other._n and self._edges == other._edges

    def __hash__(self) -> int:
        return hash((self._n, self._edges))

    def __repr__(self) -> str:
        return f"Graph(n={self._n}, m={self.m})"


GraphLike = Union[Graph, nx.Graph]


def as_networkx(g: GraphLike) -> nx.Graph:
    return g.nx if isinstance(g, Graph) else g


def neighborhood(graph: nx.Graph, vertices: Iterable[int]) -> frozenset[int]:
    result = set()
    for v in vertices:
        result.update(graph[v])
    return frozenset(result)


def is_independent(g: GraphLike, vertices: Iterable[int]) -> bool:
    graph = as_networkx(g)
    members = set(vertices)
    return all(u not in members for v in members for u in graph[v])


def _content_lines(text: str) -> List[str]:
    lines = []
    for raw in text.splitlines():
        line = raw.strip()
        if line and not line.startswith("#"):
            lines.append(line)
    return lines


def _parse_ints(line: str, expected: int) -> Optional[List[int]]:
    parts = line.split()
    if len(parts) != expected:
        return None
    try:
        return [int(part) for part in parts]
    except ValueError:
        return None


def parse_edge_list(text: Union[str, bytes]) -> Graph:
    if isinstance(text, bytes):
        try:
            text = text.decode("utf-8")
        except UnicodeDecodeError as e:
            raise MalformedHeader(f"Edge list is not valid UTF-8: {e}")

    lines = _content_lines(text)
    if not lines:
        raise MalformedHeader("Missing 'n m' header line")

    header = _parse_ints(lines[0], 2)
    if header is None or header[0] < 0 or header[1] < 0:
        raise MalformedHeader(f"Invalid header line: {lines[0]!r}")
    n, m = header

    body = lines[1:]
    if len(body) != m:
        raise MalformedHeader(f"Header declares {m} edges, found {len(body)} edge lines")

    edges = []
    for line in body:
        pair = _parse_ints(line, 2)
        if pair is None:
            raise MalformedEdgeLine(f"Invalid edge line: {line!r}")
        edges.append(pair)
    return Graph(n, edges)


def to_edge_list(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(lines) + "\n"


def parse_graph6(line: Union[str, bytes]) -> Graph:
    if isinstance(line, bytes):
        line = line.decode("ascii", errors="replace")
    payload = line.strip()
    if payload.startswith(GRAPH6_HEADER):
        payload = payload[len(GRAPH6_HEADER):].strip()
    if not payload:
        raise TruncatedPayload("Empty graph6 string")

    for position, char in enumerate(payload):
        if not 63 <= ord(char) <= 126:
            raise InvalidCharacter(f"Byte {ord(char)} at position {position} outside graph6 range 63..126")

    try:
        graph = nx.from_graph6_bytes(payload.encode("ascii"))
    except (nx.NetworkXError, ValueError, IndexError) as e:
        raise TruncatedPayload(f"Invalid graph6 payload {payload!r}: {e}")
    return Graph(graph.number_of_nodes(), graph.edges)


def to_graph6(g: Graph) -> str:
    return nx.to_graph6_bytes(g.nx, nodes=list(g.vertices), header=False).decode("ascii").strip()


def to_json(g: Graph) -> Dict:
    return {"n": g.n, "edges": [list(edge) for edge in g.edges]}


def from_json(data: Union[str, Dict]) -> Graph:
    if isinstance(data, str):
        data = json.loads(data)
    return Graph(data["n"], data["edges"])


def connected_components(g: GraphLike) -> List[frozenset[int]]:
    components = [frozenset(c) for c in nx.connected_components(as_networkx(g))]
    return sorted(components, key=min)


def bipartition(g: GraphLike) -> Optional[Tuple[frozenset[int], frozenset[int]]]:
    """2-colouring with the lowest vertex of every component placed in A; None iff an odd cycle exists."""
    graph = as_networkx(g)
    try:
        colour = nx.bipartite.color(graph)
    except nx.NetworkXError:
        return None

    side_a = set()
    for component in connected_components(graph):
        anchor = colour[min(component)]
        side_a.update(v for v in component if colour[v] == anchor)
    side_b = set(graph.nodes) - side_a
    return frozenset(side_a), frozenset(side_b)


def cycle_graph(length: int, offset: int = 0) -> List[Tuple[int, int]]:
    return [(offset + i, offset + (i + 1) % length) for i in range(length)]
