"""Finite simple graphs and the purely combinatorial operations on them."""

from __future__ import annotations

from collections.abc import Iterable, Mapping
from dataclasses import dataclass, field
from functools import cached_property

from .errors import (
    BadParameter,
    DuplicateVertex,
    LoopEdge,
    NotDisjoint,
    PartialMap,
    UnknownEdge,
    UnknownEndpoint,
    UnknownVertex,
)

Edge = tuple[str, str]
VertexMap = Mapping[str, str]


def edge(u: str, v: str) -> Edge:
    """Canonical (sorted) edge between two distinct vertices."""
    if u == v:
        raise LoopEdge(f"loop at {u!r}: simple graphs have no loops")
    return (u, v) if u < v else (v, u)


def _check_id(v: object) -> str:
    if not isinstance(v, str) or not v or any(c.isspace() for c in v):
        raise BadParameter(f"invalid vertex id {v!r}: need a nonempty string without whitespace")
    return v


@dataclass(frozen=True)
class Graph:
    """A finite simple graph.

    Instances are immutable and hashable.  Build them with :func:`make_graph`
    (validating) or directly from already-canonical frozensets.
    """

    vertices: frozenset[str] = field(default_factory=frozenset)
    edges: frozenset[Edge] = field(default_factory=frozenset)

    def __post_init__(self):
        for u, v in self.edges:
            if u >= v:
                raise BadParameter(f"edge {(u, v)!r} is not in canonical order")
            if u not in self.vertices or v not in self.vertices:
                raise UnknownEndpoint(f"edge {(u, v)!r} references a missing vertex")

    @cached_property
    def adjacency(self) -> dict[str, frozenset[str]]:
        adj: dict[str, set[str]] = {v: set() for v in self.vertices}
        for u, v in self.edges:
            adj[u].add(v)
            adj[v].add(u)
        return {v: frozenset(n) for v, n in adj.items()}

    @cached_property
    def sorted_vertices(self) -> tuple[str, ...]:
        return tuple(sorted(self.vertices))

    @cached_property
    def sorted_edges(self) -> tuple[Edge, ...]:
        return tuple(sorted(self.edges))

    def incident_edges(self, v: str) -> list[Edge]:
        self._require(v)
        return sorted(edge(v, w) for w in self.adjacency[v])

    def has_edge(self, u: str, v: str) -> bool:
        return u != v and edge(u, v) in self.edges

    def _require(self, v: str) -> None:
        if v not in self.vertices:
            raise UnknownVertex(f"vertex {v!r} not in graph")

    def __repr__(self) -> str:
        es = ", ".join(f"{u}-{v}" for u, v in self.sorted_edges)
        return f"Graph(V={list(self.sorted_vertices)}, E=[{es}])"

    def to_dict(self) -> dict:
        return {
            "vertices": list(self.sorted_vertices),
            "edges": [list(e) for e in self.sorted_edges],
        }


def make_graph(vertex_ids: Iterable[str], edge_pairs: Iterable[Iterable[str]] = ()) -> Graph:
    """Validate ids and edges and return the canonical graph.

    >>> make_graph(["v1", "v2", "v3"], [("v1", "v2"), ("v1", "v3")])
    Graph(V=['v1', 'v2', 'v3'], E=[v1-v2, v1-v3])
    """
    vertices: set[str] = set()
    for v in vertex_ids:
        _check_id(v)
        if v in vertices:
            raise DuplicateVertex(f"vertex {v!r} listed twice")
        vertices.add(v)
    edges = set()
    for pair in edge_pairs:
        pair = tuple(pair)
        if len(pair) != 2:
            raise BadParameter(f"edge {pair!r} does not have exactly two endpoints")
        u, v = pair
        e = edge(u, v)
        for x in e:
            if x not in vertices:
                raise UnknownEndpoint(f"edge {pair!r} references missing vertex {x!r}")
        edges.add(e)
    return Graph(frozenset(vertices), frozenset(edges))


def degree(g: Graph, v: str) -> int:
    g._require(v)
    return len(g.adjacency[v])


def isolated_vertices(g: Graph) -> frozenset[str]:
    return frozenset(v for v, nbrs in g.adjacency.items() if not nbrs)


def induced_subgraph(g: Graph, a: Iterable[str]) -> Graph:
    a = frozenset(a)
    for v in a:
        g._require(v)
    return Graph(a, frozenset(e for e in g.edges if e[0] in a and e[1] in a))


def is_subgraph(h: Graph, g: Graph) -> bool:
    return h.vertices <= g.vertices and h.edges <= g.edges


def disjoint_union(g: Graph, h: Graph) -> Graph:
    common = g.vertices & h.vertices
    if common:
        raise NotDisjoint(f"graphs share vertices {sorted(common)}")
    return Graph(g.vertices | h.vertices, g.edges | h.edges)


def subdivide_edge(g: Graph, e: Iterable[str], w: str) -> Graph:
    """Insert a new degree-2 vertex ``w`` into the edge ``e``."""
    u, v = edge(*e)
    if (u, v) not in g.edges:
        raise UnknownEdge(f"edge {(u, v)!r} not in graph")
    _check_id(w)
    if w in g.vertices:
        raise DuplicateVertex(f"vertex {w!r} already in graph")
    edges = (g.edges - {(u, v)}) | {edge(u, w), edge(w, v)}
    return Graph(g.vertices | {w}, frozenset(edges))


def components(g: Graph) -> list[Graph]:
    """Connected components, ordered by their smallest vertex id."""
    seen: set[str] = set()
    out = []
    for start in g.sorted_vertices:
        if start in seen:
            continue
        comp = {start}
        stack = [start]
        while stack:
            x = stack.pop()
            for y in g.adjacency[x]:
                if y not in comp:
                    comp.add(y)
                    stack.append(y)
        seen |= comp
        out.append(induced_subgraph(g, comp))
    return out


def is_connected(g: Graph) -> bool:
    return len(components(g)) == 1


def named_graph(kind: str, n: int = 0) -> Graph:
    """Standard graphs on vertex ids ``v1..vn``.

    ``kind`` is one of ``path``, ``cycle``, ``complete``, ``edgeless`` or
    ``petersen`` (the latter ignores ``n`` and uses ``v1..v10``, outer cycle
    ``v1..v5``, spokes ``vi-v(i+5)`` and the inner pentagram).
    """
    if kind == "petersen":
        ids = [f"v{i}" for i in range(1, 11)]
        outer = [(f"v{i}", f"v{i % 5 + 1}") for i in range(1, 6)]
        spokes = [(f"v{i}", f"v{i + 5}") for i in range(1, 6)]
        inner = [(f"v{6 + i}", f"v{6 + (i + 2) % 5}") for i in range(5)]
        return make_graph(ids, outer + spokes + inner)
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise BadParameter(f"{kind} graph needs a positive integer size, got {n!r}")
    ids = [f"v{i}" for i in range(1, n + 1)]
    if kind == "path":
        return make_graph(ids, zip(ids, ids[1:]))
    if kind == "cycle":
        if n < 3:
            raise BadParameter("cycles need at least 3 vertices")
        return make_graph(ids, zip(ids, ids[1:] + ids[:1]))
    if kind == "complete":
        return make_graph(ids, [(a, b) for i, a in enumerate(ids) for b in ids[i + 1:]])
    if kind == "edgeless":
        return make_graph(ids)
    raise BadParameter(f"unknown graph kind {kind!r}")


def _check_vertex_map(g: Graph, h: Graph, fv: VertexMap) -> None:
    missing = g.vertices - fv.keys()
    if missing:
        raise PartialMap(f"vertex map undefined on {sorted(missing)}")
    for v in g.vertices:
        if fv[v] not in h.vertices:
            raise PartialMap(f"image {fv[v]!r} of {v!r} is not a vertex of the codomain")


def is_homomorphism(g: Graph, h: Graph, fv: VertexMap) -> bool:
    _check_vertex_map(g, h, fv)
    return all(h.has_edge(fv[u], fv[v]) for u, v in g.edges)


def is_weak_homomorphism(g: Graph, h: Graph, fv: VertexMap) -> bool:
    _check_vertex_map(g, h, fv)
    return all(fv[u] == fv[v] or h.has_edge(fv[u], fv[v]) for u, v in g.edges)
