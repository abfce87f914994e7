"""Structure of continuous vertex maps: fibres, the two factorizations, and
injective / homeomorphic maps."""

from __future__ import annotations

from collections.abc import Callable, Sequence
from dataclasses import dataclass

from .errors import (
    Disconnected,
    FoldedEdge,
    InverseNotContinuous,
    IsolatedVertexPresent,
    NotBijective,
    NotContinuous,
    NotInjective,
    NotVertexMap,
)
from .graph import Edge, Graph, components, edge, induced_subgraph, is_homomorphism, isolated_vertices
from .maps import (
    PointMap,
    _induced,
    classify,
    compose,
    folded_edges,
    identity_map,
    is_continuous,
    is_vertex_map,
    vertex_identification,
)
from .topology import Point, space

CONTRACTION_THEN_INCIDENCE = "contraction_then_incidence"
INCIDENCE_THEN_CONTRACTION = "incidence_then_contraction"


@dataclass(frozen=True)
class Factorization:
    """``second o first`` equals the factored map.

    ``contractions`` replays the contraction factor through
    :func:`bareo.maps.contraction_script`: pairs of (edge, merged-vertex name),
    edges named in the graph current at their step.
    """

    middle: Graph
    first: PointMap
    second: PointMap
    order: str
    contractions: tuple[tuple[Edge, str], ...] = ()

    def to_dict(self) -> dict:
        return {
            "middle": self.middle.to_dict(),
            "first": self.first.to_dict(),
            "second": self.second.to_dict(),
            "order": self.order,
        }


@dataclass(frozen=True)
class FiberReport:
    target_vertex: str
    pieces: list[Graph]
    independent_sets: list[frozenset[str]]

    def to_dict(self) -> dict:
        return {
            "target_vertex": self.target_vertex,
            "pieces": [p.to_dict() for p in self.pieces],
            "independent_sets": [sorted(s) for s in self.independent_sets],
        }


def _require_continuous_vertex_map(f: PointMap) -> None:
    if not is_vertex_map(f):
        raise NotVertexMap("some vertex is sent to an edge (apply vertexify first)")
    if not is_continuous(f):
        raise NotContinuous("map is not continuous")


def _require_factorable(f: PointMap) -> None:
    _require_continuous_vertex_map(f)
    folded = folded_edges(f)
    if folded:
        raise FoldedEdge(f"edges {folded} go to edges while their endpoints share an image")
    if len(components(f.domain)) != 1:
        raise Disconnected("factorization needs a connected domain")


def _fresh(taken: set[str] | frozenset[str], base: str) -> str:
    name, k = base, 1
    while name in taken:
        name = f"{base}#{k}"
        k += 1
    return name


def _greedy_classes(g: Graph) -> list[frozenset[str]]:
    color: dict[str, int] = {}
    for v in g.sorted_vertices:
        used = {color[u] for u in g.adjacency[v] if u in color}
        color[v] = next(c for c in range(len(used) + 1) if c not in used)
    classes: dict[int, set[str]] = {}
    for v, c in color.items():
        classes.setdefault(c, set()).add(v)
    return [frozenset(classes[c]) for c in sorted(classes)]


def fiber_structure(f: PointMap, w: str) -> FiberReport:
    """Split the vertex fibre over ``w`` into connected pieces and independent sets."""
    _require_continuous_vertex_map(f)
    f.codomain._require(w)
    fibre = [v for v, x in f.vertex_restriction().items() if x == w]
    sub = induced_subgraph(f.domain, fibre)
    pieces = components(sub)
    where = {v: k for k, p in enumerate(pieces) for v in p.vertices}
    for a, b in f.domain.edges:
        if a in where and b in where and where[a] != where[b]:
            raise RuntimeError(f"fibre pieces joined by edge {a}-{b}")
    return FiberReport(w, pieces, _greedy_classes(sub))


def factor_contraction_first(
    f: PointMap, choose: Callable[[Sequence[Edge]], Edge] = min
) -> Factorization:
    """Contract collapsed edges one at a time until the rest is an incidence map.

    At each step the edge picked by ``choose`` (default: the smallest) among
    the edges whose endpoints share an image is contracted, and the residual
    map is pushed down to the quotient.
    """
    _require_factorable(f)
    current = f.domain
    first = identity_map(current)
    residual: dict[Point, Point] = dict(f.images)
    script: list[tuple[Edge, str]] = []
    while True:
        collapsed = [
            e for e in current.sorted_edges
            if residual[Point.vertex(e[0])] == residual[Point.vertex(e[1])]
        ]
        if not collapsed:
            break
        a, b = choose(collapsed)
        w = _fresh(current.vertices - {a, b}, f"{a}+{b}")
        step = vertex_identification(current, a, b, w)
        pushed: dict[Point, Point] = {}
        for p, img in residual.items():
            q = step.map(p)
            if pushed.setdefault(q, img) != img:
                raise RuntimeError(f"residual map not well defined at {q!r}")
        first = compose(first, step.map)
        current, residual = step.quotient, pushed
        script.append(((a, b), w))
    second = PointMap(current, f.codomain, residual)
    out = Factorization(current, first, second, CONTRACTION_THEN_INCIDENCE, tuple(script))
    _verify(f, out)
    return out


def factor_incidence_first(f: PointMap) -> Factorization:
    """Embed the domain into a larger graph, then contract onto the codomain.

    The middle graph keeps every domain vertex and edge, adds one fresh vertex
    per codomain vertex with an empty fibre, chains the pieces of each fibre
    through their smallest vertices, and adds a bridging edge for each codomain
    edge that no domain edge reaches.  The first factor is the inclusion; the
    second contracts every edge inside a fibre.
    """
    _require_factorable(f)
    g, h = f.domain, f.codomain
    label = dict(f.vertex_restriction())
    vertices = set(g.vertices)
    edges = set(g.edges)
    rep: dict[str, str] = {}
    for w in h.sorted_vertices:
        fibre = [v for v in g.sorted_vertices if label[v] == w]
        if not fibre:
            fresh = _fresh(vertices, w)
            vertices.add(fresh)
            label[fresh] = w
            rep[w] = fresh
            continue
        reps = sorted(min(p.vertices) for p in components(induced_subgraph(g, fibre)))
        rep[w] = reps[0]
        edges.update(edge(a, b) for a, b in zip(reps, reps[1:]))
    reached = {edge(label[a], label[b]) for a, b in g.edges if label[a] != label[b]}
    for x, y in h.sorted_edges:
        if (x, y) not in reached:
            edges.add(edge(rep[x], rep[y]))
    middle = Graph(frozenset(vertices), frozenset(edges))
    first = PointMap(g, middle, {p: p for p in space(g).points})
    second = _induced(middle, h, label)

    script: list[tuple[Edge, str]] = []
    current, cur_label = middle, dict(label)
    while True:
        inner = [e for e in current.sorted_edges if cur_label[e[0]] == cur_label[e[1]]]
        if not inner:
            break
        a, b = inner[0]
        w = _fresh(current.vertices - {a, b}, f"{a}+{b}")
        current = vertex_identification(current, a, b, w).quotient
        cur_label[w] = cur_label.pop(a)
        cur_label.pop(b)
        script.append(((a, b), w))
    out = Factorization(middle, first, second, INCIDENCE_THEN_CONTRACTION, tuple(script))
    _verify(f, out)
    return out


def _verify(f: PointMap, fac: Factorization) -> None:
    if compose(fac.first, fac.second) != f:
        raise RuntimeError("factorization does not compose back to the input map")
    c1, c2 = classify(fac.first), classify(fac.second)
    if fac.order == CONTRACTION_THEN_INCIDENCE:
        ok = c1.contraction_like and c2.incidence_map
    else:
        ok = c1.incidence_map and c2.contraction_like
    if not ok:
        raise RuntimeError(f"factors of a {fac.order} factorization have the wrong classes")


def restrict_injective_to_hom(f: PointMap) -> dict[str, str]:
    """Vertex restriction of an injective continuous map, checked to be an injective homomorphism."""
    if len(set(f.table)) != len(f.table):
        raise NotInjective("map is not injective")
    if not is_continuous(f):
        raise NotContinuous("map is not continuous")
    iso = isolated_vertices(f.domain)
    if iso:
        raise IsolatedVertexPresent(f"domain has isolated vertices {sorted(iso)}")
    r = f.vertex_restriction()
    if len(r) != len(f.domain.vertices) or not is_homomorphism(f.domain, f.codomain, r):
        raise RuntimeError("injective continuous map did not restrict to a homomorphism")
    return r


def _inverse(f: PointMap) -> PointMap:
    inv = [0] * len(f.table)
    for i, j in enumerate(f.table):
        inv[j] = i
    return PointMap.from_table(f.codomain, f.domain, inv)


def homeomorphism_to_isomorphism(f: PointMap) -> dict[str, str]:
    """The graph isomorphism underlying a homeomorphism of bare representations."""
    if len(set(f.table)) != len(f.table) or len(f.table) != space(f.codomain).size:
        raise NotBijective("map is not a bijection")
    if not is_continuous(f):
        raise NotContinuous("map is not continuous")
    inv = _inverse(f)
    if not is_continuous(inv):
        raise InverseNotContinuous("inverse map is not continuous")
    r, rinv = f.vertex_restriction(), inv.vertex_restriction()
    if (
        len(r) != len(f.domain.vertices)
        or len(rinv) != len(f.codomain.vertices)
        or not is_homomorphism(f.domain, f.codomain, r)
        or not is_homomorphism(f.codomain, f.domain, rinv)
    ):
        raise RuntimeError("homeomorphism did not restrict to a graph isomorphism")
    return r
