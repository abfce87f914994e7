"""Total maps between bare representations.

Covers construction (from homomorphisms, weak homomorphisms, vertex
identifications, contraction scripts, subdivisions), the sub-basis continuity
check, classification, and vertexification of continuous maps.
"""

from __future__ import annotations

from collections.abc import Iterable, Mapping, Sequence
from dataclasses import dataclass, field
from functools import cached_property

from .errors import (
    DomainMismatch,
    NameClash,
    NotASubdivision,
    NotContinuous,
    NotHomomorphism,
    NotWeakHomomorphism,
    PartialMap,
    SameVertex,
    StaleEdge,
    UnknownPoint,
)
from .graph import (
    Edge,
    Graph,
    VertexMap,
    _check_id,
    components,
    edge,
    induced_subgraph,
    is_homomorphism,
    is_weak_homomorphism,
)
from .topology import BareSpace, Point, PointLike, PointSet, as_point, space

V = Point.vertex


def E(e: Iterable[str]) -> Point:
    return Point.edge(*e)


class PointMap:
    """A total function B(domain) -> B(codomain).

    Immutable.  Internally the map is also kept as ``table``: the codomain
    point index of every domain point, in :class:`~bareo.topology.BareSpace`
    order.
    """

    def __init__(self, domain: Graph, codomain: Graph, images: Mapping[PointLike, PointLike]):
        dsp, csp = space(domain), space(codomain)
        table = [-1] * dsp.size
        for p, q in images.items():
            p, q = as_point(p), as_point(q)
            try:
                i = dsp.index[p]
            except KeyError:
                raise UnknownPoint(f"{p!r} is not a point of the domain") from None
            try:
                table[i] = csp.index[q]
            except KeyError:
                raise UnknownPoint(f"image {q!r} of {p!r} is not a point of the codomain") from None
        missing = [dsp.points[i] for i, j in enumerate(table) if j < 0]
        if missing:
            raise PartialMap(f"map undefined on {missing}")
        self.domain = domain
        self.codomain = codomain
        self.table = tuple(table)

    @classmethod
    def from_table(cls, domain: Graph, codomain: Graph, table: Sequence[int]) -> "PointMap":
        f = cls.__new__(cls)
        f.domain, f.codomain, f.table = domain, codomain, tuple(table)
        return f

    @cached_property
    def images(self) -> dict[Point, Point]:
        dp, cp = space(self.domain).points, space(self.codomain).points
        return {dp[i]: cp[j] for i, j in enumerate(self.table)}

    def __call__(self, p: PointLike) -> Point:
        p = as_point(p)
        try:
            return self.images[p]
        except KeyError:
            raise UnknownPoint(f"{p!r} is not a point of the domain") from None

    def vertex_restriction(self) -> dict[str, str]:
        """Vertex-to-vertex part of the map (vertices sent to edges are omitted)."""
        return {p.key: q.key for p, q in self.images.items() if p.is_vertex and q.is_vertex}

    def preimage(self, a: PointSet) -> PointSet:
        m = a.mask
        return PointSet._from_mask(
            self.domain, sum(1 << i for i, j in enumerate(self.table) if m >> j & 1)
        )

    def __eq__(self, other) -> bool:
        if not isinstance(other, PointMap):
            return NotImplemented
        return (self.table, self.domain, self.codomain) == (other.table, other.domain, other.codomain)

    def __hash__(self) -> int:
        return hash((self.table, self.domain, self.codomain))

    def __repr__(self) -> str:
        body = ", ".join(f"{p!r}->{q!r}" for p, q in sorted(self.images.items()))
        return f"PointMap({body})"

    def to_dict(self) -> dict:
        return {
            "domain": self.domain.to_dict(),
            "codomain": self.codomain.to_dict(),
            "images": [
                {"from": p.to_dict(), "to": q.to_dict()} for p, q in sorted(self.images.items())
            ],
        }


def identity_map(g: Graph) -> PointMap:
    return PointMap.from_table(g, g, range(space(g).size))


def compose(f: PointMap, g: PointMap) -> PointMap:
    """The composite ``g o f`` (apply ``f`` first)."""
    if f.codomain != g.domain:
        raise DomainMismatch("codomain of the first map is not the domain of the second")
    return PointMap.from_table(f.domain, g.codomain, [g.table[j] for j in f.table])


# -- continuity -------------------------------------------------------------


def continuous_table(dsp: BareSpace, csp: BareSpace, table: Sequence[int]) -> bool:
    """Sub-basis criterion: the preimage of every codomain star is open."""
    pre = [0] * csp.nv
    cover = csp.cover
    for i, j in enumerate(table):
        c = cover[j]
        while c:
            low = c & -c
            pre[low.bit_length() - 1] |= 1 << i
            c ^= low
    return all(dsp.is_open(m) for m in pre)


def is_continuous(f: PointMap) -> bool:
    return continuous_table(space(f.domain), space(f.codomain), f.table)


@dataclass(frozen=True)
class Violation:
    kind: str
    points: tuple[Point, ...]
    detail: str = ""

    def to_dict(self) -> dict:
        return {"kind": self.kind, "points": [p.to_dict() for p in self.points], "detail": self.detail}


def _incidence_ok(fv: Point, fe: Point) -> bool:
    return fe == fv or (fv.is_vertex and fe.is_edge and fv.key in fe.key)


def check_incidence_preservation(f: PointMap) -> list[Violation]:
    """Incident pairs (v, e) where neither f(v) = f(e) nor f(e) is an edge at the vertex f(v)."""
    out = []
    for e in f.domain.sorted_edges:
        fe = f(E(e))
        for v in e:
            fv = f(V(v))
            if not _incidence_ok(fv, fe):
                out.append(Violation("incidence", (V(v), E(e)), f"f({v})={fv!r}, f({e[0]}-{e[1]})={fe!r}"))
    return out


def folded_edges(f: PointMap) -> list[Edge]:
    """Edges sent to an edge although both endpoints go to one vertex."""
    out = []
    for e in f.domain.sorted_edges:
        fu, fv, fe = f(V(e[0])), f(V(e[1])), f(E(e))
        if fu == fv and fu.is_vertex and fe.is_edge:
            out.append(e)
    return out


def is_vertex_map(f: PointMap) -> bool:
    nv = space(f.codomain).nv
    return all(j < nv for j in f.table[: space(f.domain).nv])


def is_edge_map(f: PointMap) -> bool:
    nv = space(f.codomain).nv
    return all(j >= nv for j in f.table[space(f.domain).nv:])


def _expected_edge_image(h: Graph, fu: str, fv: str) -> Point | None:
    if fu == fv:
        return V(fu)
    return E((fu, fv)) if h.has_edge(fu, fv) else None


def is_canonical(f: PointMap) -> bool:
    """True iff f is a vertex map equal to the map induced by its vertex restriction."""
    if not is_vertex_map(f):
        return False
    fv = f.vertex_restriction()
    return all(f(E(e)) == _expected_edge_image(f.codomain, fv[e[0]], fv[e[1]]) for e in f.domain.edges)


def is_contraction_like(f: PointMap) -> bool:
    """A contraction map up to the names of the codomain vertices.

    That is: a canonical vertex map, surjective onto B(codomain), whose vertex
    fibres all induce connected subgraphs.
    """
    if not is_canonical(f) or len(set(f.table)) != space(f.codomain).size:
        return False
    fibres: dict[str, set[str]] = {}
    for v, w in f.vertex_restriction().items():
        fibres.setdefault(w, set()).add(v)
    return all(len(components(induced_subgraph(f.domain, s))) == 1 for s in fibres.values())


@dataclass(frozen=True)
class MapClassification:
    continuous: bool
    vertex_map: bool
    edge_map: bool
    incidence_map: bool
    injective: bool
    surjective: bool
    contraction_like: bool
    canonical: bool
    violations: list[Violation] = field(default_factory=list)

    def to_dict(self) -> dict:
        d = {k: getattr(self, k) for k in (
            "continuous", "vertex_map", "edge_map", "incidence_map",
            "injective", "surjective", "contraction_like", "canonical",
        )}
        d["violations"] = [v.to_dict() for v in self.violations]
        return d


def classify(f: PointMap) -> MapClassification:
    """Compute every flag at once.

    ``incidence_map`` is the strict reading: continuous, vertices to vertices,
    edges to edges, and each edge sent to the edge spanned by its endpoints'
    images, so vertex fibres are independent sets.
    """
    continuous = is_continuous(f)
    vmap, emap = is_vertex_map(f), is_edge_map(f)
    folded = folded_edges(f) if vmap else []
    violations = check_incidence_preservation(f)
    violations += [Violation("folded", (E(e),), "endpoints share an image vertex") for e in folded]
    return MapClassification(
        continuous=continuous,
        vertex_map=vmap,
        edge_map=emap,
        incidence_map=continuous and vmap and emap and not folded,
        injective=len(set(f.table)) == len(f.table),
        surjective=len(set(f.table)) == space(f.codomain).size,
        contraction_like=is_contraction_like(f),
        canonical=is_canonical(f),
        violations=violations,
    )


# -- constructions ----------------------------------------------------------


def _induced(g: Graph, h: Graph, fv: VertexMap) -> PointMap:
    images = {V(v): V(fv[v]) for v in g.vertices}
    for u, v in g.edges:
        images[E((u, v))] = _expected_edge_image(h, fv[u], fv[v])
    return PointMap(g, h, images)


def induced_from_hom(g: Graph, h: Graph, fv: VertexMap) -> PointMap:
    """Vertices go to their images, each edge uv to the edge f(u)f(v)."""
    if not is_homomorphism(g, h, fv):
        raise NotHomomorphism("vertex map does not send every edge to an edge")
    return _induced(g, h, fv)


def induced_from_weak_hom(g: Graph, h: Graph, fv: VertexMap) -> PointMap:
    """Like :func:`induced_from_hom`, but an edge whose endpoints collapse goes to that vertex."""
    if not is_weak_homomorphism(g, h, fv):
        raise NotWeakHomomorphism("some edge maps to a distinct non-adjacent pair")
    return _induced(g, h, fv)


@dataclass(frozen=True)
class Quotient:
    """A quotient graph together with the point map onto it."""

    quotient: Graph
    map: PointMap

    def to_dict(self) -> dict:
        return {"quotient": self.quotient.to_dict(), "map": self.map.to_dict()}


def vertex_identification(g: Graph, u: str, v: str, w: str) -> Quotient:
    """Merge ``u`` and ``v`` into ``w``; an edge ``uv`` collapses onto ``w``."""
    if u == v:
        raise SameVertex(f"cannot identify {u!r} with itself")
    g._require(u)
    g._require(v)
    _check_id(w)
    if w in g.vertices and w not in (u, v):
        raise NameClash(f"new vertex name {w!r} already names another vertex")

    def rename(x: str) -> str:
        return w if x == u or x == v else x

    images = {V(x): V(rename(x)) for x in g.vertices}
    qedges = set()
    for a, b in g.edges:
        ra, rb = rename(a), rename(b)
        if ra == rb:
            images[E((a, b))] = V(w)
        else:
            ne = edge(ra, rb)
            qedges.add(ne)
            images[E((a, b))] = Point("edge", ne)
    q = Graph((g.vertices - {u, v}) | {w}, frozenset(qedges))
    return Quotient(q, PointMap(g, q, images))


def contraction_script(
    g: Graph, edges: Iterable[Iterable[str]], names: Sequence[str] | None = None
) -> Quotient:
    """Contract the listed edges in order, composing the contraction maps.

    Each edge is named in the vertex ids of the graph current at its turn.
    The merged vertex of ``a-b`` is called ``a+b`` unless ``names`` is given.
    """
    current, total = g, identity_map(g)
    for k, e in enumerate(edges):
        a, b = edge(*e)
        if (a, b) not in current.edges:
            raise StaleEdge(f"step {k}: edge {a}-{b} is not in the current graph")
        w = names[k] if names is not None else f"{a}+{b}"
        step = vertex_identification(current, a, b, w)
        total = compose(total, step.map)
        current = step.quotient
    return Quotient(current, total)


def subdivision_collapse(gsub: Graph, h: Graph, inserted: Mapping[str, Iterable[str]]) -> PointMap:
    """Send each inserted vertex, and the edges at it, onto the edge of ``h`` it subdivides.

    Everything else maps to itself.  Several vertices may subdivide the same
    edge, forming a path between its endpoints.
    """
    ins = {w: edge(*e) for w, e in inserted.items()}
    if set(ins) & h.vertices or gsub.vertices != h.vertices | set(ins):
        raise NotASubdivision("vertex sets do not split into original and inserted vertices")
    by_edge: dict[Edge, set[str]] = {}
    for w, e in ins.items():
        if e not in h.edges:
            raise NotASubdivision(f"{w!r} is assigned to {e}, which is not an edge of h")
        by_edge.setdefault(e, set()).add(w)
    untouched = {e for e in gsub.edges if e[0] not in ins and e[1] not in ins}
    if untouched != h.edges - by_edge.keys():
        raise NotASubdivision("edges away from inserted vertices differ from h")
    for (u, v), ws in by_edge.items():
        allowed = ws | {u, v}
        path = [e for e in gsub.edges if e[0] in ws or e[1] in ws]
        if any(a not in allowed or b not in allowed for a, b in path) or len(path) != len(ws) + 1:
            raise NotASubdivision(f"inserted vertices on {u}-{v} do not form a path")
        chain = Graph(frozenset(allowed), frozenset(path))
        if len(components(chain)) != 1 or any(len(chain.adjacency[w]) != 2 for w in ws):
            raise NotASubdivision(f"inserted vertices on {u}-{v} do not form a path")
    images: dict[Point, Point] = {}
    for x in gsub.vertices:
        images[V(x)] = E(ins[x]) if x in ins else V(x)
    for a, b in gsub.edges:
        owner = ins.get(a) or ins.get(b)
        images[E((a, b))] = E(owner) if owner else E((a, b))
    return PointMap(gsub, h, images)


def vertexify(f: PointMap) -> PointMap:
    """Turn a continuous map into a continuous vertex map.

    Vertices sent to an edge ``e = xy`` are grouped by ``e``; every such group
    and its stars is pulled onto one endpoint ``c`` of ``e``.  ``c`` is the
    endpoint the group's outside neighbours map to; when they hit both
    endpoints, ``y`` (the larger id) is used, and when there are no outside
    neighbours, ``x``.  An edge from the group to a neighbour mapped to the
    other endpoint goes to ``e`` itself, which keeps incidence intact.
    All other points keep their image.  The result is re-checked.
    """
    if not is_continuous(f):
        raise NotContinuous("vertexify needs a continuous map")
    g = f.domain
    groups: dict[Edge, list[str]] = {}
    for v in g.sorted_vertices:
        p = f(V(v))
        if p.is_edge:
            groups.setdefault(p.key, []).append(v)
    new = dict(f.images)
    for e, us in groups.items():
        x, y = e
        members = set(us)
        outside = {z for u in us for z in g.adjacency[u] if z not in members}
        hits = {f(V(z)).key for z in outside}
        if hits == {x, y}:
            c = y
        elif hits == {y}:
            c = y
        else:
            c = x
        for u in us:
            new[V(u)] = V(c)
            for z in g.adjacency[u]:
                keep_vertex = z in members or f(V(z)) == V(c)
                new[E((u, z))] = V(c) if keep_vertex else Point("edge", e)
    out = PointMap(g, f.codomain, new)
    if not (is_vertex_map(out) and is_continuous(out)):
        raise RuntimeError("vertexify produced a discontinuous or non-vertex map")
    return out
