"""Bare representations B(G) and the star topology on them.

A point of B(G) is either a vertex or an edge of G.  The open sets are
generated by the open stars ``S(v) = {v} + edges at v``.  Open-set tests go
through the star-containment criterion (a set is open iff it contains the
whole star of each of its vertices); :func:`enumerate_open_sets` is the only
place that builds the topology generatively.
"""

from __future__ import annotations

import os
from collections.abc import Iterable, Iterator
from dataclasses import dataclass
from functools import cached_property, lru_cache, total_ordering
from typing import Union

from .errors import AmbientMismatch, BadParameter, EmptyGraph, TooLarge, UnknownPoint
from .graph import Edge, Graph, components, edge

DEFAULT_POINT_CAP = 16


def point_cap() -> int:
    """Enumeration cap on |B(G)|; the ``BAREO_CAP`` environment variable overrides it."""
    raw = os.environ.get("BAREO_CAP")
    if raw is None or raw == "":
        return DEFAULT_POINT_CAP
    try:
        cap = int(raw)
    except ValueError:
        raise BadParameter(f"BAREO_CAP must be a positive integer, got {raw!r}") from None
    if cap < 1:
        raise BadParameter(f"BAREO_CAP must be a positive integer, got {raw!r}")
    return cap


@total_ordering
@dataclass(frozen=True)
class Point:
    """A point of a bare representation: a vertex or an edge, told apart by ``kind``."""

    kind: str
    key: Union[str, Edge]

    @classmethod
    def vertex(cls, v: str) -> "Point":
        return cls("vertex", v)

    @classmethod
    def edge(cls, u: str, v: str) -> "Point":
        return cls("edge", edge(u, v))

    @property
    def is_vertex(self) -> bool:
        return self.kind == "vertex"

    @property
    def is_edge(self) -> bool:
        return self.kind == "edge"

    def sort_key(self):
        return (0, self.key) if self.is_vertex else (1, self.key)

    def __lt__(self, other: "Point") -> bool:
        return self.sort_key() < other.sort_key()

    def __repr__(self) -> str:
        return self.key if self.is_vertex else f"{self.key[0]}-{self.key[1]}"

    def to_dict(self) -> dict:
        return {"v": self.key} if self.is_vertex else {"e": list(self.key)}


PointLike = Union[Point, str, tuple, list]


def as_point(x: PointLike) -> Point:
    """Coerce ``"a"`` to a vertex point and ``("a", "b")`` to an edge point."""
    if isinstance(x, Point):
        return x
    if isinstance(x, str):
        return Point.vertex(x)
    if isinstance(x, (tuple, list)) and len(x) == 2:
        return Point.edge(*x)
    raise BadParameter(f"cannot interpret {x!r} as a point")


class BareSpace:
    """Index-compiled view of B(G) used by the hot paths.

    Points are numbered vertices first, then edges, each block sorted; point
    sets become integer bitmasks over that numbering.
    """

    def __init__(self, g: Graph):
        self.graph = g
        vs = g.sorted_vertices
        self.points = [Point.vertex(v) for v in vs] + [Point("edge", e) for e in g.sorted_edges]
        self.index = {p: i for i, p in enumerate(self.points)}
        self.nv = len(vs)
        self.size = len(self.points)
        self.full = (1 << self.size) - 1
        self.vertex_mask = (1 << self.nv) - 1
        vi = {v: i for i, v in enumerate(vs)}
        # ends[i] = (a, b) vertex indices for edge point i; None for vertex points
        self.ends: list = [None] * self.nv + [(vi[u], vi[v]) for u, v in g.sorted_edges]
        self.star = [1 << i for i in range(self.nv)]
        for j in range(self.nv, self.size):
            a, b = self.ends[j]
            self.star[a] |= 1 << j
            self.star[b] |= 1 << j
        # cover[j] = bitmask of vertices whose star contains point j
        self.cover = [1 << i for i in range(self.nv)] + [
            (1 << a) | (1 << b) for a, b in self.ends[self.nv:]
        ]

    def mask(self, points: Iterable[Point]) -> int:
        m = 0
        for p in points:
            try:
                m |= 1 << self.index[p]
            except KeyError:
                raise UnknownPoint(f"{p!r} is not a point of B(G)") from None
        return m

    def unmask(self, m: int) -> frozenset[Point]:
        return frozenset(self.points[i] for i in _bits(m))

    def is_open(self, m: int) -> bool:
        star = self.star
        for i in _bits(m & self.vertex_mask):
            if star[i] & ~m:
                return False
        return True

    def closure(self, m: int) -> int:
        out = m
        for j in _bits(m & ~self.vertex_mask):
            a, b = self.ends[j]
            out |= (1 << a) | (1 << b)
        return out

    def interior(self, m: int) -> int:
        out = m & ~self.vertex_mask
        for i in _bits(m & self.vertex_mask):
            if not self.star[i] & ~m:
                out |= 1 << i
        return out


def _bits(m: int) -> Iterator[int]:
    while m:
        low = m & -m
        yield low.bit_length() - 1
        m ^= low


@lru_cache(maxsize=512)
def space(g: Graph) -> BareSpace:
    return BareSpace(g)


@dataclass(frozen=True)
class PointSet:
    """A subset of B(graph)."""

    graph: Graph
    points: frozenset[Point]

    def __post_init__(self):
        sp = space(self.graph)
        for p in self.points:
            if p not in sp.index:
                raise UnknownPoint(f"{p!r} is not a point of B(G)")

    @classmethod
    def of(cls, g: Graph, points: Iterable[PointLike]) -> "PointSet":
        return cls(g, frozenset(as_point(p) for p in points))

    @classmethod
    def _from_mask(cls, g: Graph, m: int) -> "PointSet":
        return cls(g, space(g).unmask(m))

    @cached_property
    def mask(self) -> int:
        return space(self.graph).mask(self.points)

    def __iter__(self) -> Iterator[Point]:
        return iter(sorted(self.points))

    def __len__(self) -> int:
        return len(self.points)

    def __contains__(self, p) -> bool:
        return as_point(p) in self.points

    def _same(self, other: "PointSet") -> None:
        if other.graph != self.graph:
            raise AmbientMismatch("point sets live in different bare representations")

    def __or__(self, other: "PointSet") -> "PointSet":
        self._same(other)
        return PointSet(self.graph, self.points | other.points)

    def __and__(self, other: "PointSet") -> "PointSet":
        self._same(other)
        return PointSet(self.graph, self.points & other.points)

    def __sub__(self, other: "PointSet") -> "PointSet":
        self._same(other)
        return PointSet(self.graph, self.points - other.points)

    def __le__(self, other: "PointSet") -> bool:
        self._same(other)
        return self.points <= other.points

    def complement(self) -> "PointSet":
        return PointSet._from_mask(self.graph, space(self.graph).full & ~self.mask)

    def vertices(self) -> frozenset[str]:
        return frozenset(p.key for p in self.points if p.is_vertex)

    def edges(self) -> frozenset[Edge]:
        return frozenset(p.key for p in self.points if p.is_edge)

    def __repr__(self) -> str:
        return "{" + ", ".join(map(repr, self)) + "}"

    def to_dict(self) -> dict:
        return {"graph": self.graph.to_dict(), "points": [p.to_dict() for p in self]}


def _ambient(g: Graph, a: PointSet) -> None:
    if a.graph != g:
        raise AmbientMismatch("point set does not belong to B(G) of the given graph")


def bare_points(g: Graph) -> PointSet:
    return PointSet._from_mask(g, space(g).full)


def open_star(g: Graph, v: str) -> PointSet:
    g._require(v)
    sp = space(g)
    return PointSet._from_mask(g, sp.star[sp.index[Point.vertex(v)]])


def minimal_neighborhood(g: Graph, p: PointLike) -> PointSet:
    """Smallest open set containing ``p``: the star of a vertex, ``{e}`` for an edge."""
    p = as_point(p)
    sp = space(g)
    if p not in sp.index:
        raise UnknownPoint(f"{p!r} is not a point of B(G)")
    if p.is_vertex:
        return PointSet._from_mask(g, sp.star[sp.index[p]])
    return PointSet(g, frozenset([p]))


def is_open(g: Graph, a: PointSet) -> bool:
    _ambient(g, a)
    return all(
        Point("edge", e) in a.points for v in a.vertices() for e in g.incident_edges(v)
    )


def is_closed(g: Graph, a: PointSet) -> bool:
    _ambient(g, a)
    return all(u in a.points and v in a.points for u, v in map(_ends, a.edges()))


def _ends(e: Edge) -> tuple[Point, Point]:
    return Point.vertex(e[0]), Point.vertex(e[1])


def closed_subgraph_witness(g: Graph, a: PointSet) -> Graph | None:
    """The subgraph H with B(H) = a when ``a`` is closed, else ``None``."""
    if not is_closed(g, a):
        return None
    return Graph(a.vertices(), a.edges())


def closure(g: Graph, a: PointSet) -> PointSet:
    _ambient(g, a)
    return PointSet._from_mask(g, space(g).closure(a.mask))


def interior(g: Graph, a: PointSet) -> PointSet:
    _ambient(g, a)
    return PointSet._from_mask(g, space(g).interior(a.mask))


def _check_cap(g: Graph, cap: int | None) -> None:
    cap = point_cap() if cap is None else cap
    n = len(g.vertices) + len(g.edges)
    if n > cap:
        raise TooLarge(f"|B(G)| = {n} exceeds the enumeration cap {cap}")


@lru_cache(maxsize=256)
def _generated_open_masks(g: Graph) -> tuple[int, ...]:
    sp = space(g)
    # finite intersections of the sub-basis
    basis = set(sp.star)
    frontier = list(basis)
    while frontier:
        new = []
        for a in frontier:
            for b in list(basis):
                c = a & b
                if c and c not in basis:
                    basis.add(c)
                    new.append(c)
        frontier = new
    # arbitrary unions (finite space, so a fixpoint of pairwise unions)
    opens = {0}
    frontier = [0]
    basis_list = sorted(basis)
    while frontier:
        new = []
        for o in frontier:
            for b in basis_list:
                u = o | b
                if u not in opens:
                    opens.add(u)
                    new.append(u)
        frontier = new
    return tuple(sorted(opens, key=lambda m: (bin(m).count("1"), m)))


def open_masks(g: Graph, cap: int | None = None) -> tuple[int, ...]:
    _check_cap(g, cap)
    return _generated_open_masks(g)


def enumerate_open_sets(g: Graph, cap: int | None = None) -> Iterator[PointSet]:
    """Every open set of B(G) exactly once, smallest first.

    Built from the open stars by closing under finite intersections and then
    unions, without using the star-containment criterion.
    """
    for m in open_masks(g, cap):
        yield PointSet._from_mask(g, m)


def is_topologically_connected(g: Graph) -> bool:
    if not g.vertices:
        raise EmptyGraph("connectedness of the empty bare representation is not defined")
    return len(components(g)) == 1


@dataclass(frozen=True)
class SeparationReport:
    t0: bool
    hausdorff: bool
    witness: tuple[Point, Point] | None = None

    def to_dict(self) -> dict:
        return {
            "t0": self.t0,
            "hausdorff": self.hausdorff,
            "witness": None if self.witness is None else [p.to_dict() for p in self.witness],
        }


def separation_report(g: Graph) -> SeparationReport:
    """Check T0 and Hausdorff by searching all point pairs.

    In an Alexandroff space, p and q can be told apart by an open set iff one
    misses the other's minimal neighbourhood, and separated by disjoint open
    sets iff their minimal neighbourhoods are disjoint.
    """
    sp = space(g)
    nbhd = [sp.star[i] if i < sp.nv else 1 << i for i in range(sp.size)]
    t0 = hausdorff = True
    for i in range(sp.size):
        for j in range(i + 1, sp.size):
            if nbhd[i] >> j & 1 and nbhd[j] >> i & 1:
                t0 = False
            if nbhd[i] & nbhd[j]:
                hausdorff = False
    witness = None
    for v in g.sorted_vertices:
        inc = g.incident_edges(v)
        if inc:
            witness = (Point.vertex(v), Point("edge", inc[0]))
            break
    return SeparationReport(t0, hausdorff, witness)
