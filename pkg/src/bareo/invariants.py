"""Colouring-type invariants phrased through maps between bare representations.

* chromatic number: least n with an incidence map B(G) -> B(K_n) hitting every vertex of K_n;
* theta: largest n with a continuous surjection B(G) -> B(K_n);
* the shortest closed walk covering every edge, i.e. the least m with a
  surjection from B(C_m) induced by a walk.
"""

from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass

from .errors import BadParameter, Disconnected, EmptyGraph, NoEdges, NotColorable, TooLarge
from .graph import Graph, edge, is_connected, named_graph
from .maps import PointMap, induced_from_hom, induced_from_weak_hom, is_continuous
from .topology import space

DEFAULT_MAP_CAP = 10**6
THETA_POINT_CAP = 160
WALK_EDGE_CAP = 20


def _color_ids(n: int) -> list[str]:
    return [f"v{i}" for i in range(1, n + 1)]


def _as_map(g: Graph, n: int, coloring: dict[str, int], weak: bool = False) -> PointMap:
    ids = _color_ids(n)
    fv = {v: ids[c] for v, c in coloring.items()}
    build = induced_from_weak_hom if weak else induced_from_hom
    return build(g, named_graph("complete", n), fv)


def find_incidence_coloring(g: Graph, n: int) -> PointMap | None:
    """First proper n-colouring using every colour, as an incidence map into B(K_n).

    Vertices are coloured in id order, colours tried in order ``v1..vn``.
    """
    if not isinstance(n, int) or n < 1:
        raise BadParameter(f"number of colours must be a positive integer, got {n!r}")
    order = g.sorted_vertices
    if len(order) < n:
        return None
    adj = g.adjacency
    assign: dict[str, int] = {}
    uses = [0] * n

    def extend(k: int) -> bool:
        missing = sum(1 for c in uses if c == 0)
        if missing > len(order) - k:
            return False
        if k == len(order):
            return True
        v = order[k]
        taken = {assign[u] for u in adj[v] if u in assign}
        for c in range(n):
            if c in taken:
                continue
            assign[v] = c
            uses[c] += 1
            if extend(k + 1):
                return True
            uses[c] -= 1
            del assign[v]
        return False

    return _as_map(g, n, assign) if extend(0) else None


def chromatic_number(g: Graph) -> int:
    if not g.vertices:
        raise EmptyGraph("the empty graph has no chromatic number here")
    return next(n for n in range(1, len(g.vertices) + 1) if find_incidence_coloring(g, n))


@dataclass(frozen=True)
class SurjectivityResult:
    holds: bool
    counterexample: PointMap | None
    incidence_maps: int

    def to_dict(self) -> dict:
        return {
            "holds": self.holds,
            "counterexample": None if self.counterexample is None else self.counterexample.to_dict(),
            "incidence_maps": self.incidence_maps,
        }


def surjectivity_criterion(g: Graph, n: int, max_maps: int = DEFAULT_MAP_CAP) -> SurjectivityResult:
    """Check whether every incidence map B(G) -> B(K_n) is surjective.

    All proper colourings with colours from ``1..n`` are enumerated; each is
    surjective when it uses every colour and every pair of colours meets
    along some edge.
    """
    if not isinstance(n, int) or n < 1:
        raise BadParameter(f"n must be a positive integer, got {n!r}")
    order = g.sorted_vertices
    if n ** len(order) > max_maps:
        raise TooLarge(f"{n}^{len(order)} candidate colourings exceed the cap {max_maps}")
    pos = {v: i for i, v in enumerate(order)}
    edges = [(pos[a], pos[b]) for a, b in g.sorted_edges]
    all_pairs = n * (n - 1) // 2
    count = 0
    counterexample = None
    for colors in itertools.product(range(n), repeat=len(order)):
        if any(colors[a] == colors[b] for a, b in edges):
            continue
        count += 1
        pairs = {(min(colors[a], colors[b]), max(colors[a], colors[b])) for a, b in edges}
        if len(set(colors)) < n or len(pairs) < all_pairs:
            if counterexample is None:
                counterexample = _as_map(g, n, dict(zip(order, colors)))
    if count == 0:
        raise NotColorable(f"graph has no proper {n}-colouring")
    return SurjectivityResult(counterexample is None, counterexample, count)


def _complete_assignment(g: Graph, n: int) -> dict[str, int] | None:
    """Vertex colouring with n colours in which every colour occurs and every
    pair of colours is joined by an edge (proper or not)."""
    order = g.sorted_vertices
    if len(order) < n or len(g.edges) < n * (n - 1) // 2:
        return None
    pos = {v: i for i, v in enumerate(order)}
    edges = [(pos[a], pos[b]) for a, b in g.sorted_edges]
    need = n * (n - 1) // 2
    colors = [0] * len(order)

    def extend(k: int, top: int) -> bool:
        if n - top > len(order) - k:
            return False
        if k == len(order):
            pairs = {(colors[a], colors[b]) if colors[a] < colors[b] else (colors[b], colors[a])
                     for a, b in edges if colors[a] != colors[b]}
            return len(pairs) == need
        # colours appear in first-use order, which removes relabelled duplicates
        for c in range(min(top + 1, n)):
            colors[k] = c
            if extend(k + 1, max(top, c + 1)):
                return True
        return False

    return dict(zip(order, colors)) if extend(0, 0) else None


def _continuous_surjection(g: Graph, n: int) -> PointMap | None:
    """Backtracking search for any continuous surjection B(G) -> B(K_n)."""
    kn = named_graph("complete", n)
    dsp, csp = space(g), space(kn)
    if dsp.size < csp.size:
        return None
    P = csp.size
    cnv = csp.nv
    # point j of B(K_n) may receive incident edge images "at" it:
    # allowed[j] = set of points an incident edge may map to when its endpoint maps to j
    allowed = []
    for j in range(P):
        if j < cnv:
            allowed.append({j} | {k for k in range(cnv, P) if csp.ends[k][0] == j or csp.ends[k][1] == j})
        else:
            allowed.append({j})
    table = [-1] * dsp.size
    cover = [0] * P
    nv = dsp.nv
    nbrs = [[] for _ in range(nv)]
    for k in range(nv, dsp.size):
        a, b = dsp.ends[k]
        nbrs[a].append(b)
        nbrs[b].append(a)

    def uncovered() -> int:
        return sum(1 for c in cover if c == 0)

    def place_vertices(i: int) -> bool:
        if uncovered() > dsp.size - i:
            return False
        if i == nv:
            if any(cover[j] == 0 for j in range(cnv)):
                return False
            return place_edges(nv)
        for j in range(P):
            if any(table[b] >= 0 and not (allowed[j] & allowed[table[b]]) for b in nbrs[i]):
                continue
            table[i] = j
            cover[j] += 1
            if place_vertices(i + 1):
                return True
            cover[j] -= 1
            table[i] = -1
        return False

    def place_edges(k: int) -> bool:
        if uncovered() > dsp.size - k:
            return False
        if k == dsp.size:
            return True
        a, b = dsp.ends[k]
        for j in sorted(allowed[table[a]] & allowed[table[b]]):
            table[k] = j
            cover[j] += 1
            if place_edges(k + 1):
                return True
            cover[j] -= 1
        table[k] = -1
        return False

    if not place_vertices(0):
        return None
    f = PointMap.from_table(g, kn, table)
    if not is_continuous(f):
        raise RuntimeError("surjection search produced a discontinuous map")
    return f


@dataclass(frozen=True)
class ThetaResult:
    value: int
    witness: PointMap
    vertex_map_value: int
    vertex_witness: PointMap
    exhaustive: bool

    def to_dict(self) -> dict:
        return {
            "value": self.value,
            "witness": self.witness.to_dict(),
            "vertex_map_value": self.vertex_map_value,
            "vertex_witness": self.vertex_witness.to_dict(),
            "exhaustive": self.exhaustive,
        }


def theta(g: Graph, point_cap: int = THETA_POINT_CAP) -> ThetaResult:
    """Largest n with a continuous surjection B(G) -> B(K_n).

    ``vertex_map_value`` searches vertex maps only (weak homomorphisms whose
    induced map is onto).  When ``|B(G)| * |B(K_n)| <= point_cap`` for every
    larger candidate n, all continuous point maps are searched as well and
    ``exhaustive`` is true; otherwise ``value`` falls back to the vertex-map
    value.
    """
    if not g.vertices:
        raise EmptyGraph("theta is undefined for the empty graph")
    size = len(g.vertices) + len(g.edges)
    n = len(g.vertices)
    while n * (n - 1) // 2 > len(g.edges):
        n -= 1
    while True:
        found = _complete_assignment(g, n)
        if found is not None:
            break
        n -= 1
    vertex_value, vertex_witness = n, _as_map(g, n, found, weak=True)

    top = 1
    while (top + 1) + (top + 1) * top // 2 <= size:
        top += 1
    candidates = range(top, vertex_value, -1)
    exhaustive = all(size * (m + m * (m - 1) // 2) <= point_cap for m in candidates)
    if exhaustive:
        for m in candidates:
            f = _continuous_surjection(g, m)
            if f is not None:
                return ThetaResult(m, f, vertex_value, vertex_witness, True)
    return ThetaResult(vertex_value, vertex_witness, vertex_value, vertex_witness, exhaustive)


def covering_walk(g: Graph, max_edges: int = WALK_EDGE_CAP) -> list[str]:
    """A shortest closed walk using every edge, as a vertex list starting and ending at the smallest id.

    Breadth-first search over (current vertex, set of covered edges).
    """
    if not g.edges:
        raise NoEdges("graph has no edges to cover")
    if not is_connected(g):
        raise Disconnected("a closed walk cannot cover a disconnected graph")
    if len(g.edges) > max_edges:
        raise TooLarge(f"{len(g.edges)} edges exceed the walk-search cap {max_edges}")
    eid = {e: i for i, e in enumerate(g.sorted_edges)}
    full = (1 << len(eid)) - 1
    start = g.sorted_vertices[0]
    parent = {(start, 0): None}
    queue = deque([(start, 0)])
    while queue:
        state = queue.popleft()
        v, mask = state
        if v == start and mask == full:
            walk = []
            while state is not None:
                walk.append(state[0])
                state = parent[state]
            return walk[::-1]
        for w in sorted(g.adjacency[v]):
            nxt = (w, mask | 1 << eid[edge(v, w)])
            if nxt not in parent:
                parent[nxt] = state
                queue.append(nxt)
    raise RuntimeError("no covering walk found in a connected graph")


def min_covering_closed_walk(g: Graph, max_edges: int = WALK_EDGE_CAP) -> int:
    return len(covering_walk(g, max_edges)) - 1


def walk_surjection(g: Graph) -> PointMap:
    """The surjection B(C_m) -> B(G) induced by a shortest covering walk (needs m >= 3)."""
    walk = covering_walk(g)
    m = len(walk) - 1
    if m < 3:
        raise BadParameter(f"the shortest covering walk has length {m}; C_{m} is not a simple graph")
    cycle = named_graph("cycle", m)
    return induced_from_hom(cycle, g, {f"v{i + 1}": walk[i] for i in range(m)})


@dataclass(frozen=True)
class InvariantReport:
    chi: int
    theta: int
    witness_coloring: PointMap
    witness_theta: PointMap
    min_walk_length: int | None

    def to_dict(self) -> dict:
        return {
            "chi": self.chi,
            "theta": self.theta,
            "witness_coloring": self.witness_coloring.to_dict(),
            "witness_theta": self.witness_theta.to_dict(),
            "min_walk_length": self.min_walk_length,
        }


def invariant_report(g: Graph) -> InvariantReport:
    chi = chromatic_number(g)
    th = theta(g)
    walk = None
    if g.edges and is_connected(g) and len(g.edges) <= WALK_EDGE_CAP:
        walk = min_covering_closed_walk(g)
    return InvariantReport(chi, th.value, find_incidence_coloring(g, chi), th.witness, walk)
