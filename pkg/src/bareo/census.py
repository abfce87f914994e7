"""Brute-force oracles and the exhaustive map census.

Nothing here uses the star-containment shortcut: openness is membership in
the generated topology, and homomorphism counts come from enumerating vertex
functions directly.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

import networkx as nx

from .errors import BadParameter, EmptyGraph, TooLarge
from .graph import Graph, make_graph
from .maps import PointMap, continuous_table
from .topology import BareSpace, _check_cap, open_masks, space

DEFAULT_MAX_MAPS = 10**7


def _oracle_table(
    dsp: BareSpace, codomain_opens: tuple[int, ...], domain_opens: frozenset[int], table
) -> bool:
    for u in codomain_opens:
        pre = 0
        for i, j in enumerate(table):
            if u >> j & 1:
                pre |= 1 << i
        if pre not in domain_opens:
            return False
    return True


def oracle_is_continuous(f: PointMap, cap: int | None = None) -> bool:
    """Definitional continuity: the preimage of every open set is open."""
    cod = open_masks(f.codomain, cap)
    dom = frozenset(open_masks(f.domain, cap))
    return _oracle_table(space(f.domain), cod, dom, f.table)


def vertex_functions(g: Graph, h: Graph):
    """All functions V(g) -> V(h) as index tuples (g and h vertices in id order)."""
    return itertools.product(range(len(h.vertices)), repeat=len(g.vertices))


def _edge_index_pairs(g: Graph) -> list[tuple[int, int]]:
    pos = {v: i for i, v in enumerate(g.sorted_vertices)}
    return [(pos[a], pos[b]) for a, b in g.sorted_edges]


def weak_homomorphisms(g: Graph, h: Graph) -> set[tuple[int, ...]]:
    hedges = set(_edge_index_pairs(h))
    gedges = _edge_index_pairs(g)
    return {
        t for t in vertex_functions(g, h)
        if all(t[a] == t[b] or (min(t[a], t[b]), max(t[a], t[b])) in hedges for a, b in gedges)
    }


def homomorphisms(g: Graph, h: Graph) -> set[tuple[int, ...]]:
    hedges = set(_edge_index_pairs(h))
    gedges = _edge_index_pairs(g)
    return {
        t for t in vertex_functions(g, h)
        if all((min(t[a], t[b]), max(t[a], t[b])) in hedges for a, b in gedges)
    }


@dataclass
class CensusReport:
    domain_graph: Graph
    codomain_graph: Graph
    total_maps: int = 0
    continuous: int = 0
    continuous_vertex_maps: int = 0
    continuous_vertex_point_maps: int = 0
    folded_vertex_maps: int = 0
    weak_homs: int = 0
    incidence_maps: int = 0
    homs: int = 0
    mismatches: list[dict] = field(default_factory=list)

    def to_dict(self) -> dict:
        return {
            "domain_graph": self.domain_graph.to_dict(),
            "codomain_graph": self.codomain_graph.to_dict(),
            "total_maps": self.total_maps,
            "continuous": self.continuous,
            "continuous_vertex_maps": self.continuous_vertex_maps,
            "continuous_vertex_point_maps": self.continuous_vertex_point_maps,
            "folded_vertex_maps": self.folded_vertex_maps,
            "weak_homs": self.weak_homs,
            "incidence_maps": self.incidence_maps,
            "homs": self.homs,
            "mismatches": self.mismatches,
        }


def census(
    g: Graph, h: Graph, max_maps: int = DEFAULT_MAX_MAPS, cap: int | None = None, keep=None
) -> CensusReport:
    """Classify every total map B(g) -> B(h) with both continuity checkers.

    ``continuous_vertex_maps`` counts the distinct vertex restrictions of
    continuous vertex maps; ``continuous_vertex_point_maps`` counts the maps
    themselves (they differ exactly by the folded maps, where an edge whose
    endpoints share an image vertex goes to an edge at that vertex).
    ``incidence_maps`` counts continuous vertex-and-edge maps without folded
    edges.  Maps are visited in lexicographic order of their image tuples;
    ``keep(table, continuous)`` is called for each one if given.
    """
    dsp, csp = space(g), space(h)
    _check_cap(g, cap)
    _check_cap(h, cap)
    total = csp.size ** dsp.size
    if total > max_maps:
        raise TooLarge(f"{total} candidate maps exceed the census cap {max_maps}")
    cod_opens = open_masks(h, cap)
    dom_opens = frozenset(open_masks(g, cap))
    nv, cnv = dsp.nv, csp.nv
    ends = dsp.ends
    rep = CensusReport(g, h, total_maps=total)

    def record(reason: str, table) -> None:
        rep.mismatches.append({"reason": reason, "map": PointMap.from_table(g, h, table).to_dict()})

    restrictions: set[tuple[int, ...]] = set()
    strict_restrictions: set[tuple[int, ...]] = set()
    for t in itertools.product(range(csp.size), repeat=dsp.size):
        fast = continuous_table(dsp, csp, t)
        slow = _oracle_table(dsp, cod_opens, dom_opens, t)
        if fast != slow:
            record(f"sub-basis says {fast}, definition says {slow}", t)
        if keep is not None:
            keep(t, slow)
        if not slow:
            continue
        rep.continuous += 1
        if any(j >= cnv for j in t[:nv]):
            continue
        rep.continuous_vertex_point_maps += 1
        restrictions.add(t[:nv])
        folded = any(t[ends[k][0]] == t[ends[k][1]] and t[k] >= cnv for k in range(nv, dsp.size))
        if folded:
            rep.folded_vertex_maps += 1
        elif all(j >= cnv for j in t[nv:]):
            rep.incidence_maps += 1
            strict_restrictions.add(t[:nv])

    weak = weak_homomorphisms(g, h)
    homs = homomorphisms(g, h)
    rep.continuous_vertex_maps = len(restrictions)
    rep.weak_homs = len(weak)
    rep.homs = len(homs)
    for r in sorted(restrictions - weak):
        rep.mismatches.append({"reason": "continuous vertex map restricts to a non-weak-homomorphism",
                               "vertex_map": _named(g, h, r)})
    for r in sorted(weak - restrictions):
        rep.mismatches.append({"reason": "weak homomorphism has no continuous extension",
                               "vertex_map": _named(g, h, r)})
    if strict_restrictions != homs or rep.incidence_maps != len(homs):
        rep.mismatches.append({"reason": "incidence maps and homomorphisms disagree",
                               "incidence_maps": rep.incidence_maps, "homs": len(homs)})
    return rep


def _named(g: Graph, h: Graph, r: tuple[int, ...]) -> dict[str, str]:
    hv = h.sorted_vertices
    return {v: hv[i] for v, i in zip(g.sorted_vertices, r)}


def connectedness_oracle(g: Graph, cap: int | None = None) -> bool:
    """True iff B(g) is not the union of two disjoint nonempty open sets."""
    if not g.vertices:
        raise EmptyGraph("connectedness of the empty bare representation is not defined")
    masks = open_masks(g, cap)
    opens = frozenset(masks)
    full = space(g).full
    return not any(m and m != full and (full ^ m) in opens for m in masks)


def brute_force_chromatic_number(g: Graph) -> int:
    """Smallest n admitting a proper colouring, by trying all n^|V| assignments."""
    if not g.vertices:
        raise EmptyGraph("the empty graph has no chromatic number here")
    edges = _edge_index_pairs(g)
    for n in range(1, len(g.vertices) + 1):
        for t in itertools.product(range(n), repeat=len(g.vertices)):
            if all(t[a] != t[b] for a, b in edges):
                return n
    raise RuntimeError("unreachable: |V| colours always suffice")


def find_isomorphism(g: Graph, h: Graph) -> dict[str, str] | None:
    """Brute-force graph isomorphism g -> h, or ``None``."""
    if len(g.vertices) != len(h.vertices) or len(g.edges) != len(h.edges):
        return None
    gv, hv = g.sorted_vertices, h.sorted_vertices
    gdeg = [len(g.adjacency[v]) for v in gv]
    hdeg = {v: len(h.adjacency[v]) for v in hv}
    if sorted(gdeg) != sorted(hdeg.values()):
        return None
    for perm in itertools.permutations(hv):
        if any(hdeg[w] != d for w, d in zip(perm, gdeg)):
            continue
        m = dict(zip(gv, perm))
        if all(h.has_edge(m[a], m[b]) for a, b in g.edges):
            return m
    return None


def small_graphs(n: int) -> list[Graph]:
    """One graph per isomorphism class on ``n`` vertices (ids ``v1..vn``), from the graph atlas."""
    if not 0 <= n <= 7:
        raise BadParameter("the graph atlas covers 0..7 vertices")
    out = []
    for a in nx.graph_atlas_g():
        if a.number_of_nodes() == n:
            out.append(make_graph(
                [f"v{i + 1}" for i in range(n)],
                [(f"v{u + 1}", f"v{v + 1}") for u, v in a.edges()],
            ))
    return out
