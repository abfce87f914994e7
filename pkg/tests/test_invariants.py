import itertools

import pytest
from hypothesis import given, settings

from bareo import (
    brute_force_chromatic_number,
    chromatic_number,
    classify,
    covering_walk,
    find_incidence_coloring,
    invariant_report,
    is_connected,
    is_weak_homomorphism,
    make_graph,
    min_covering_closed_walk,
    named_graph,
    oracle_is_continuous,
    small_graphs,
    surjectivity_criterion,
    theta,
    walk_surjection,
)
from bareo.errors import BadParameter, Disconnected, EmptyGraph, NoEdges, NotColorable, TooLarge
from bareo.graph import degree
from bareo.maps import continuous_table
from bareo.topology import space

from strategies import graphs


def star(k):
    return make_graph(["c"] + [f"l{i}" for i in range(k)], [("c", f"l{i}") for i in range(k)])


def brute_surjection_exists(g, n, limit=400_000):
    """Every table B(G) -> B(K_n), checked with the sub-basis criterion."""
    d, c = space(g), space(named_graph("complete", n))
    if c.size ** d.size > limit:
        return None
    return any(
        len(set(t)) == c.size and continuous_table(d, c, t)
        for t in itertools.product(range(c.size), repeat=d.size)
    )


def test_find_incidence_coloring(k2, petersen):
    f = find_incidence_coloring(k2, 2)
    c = classify(f)
    assert c.incidence_map and c.surjective
    assert find_incidence_coloring(named_graph("cycle", 5), 2) is None
    p = find_incidence_coloring(petersen, 3)
    assert p is not None and classify(p).incidence_map


def test_chromatic_number_examples(petersen):
    assert chromatic_number(named_graph("complete", 4)) == 4
    assert chromatic_number(named_graph("cycle", 5)) == 3
    assert chromatic_number(petersen) == 3
    assert brute_force_chromatic_number(petersen) == 3


def test_surjectivity_criterion(k2):
    assert surjectivity_criterion(named_graph("cycle", 5), 3).holds
    r = surjectivity_criterion(k2, 3)
    assert not r.holds and r.counterexample is not None
    assert not classify(r.counterexample).surjective
    assert classify(r.counterexample).incidence_map
    assert surjectivity_criterion(named_graph("complete", 3), 3).holds
    with pytest.raises(NotColorable):
        surjectivity_criterion(named_graph("complete", 3), 2)
    with pytest.raises(BadParameter):
        surjectivity_criterion(k2, 0)


def test_theta_examples(k2):
    assert theta(k2).value == 2
    c4 = named_graph("cycle", 4)
    t = theta(c4)
    assert t.value == t.vertex_map_value == 3
    assert chromatic_number(c4) == 2
    # B(C4) has 8 points, B(K4) has 10: no surjection onto K4
    assert len(space(c4).points) < len(space(named_graph("complete", 4)).points)
    c = classify(t.witness)
    assert c.continuous and c.surjective
    with pytest.raises(EmptyGraph):
        theta(make_graph([]))


def test_theta_exceeds_vertex_map_value():
    # discrete space: any assignment is continuous, including a vertex onto an edge
    t = theta(make_graph(["a", "b", "c"]))
    assert (t.value, t.vertex_map_value) == (2, 1)
    assert oracle_is_continuous(t.witness) and classify(t.witness).surjective
    g = make_graph("abcde", [("a", "b"), ("a", "d"), ("a", "e"), ("b", "c"), ("c", "d"), ("d", "e")])
    t = theta(g)
    assert is_connected(g) and (t.value, t.vertex_map_value) == (4, 3)
    assert oracle_is_continuous(t.witness) and classify(t.witness).surjective


def test_theta_against_brute_force():
    checked = 0
    for n in range(1, 5):
        for g in small_graphs(n):
            t = theta(g)
            assert brute_surjection_exists(g, t.value) in (True, None)
            beyond = brute_surjection_exists(g, t.value + 1)
            if t.exhaustive:
                assert beyond in (False, None)
            checked += beyond is not None
    assert checked >= 10


def test_theta_witnesses_valid():
    for n in range(1, 6):
        for g in small_graphs(n):
            t = theta(g)
            assert t.value >= t.vertex_map_value >= chromatic_number(g)
            c = classify(t.witness)
            assert c.continuous and c.surjective
            v = classify(t.vertex_witness)
            assert v.vertex_map and v.surjective and v.continuous
            assert is_weak_homomorphism(g, t.vertex_witness.codomain, t.vertex_witness.vertex_restriction())


def test_walk_examples():
    assert min_covering_closed_walk(named_graph("cycle", 5)) == 5
    assert min_covering_closed_walk(named_graph("path", 3)) == 4
    assert min_covering_closed_walk(star(3)) == 6
    assert min_covering_closed_walk(named_graph("complete", 2)) == 2
    with pytest.raises(NoEdges):
        min_covering_closed_walk(make_graph(["a"]))
    with pytest.raises(Disconnected):
        min_covering_closed_walk(make_graph("abcd", [("a", "b"), ("c", "d")]))
    with pytest.raises(TooLarge):
        min_covering_closed_walk(named_graph("complete", 7))


def test_walk_is_a_covering_closed_walk():
    g = named_graph("petersen")
    w = covering_walk(g)
    assert w[0] == w[-1]
    steps = {tuple(sorted(p)) for p in zip(w, w[1:])}
    assert steps == set(g.edges)


def smallest_cycle_surjection(g, max_m=10):
    """Least m >= 3 with a weak hom C_m -> G whose induced map covers B(G)."""
    verts = g.sorted_vertices
    for m in range(3, max_m + 1):
        cyc = named_graph("cycle", m)
        order = cyc.sorted_vertices
        for img in itertools.product(verts, repeat=m):
            fv = dict(zip(order, img))
            if set(img) != set(verts) or not is_weak_homomorphism(cyc, g, fv):
                continue
            hit = {tuple(sorted((fv[a], fv[b]))) for a, b in cyc.edges if fv[a] != fv[b]}
            if hit == set(g.edges):
                return m
    return None


def test_walk_matches_cycle_surjection_oracle():
    for n in range(2, 5):
        for g in small_graphs(n):
            if not is_connected(g):
                continue
            value = min_covering_closed_walk(g)
            assert smallest_cycle_surjection(g) == max(3, value)
            if value >= 3:
                f = walk_surjection(g)
                assert oracle_is_continuous(f) and classify(f).surjective
    with pytest.raises(BadParameter):
        walk_surjection(named_graph("complete", 2))


# dense 6-vertex graphs make the state search take tens of milliseconds
@settings(deadline=None, max_examples=60)
@given(graphs(min_vertices=2, max_vertices=6))
def test_walk_euler_bound(g):
    if not g.edges or not is_connected(g):
        return
    value = min_covering_closed_walk(g)
    euler = all(degree(g, v) % 2 == 0 for v in g.vertices)
    assert value >= len(g.edges)
    assert (value == len(g.edges)) == euler


def test_walk_on_cycles_and_trees():
    for n in range(3, 9):
        assert min_covering_closed_walk(named_graph("cycle", n)) == n
    for n in range(2, 8):
        assert min_covering_closed_walk(named_graph("path", n)) == 2 * (n - 1)
    assert min_covering_closed_walk(star(5)) == 10


def test_invariant_report(petersen):
    r = invariant_report(named_graph("cycle", 5))
    assert (r.chi, r.min_walk_length) == (3, 5)
    assert r.chi <= r.theta
    assert invariant_report(make_graph(["a", "b"])).min_walk_length is None


@given(graphs(min_vertices=1, max_vertices=6))
def test_chi_matches_brute_force(g):
    chi = chromatic_number(g)
    assert chi == brute_force_chromatic_number(g)
    assert classify(find_incidence_coloring(g, chi)).incidence_map
    assert surjectivity_criterion(g, chi).holds
