import pytest
from hypothesis import given, settings

from bareo import (
    PointMap,
    check_incidence_preservation,
    classify,
    compose,
    contraction_script,
    identity_map,
    induced_from_hom,
    induced_from_weak_hom,
    is_continuous,
    is_homomorphism,
    make_graph,
    named_graph,
    oracle_is_continuous,
    subdivision_collapse,
    vertex_identification,
    vertexify,
)
from bareo.errors import (
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
from bareo.maps import is_vertex_map
from bareo.topology import Point

from strategies import point_maps, weak_hom_maps

U, V_, EUV = Point.vertex("u"), Point.vertex("v"), Point.edge("u", "v")


def const(g, h, target):
    return PointMap(g, h, {p: target for p in list(g.vertices) + list(g.edges)})


def test_point_map_totality(k2, k1):
    with pytest.raises(PartialMap):
        PointMap(k2, k1, {"u": "w"})
    with pytest.raises(UnknownPoint):
        PointMap(k2, k1, {"u": "w", "v": "w", ("u", "v"): "zz"})


def test_compose(k2, k1, p3):
    f = const(k2, k1, "w")
    assert compose(identity_map(k2), f) == f
    assert compose(f, identity_map(k1)) == f
    first = contraction_script(p3, [("a", "b")], names=["m"])
    second = contraction_script(first.quotient, [("c", "m")], names=["z"])
    both = compose(first.map, second.map)
    assert both.codomain.vertices == {"z"} and not both.codomain.edges
    assert set(both.images.values()) == {Point.vertex("z")}
    assert classify(both).continuous and oracle_is_continuous(both)
    with pytest.raises(DomainMismatch):
        compose(f, f)


def test_is_continuous_examples(k2, k1, petersen):
    assert is_continuous(const(k2, k1, "w"))
    assert is_continuous(identity_map(petersen))
    bad = PointMap(k2, k2, {"u": "u", "v": "v", ("u", "v"): "u"})
    assert not is_continuous(bad)
    assert not oracle_is_continuous(bad)


def test_classify_examples(p3, xy, k2, k1):
    col = induced_from_hom(p3, xy, {"a": "x", "b": "y", "c": "x"})
    c = classify(col)
    assert c.incidence_map and c.continuous and c.vertex_map and c.edge_map
    contr = classify(const(k2, k1, "w"))
    assert contr.vertex_map and not contr.edge_map and not contr.incidence_map
    assert contr.contraction_like and contr.surjective and not contr.injective
    to_edge = classify(const(k2, xy, ("x", "y")))
    assert not to_edge.vertex_map and to_edge.continuous


def test_induced_from_hom(k2, p3, xy):
    assert induced_from_hom(k2, k2, {"u": "u", "v": "v"}) == identity_map(k2)
    f = induced_from_hom(p3, xy, {"a": "x", "b": "y", "c": "x"})
    assert f(("a", "b")) == f(("b", "c")) == Point.edge("x", "y")
    c5 = named_graph("cycle", 5)
    rot = {f"v{i}": f"v{i % 5 + 1}" for i in range(1, 6)}
    r = classify(induced_from_hom(c5, c5, rot))
    assert r.incidence_map and r.injective and r.surjective
    with pytest.raises(NotHomomorphism):
        induced_from_hom(k2, k2, {"u": "u", "v": "u"})


def test_induced_from_weak_hom(k2, k1, p3, xy):
    f = induced_from_weak_hom(k2, k1, {"u": "w", "v": "w"})
    assert f == const(k2, k1, "w")
    g = induced_from_weak_hom(p3, xy, {"a": "x", "b": "x", "c": "y"})
    assert g(("a", "b")) == Point.vertex("x")
    assert g(("b", "c")) == Point.edge("x", "y")
    hom = {"a": "x", "b": "y", "c": "x"}
    assert induced_from_weak_hom(p3, xy, hom) == induced_from_hom(p3, xy, hom)
    with pytest.raises(NotWeakHomomorphism):
        induced_from_weak_hom(p3, make_graph(["x", "y"]), {"a": "x", "b": "x", "c": "y"})


def test_incidence_preservation_examples(k2):
    assert check_incidence_preservation(identity_map(k2)) == []
    bad = PointMap(k2, k2, {"u": "u", "v": "v", ("u", "v"): "u"})
    found = check_incidence_preservation(bad)
    assert any(V_ in v.points and EUV in v.points for v in found)


@given(point_maps())
def test_incidence_preservation_iff_continuous(f):
    assert is_continuous(f) == (check_incidence_preservation(f) == [])
    assert is_continuous(f) == oracle_is_continuous(f)


@given(weak_hom_maps())
def test_weak_hom_induces_continuous_map(data):
    g, h, fv = data
    f = induced_from_weak_hom(g, h, fv)
    assert oracle_is_continuous(f)
    assert f.vertex_restriction() == fv
    if is_homomorphism(g, h, fv):
        assert classify(f).incidence_map


def test_vertex_identification_figure_graph():
    g = make_graph("abcuv", [("a", "b"), ("b", "v"), ("v", "c"), ("u", "b")])
    q = vertex_identification(g, "u", "v", "w")
    assert q.quotient == make_graph("abcw", [("a", "b"), ("b", "w"), ("w", "c")])
    assert q.map(("u", "b")) == q.map(("b", "v")) == Point.edge("b", "w")
    assert q.map("u") == q.map("v") == Point.vertex("w")
    assert is_continuous(q.map)


def test_vertex_identification_cases(k2, p3):
    q = vertex_identification(k2, "u", "v", "w")
    assert q.quotient == make_graph(["w"])
    assert set(q.map.images.values()) == {Point.vertex("w")}
    q2 = vertex_identification(p3, "a", "c", "w")
    assert q2.quotient == make_graph(["b", "w"], [("b", "w")])
    assert q2.map(("a", "b")) == q2.map(("b", "c")) == Point.edge("b", "w")
    assert vertex_identification(p3, "a", "c", "a").quotient.vertices == {"a", "b"}
    with pytest.raises(SameVertex):
        vertex_identification(p3, "a", "a", "w")
    with pytest.raises(NameClash):
        vertex_identification(p3, "a", "c", "b")


def test_contraction_script(p3):
    q = contraction_script(p3, [])
    assert q.map == identity_map(p3)
    two = contraction_script(p3, [("a", "b"), ("a+b", "c")])
    assert two.quotient == make_graph(["a+b+c"])
    c3 = named_graph("cycle", 3)
    one = contraction_script(c3, [("v1", "v2")])
    assert len(one.quotient.vertices) == 2 and len(one.quotient.edges) == 1
    with pytest.raises(StaleEdge):
        contraction_script(p3, [("a", "b"), ("a", "b")])


def test_subdivision_collapse(k2):
    sub = make_graph(["u", "w", "v"], [("u", "w"), ("w", "v")])
    f = subdivision_collapse(sub, k2, {"w": ("u", "v")})
    for p in ("w", ("u", "w"), ("w", "v")):
        assert f(p) == EUV
    assert f("u") == U and is_continuous(f)
    assert subdivision_collapse(k2, k2, {}) == identity_map(k2)
    c3 = named_graph("cycle", 3)
    c4 = make_graph(["v1", "v2", "v3", "x"], [("v1", "x"), ("x", "v2"), ("v2", "v3"), ("v1", "v3")])
    g = subdivision_collapse(c4, c3, {"x": ("v1", "v2")})
    assert is_continuous(g) and classify(g).surjective
    with pytest.raises(NotASubdivision):
        subdivision_collapse(c3, k2, {})


def test_vertexify_examples(k2, p3, xy):
    ident = identity_map(k2)
    assert vertexify(ident) == ident
    # everything onto the edge xy: nothing outside the star pulls either way
    f = const(k2, xy, ("x", "y"))
    g = vertexify(f)
    assert set(g.images.values()) == {Point.vertex("x")}
    assert oracle_is_continuous(g)
    mid = PointMap(p3, xy, {
        "a": "x", "c": "y", "b": ("x", "y"), ("a", "b"): ("x", "y"), ("b", "c"): ("x", "y"),
    })
    assert is_continuous(mid)
    out = vertexify(mid)
    assert out("b") == Point.vertex("y")
    assert out(("b", "c")) == Point.vertex("y")
    assert out(("a", "b")) == Point.edge("x", "y")
    assert out("a") == Point.vertex("x") and out("c") == Point.vertex("y")
    assert oracle_is_continuous(out) and is_vertex_map(out)
    with pytest.raises(NotContinuous):
        vertexify(PointMap(k2, k2, {"u": "u", "v": "v", ("u", "v"): "u"}))


@settings(max_examples=300)
@given(point_maps())
def test_vertexify_property(f):
    if not is_continuous(f):
        return
    g = vertexify(f)
    assert is_vertex_map(g) and oracle_is_continuous(g)
    moved = {p.key for p, q in f.images.items() if p.is_vertex and q.is_edge}
    for p, q in f.images.items():
        touched = (p.is_vertex and p.key in moved) or (p.is_edge and set(p.key) & moved)
        if not touched:
            assert g(p) == q
