"""Hypothesis strategies for small graphs."""

from hypothesis import strategies as st

from bareo import make_graph


@st.composite
def graphs(draw, min_vertices=0, max_vertices=5):
    n = draw(st.integers(min_vertices, max_vertices))
    ids = [f"v{i}" for i in range(1, n + 1)]
    pairs = [(a, b) for i, a in enumerate(ids) for b in ids[i + 1:]]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return make_graph(ids, chosen)


@st.composite
def graphs_with_subset(draw, **kw):
    g = draw(graphs(**kw))
    from bareo import bare_points

    pts = sorted(bare_points(g).points)
    chosen = draw(st.lists(st.sampled_from(pts), unique=True)) if pts else []
    return g, chosen


@st.composite
def point_maps(draw, max_vertices=3):
    from bareo import PointMap
    from bareo.topology import space

    g = draw(graphs(min_vertices=1, max_vertices=max_vertices))
    h = draw(graphs(min_vertices=1, max_vertices=max_vertices))
    n = space(h).size
    table = draw(st.lists(st.integers(0, n - 1), min_size=space(g).size, max_size=space(g).size))
    return PointMap.from_table(g, h, table)


@st.composite
def weak_hom_maps(draw, max_vertices=4):
    """A weak homomorphism g -> h given as a vertex dict (retries until one is drawn)."""
    from bareo import is_weak_homomorphism

    g = draw(graphs(min_vertices=1, max_vertices=max_vertices))
    h = draw(graphs(min_vertices=1, max_vertices=max_vertices))
    hv = sorted(h.vertices)
    fv = {v: draw(st.sampled_from(hv)) for v in sorted(g.vertices)}
    from hypothesis import assume

    assume(is_weak_homomorphism(g, h, fv))
    return g, h, fv
