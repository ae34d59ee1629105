from fractions import Fraction
from itertools import combinations, permutations

import numpy as np
import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from stickgraph.geometry import Degenerate, segment_triangle_pierce, Pierce
from stickgraph.graph import (
    REDUCIBLE,
    VALID,
    AbstractGraph,
    Irreducible,
    PLEmbedding,
    SelfIntersection,
    complete_bipartite,
    complete_graph,
    cycle_from_vertices,
    degree2_triangle,
    enumerate_cycles,
    is_reducible_triangle,
    realize_cycle,
    reduce,
    reduce_with_log,
    validate,
)
from stickgraph.knots.polygons import classify_polygon

from conftest import TETRA, small_int


def linear(points, graph=None, name=None):
    labels = [f"v{i + 1}" for i in range(len(points))]
    g = graph or complete_graph(len(points), labels)
    return PLEmbedding(dict(zip(labels, points)), g.edges, name=name, vertices=labels)


def tetra_with_bend(bend):
    e = linear(TETRA)
    routes = [r if r != ("v1", "v2") else ("v1", "b", "v2") for r in e.routes]
    pos = dict(e.positions, b=bend)
    return PLEmbedding(pos, routes, vertices=e.graph.vertices)


def brute_force_cycle_count(g):
    adj = {frozenset(e) for e in g.edges}
    seen = set()
    for k in range(3, len(g.vertices) + 1):
        for sub in combinations(g.vertices, k):
            for perm in permutations(sub[1:]):
                cyc = (sub[0],) + perm
                if all(frozenset((cyc[i], cyc[(i + 1) % k])) in adj for i in range(k)):
                    seen.add(frozenset(frozenset((cyc[i], cyc[(i + 1) % k])) for i in range(k)))
    return len(seen)


# -- graphs -------------------------------------------------------------------

def test_graph_rejects_loops_and_repeats():
    with pytest.raises(ValueError):
        AbstractGraph(("a", "b"), (("a", "a"),))
    with pytest.raises(ValueError):
        AbstractGraph(("a", "b"), (("a", "b"), ("b", "a")))
    with pytest.raises(ValueError):
        AbstractGraph(("a", "a"), ())


@pytest.mark.parametrize("g, n", [
    (complete_graph(4), 7),
    (complete_bipartite("abc", "xyz"), 15),
    (complete_graph(5), 37),
    (complete_graph(6), 197),
])
def test_cycle_counts(g, n):
    cycles = enumerate_cycles(g)
    assert len(cycles) == n == brute_force_cycle_count(g)


def test_cycle_lengths_k4_and_k33():
    lens = sorted(len(c) for c in enumerate_cycles(complete_graph(4)))
    assert lens == [3] * 4 + [4] * 3
    lens = sorted(len(c) for c in enumerate_cycles(complete_bipartite("abc", "xyz")))
    assert lens == [4] * 9 + [6] * 6


@given(st.integers(3, 6), st.integers(0, 2 ** 32 - 1))
def test_cycle_enumeration_matches_brute_force(n, seed):
    rng = np.random.default_rng(seed)
    labels = [f"v{i}" for i in range(n)]
    edges = [e for e in combinations(labels, 2) if rng.random() < 0.6]
    g = AbstractGraph(tuple(labels), tuple(edges))
    cycles = enumerate_cycles(g)
    assert len(cycles) == brute_force_cycle_count(g)
    keys = {frozenset(c.edges) for c in cycles}
    assert len(keys) == len(cycles)


# -- validation ---------------------------------------------------------------

def test_validate_examples():
    assert validate(linear(TETRA)) == VALID
    pos = {"a": (0, 0, 0), "b": (2, 2, 0), "c": (0, 2, 0), "d": (2, 0, 0)}
    e = PLEmbedding(pos, [("a", "b"), ("c", "d")])
    assert isinstance(validate(e), SelfIntersection)
    e = PLEmbedding({"a": (0, 0, 0), "b": (1, 0, 0), "m": (0, 0, 0)}, [("a", "m", "b")])
    assert isinstance(validate(e), Degenerate)


def test_validate_rejects_straight_bend_and_overlap():
    e = PLEmbedding({"a": (0, 0, 0), "b": (2, 0, 0), "m": (1, 0, 0)}, [("a", "m", "b")])
    assert isinstance(validate(e), Degenerate)
    pos = {"a": (0, 0, 0), "b": (2, 0, 0), "c": (1, 0, 0)}
    e = PLEmbedding(pos, [("a", "b"), ("a", "c")])
    assert isinstance(validate(e), SelfIntersection)


def test_float_validation_flags_near_touch():
    pos = {"a": (0.0, 0.0, 0.0), "b": (1.0, 0.0, 0.0), "c": (0.5, 1e-14, -1.0), "d": (0.5, 1e-14, 1.0)}
    assert isinstance(validate(PLEmbedding(pos, [("a", "b"), ("c", "d")])), Degenerate)


# -- cycles -------------------------------------------------------------------

def test_realize_cycle_counts():
    e = linear(TETRA)
    tri = next(c for c in enumerate_cycles(e.graph) if len(c) == 3)
    assert len(realize_cycle(e, tri)) == 3
    k33 = linear([(0, 0, 0), (1, 0, 0), (2, 0, 1), (0, 1, 3), (1, 2, 5), (3, 1, 7)],
                 complete_bipartite(["v1", "v2", "v3"], ["v4", "v5", "v6"]))
    hexa = next(c for c in enumerate_cycles(k33.graph) if len(c) == 6)
    assert len(realize_cycle(k33, hexa)) == 6
    bent = tetra_with_bend((Fraction(1, 2), -1, -1))
    c = cycle_from_vertices(bent, ["v1", "v2", "v3"])
    poly = realize_cycle(bent, c)
    assert len(poly) == 4 and (Fraction(1, 2), -1, -1) in poly


# -- reducibility -------------------------------------------------------------

def test_degree2_triangle():
    e = tetra_with_bend((Fraction(1, 2), -1, -1))
    assert degree2_triangle(e, "b") == ((0, 0, 0), (Fraction(1, 2), -1, -1), (1, 0, 0))
    with pytest.raises(KeyError):
        degree2_triangle(linear(TETRA), "v1")


def test_two_bends_two_triangles():
    e = tetra_with_bend((Fraction(1, 2), -1, -1))
    routes = [r if r != ("v3", "v4") else ("v3", "c", "v4") for r in e.routes]
    e2 = PLEmbedding(dict(e.positions, c=(-1, Fraction(1, 2), Fraction(1, 2))), routes,
                     vertices=e.graph.vertices)
    assert e2.stick_count == 8
    assert degree2_triangle(e2, "b") != degree2_triangle(e2, "c")


def test_reducible_bend_on_tetrahedron():
    e = tetra_with_bend((Fraction(1, 2), Fraction(-1, 10), Fraction(-1, 10)))
    assert validate(e) == VALID and e.stick_count == 7
    assert is_reducible_triangle(e, "b") is REDUCIBLE
    red = reduce(e)
    assert red.stick_count == 6 and red == linear(TETRA)


def test_pierced_bend_triangle_is_irreducible():
    pos = {"v1": (-2, 0, 0), "v2": (2, 0, 0), "v": (0, 3, 0), "v4": (0, 1, -2), "v5": (0, 1, 2)}
    routes = [("v1", "v", "v2"), ("v1", "v4"), ("v1", "v5"), ("v2", "v4"), ("v2", "v5"), ("v4", "v5")]
    e = PLEmbedding(pos, routes)
    assert validate(e) == VALID
    assert isinstance(segment_triangle_pierce((pos["v4"], pos["v5"]), degree2_triangle(e, "v")), Pierce)
    res = is_reducible_triangle(e, "v")
    assert isinstance(res, Irreducible)
    assert [(s.p, s.q) for s in res.sticks] == [("v4", "v5")]
    assert reduce(e) == e


def test_linear_k5_is_fixpoint():
    e = linear([(0, 0, 0), (5, 1, 0), (1, 4, 1), (2, 1, 6), (3, 3, 3)])
    assert reduce(e) is e or reduce(e) == e


def test_reduction_log_is_auditable():
    e = tetra_with_bend((Fraction(1, 2), Fraction(-1, 10), Fraction(-1, 10)))
    red, log = reduce_with_log(e)
    assert [s.bend for s in log] == ["b"]
    assert log[0].triangle == degree2_triangle(e, "b")


def injected(seed):
    """Random integer K4 with reducible bends injected near edge midpoints."""
    rng = np.random.default_rng(seed)
    while True:
        pts = [tuple(int(c) for c in rng.integers(-12, 13, 3)) for _ in range(4)]
        e = linear(pts)
        if validate(e) != VALID:
            continue
        routes, pos = [], dict(e.positions)
        for i, (u, v) in enumerate(e.routes):
            if rng.random() < 0.6:
                a, b = pos[u], pos[v]
                off = tuple(Fraction(int(x), 40) for x in rng.integers(-3, 4, 3))
                pos[f"b{i}"] = tuple((x + y) / 2 + o for x, y, o in zip(a, b, off))
                routes.append((u, f"b{i}", v))
            else:
                routes.append((u, v))
        try:
            out = PLEmbedding(pos, routes, vertices=e.graph.vertices)
        except ValueError:
            continue
        if validate(out) == VALID:
            return out


@given(st.integers(0, 2 ** 32 - 1))
def test_reduce_properties(seed):
    e = injected(seed)
    r1 = reduce(e)
    assert r1.stick_count <= e.stick_count
    assert validate(r1) == VALID
    assert reduce(r1).stick_count == r1.stick_count
