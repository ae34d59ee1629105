from fractions import Fraction
import numpy as np
import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from stickgraph.geometry import (
    INSIDE,
    NO_INTERSECTION,
    ON_BOUNDARY,
    OUTSIDE,
    Degenerate,
    DegenerateInputError,
    Pierce,
    general_position_check,
    orient3d,
    point_in_tetrahedron,
    segment_triangle_pierce,
    to_exact,
    triangle_is_degenerate,
)

from conftest import TETRA, int_point, random_affine, rat_point

TRI = [(1, 0, 0), (-1, 1, 0), (-1, -1, 0)]


def test_orient3d_examples():
    assert orient3d(*TETRA).sign == 1
    assert orient3d((0, 0, 0), (1, 0, 0), (0, 1, 0), (1, 1, 0)).sign == 0
    assert orient3d((0, 0, 0), (1, 0, 0), (0, 0, 1), (0, 1, 0)).sign == -1
    assert not orient3d(*TETRA).degenerate


def test_orient3d_float_flags_near_coplanar():
    o = orient3d((0.0, 0.0, 0.0), (1.0, 0.0, 0.0), (0.0, 1.0, 0.0), (1.0, 1.0, 1e-14))
    assert o.degenerate
    assert not orient3d((0.0, 0.0, 0.0), (1.0, 0.0, 0.0), (0.0, 1.0, 0.0), (0.3, 0.2, 0.5)).degenerate


def test_pierce_examples():
    assert segment_triangle_pierce(((0, 0, -1), (0, 0, 1)), TRI) == Pierce(1)
    assert segment_triangle_pierce(((10, 10, -1), (10, 10, 1)), TRI) is NO_INTERSECTION
    r = segment_triangle_pierce(((0, 0, 0), (0, 0, 1)), TRI)
    assert isinstance(r, Degenerate)


def test_pierce_boundary_and_coplanar_are_degenerate():
    # through the vertex (1,0,0)
    assert isinstance(segment_triangle_pierce(((1, 0, -1), (1, 0, 1)), TRI), Degenerate)
    assert isinstance(segment_triangle_pierce(((-5, 0, 0), (5, 0, 0)), TRI), Degenerate)


def test_pierce_rejects_flat_triangle():
    with pytest.raises(DegenerateInputError):
        segment_triangle_pierce(((0, 0, -1), (0, 0, 1)), [(0, 0, 0), (1, 0, 0), (2, 0, 0)])


def test_point_in_tetrahedron_examples():
    c = tuple(Fraction(sum(p[i] for p in TETRA), 4) for i in range(3))
    assert point_in_tetrahedron(c, TETRA) == INSIDE
    assert point_in_tetrahedron((5, 5, 5), TETRA) == OUTSIDE
    assert point_in_tetrahedron((Fraction(1, 2), Fraction(1, 2), 0), TETRA) == ON_BOUNDARY
    with pytest.raises(DegenerateInputError):
        point_in_tetrahedron((0, 0, 0), [(0, 0, 0), (1, 0, 0), (0, 1, 0), (1, 1, 0)])


def test_general_position_examples():
    assert general_position_check(TETRA) is None
    v = general_position_check([(0, 0, 0), (1, 2, 3), (0, 0, 0)])
    assert v.kind == "coincident" and v.indices == (0, 2)
    v = general_position_check([(0, 0, 0), (1, 0, 0), (2, 0, 0), (0, 1, 0), (0, 0, 1)])
    assert v.kind == "collinear" and v.indices == (0, 1, 2)
    v = general_position_check([(0, 0, 0), (1, 0, 0), (0, 1, 0), (1, 1, 0), (0, 0, 1)])
    assert v.kind == "coplanar"


@given(rat_point, rat_point, rat_point, rat_point)
def test_orient3d_antisymmetric(p, q, r, s):
    base = orient3d(p, q, r, s).sign
    pts = [p, q, r, s]
    for i in range(4):
        for j in range(i + 1, 4):
            sw = list(pts)
            sw[i], sw[j] = sw[j], sw[i]
            assert orient3d(*sw).sign == -base


@given(int_point, int_point, int_point, int_point, st.integers(0, 2 ** 32 - 1))
def test_orient3d_affine_covariance(p, q, r, s, seed):
    f, d = random_affine(np.random.default_rng(seed))
    sgn = 1 if d > 0 else -1
    assert orient3d(f(p), f(q), f(r), f(s)).sign == sgn * orient3d(p, q, r, s).sign


@given(int_point, int_point, int_point, int_point, int_point)
def test_pierce_reversal_flips_sign(p, q, a, b, c):
    assume(not triangle_is_degenerate(a, b, c))
    r = segment_triangle_pierce((p, q), (a, b, c))
    back = segment_triangle_pierce((q, p), (a, b, c))
    if isinstance(r, Pierce):
        assert back == Pierce(-r.sign)
    else:
        assert type(back) is type(r)


@given(st.integers(0, 2 ** 32 - 1))
def test_exact_and_float_modes_agree(seed):
    rng = np.random.default_rng(seed)
    pts = [tuple(float(x) for x in rng.random(3)) for _ in range(4)]
    f = orient3d(*pts)
    e = orient3d(*(to_exact(p) for p in pts))
    if not f.degenerate:
        assert f.sign == e.sign


@given(int_point, int_point, int_point, int_point, int_point)
def test_inside_iff_signs_match_orientation(p, a, b, c, d):
    t = (a, b, c, d)
    o = orient3d(*t).sign
    assume(o != 0)
    signs = [orient3d(p, b, c, d).sign, orient3d(a, p, c, d).sign,
             orient3d(a, b, p, d).sign, orient3d(a, b, c, p).sign]
    assert (point_in_tetrahedron(p, t) == INSIDE) == all(s == o for s in signs)
