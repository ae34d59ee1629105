"""Knot type of a single closed polygon."""
from __future__ import annotations

from typing import List, Sequence

from stickgraph.geometry import bend_triangle_contact, cross, sub
from stickgraph.knots.diagram import generic_projection
from stickgraph.knots.invariants import (
    UNKNOT,
    KnotClass,
    jones_normalized,
    knot_class_from_jones,
    knot_determinant,
)

MIN_KNOT_STICKS = 6


class DegeneratePolygonError(ValueError):
    pass


def _collinear(a, b, c) -> bool:
    return cross(sub(b, a), sub(c, a)) == (0, 0, 0)


def corner_is_reducible(poly: Sequence, k: int) -> bool | None:
    """Whether the triangle at corner ``k`` is missed by every other stick of
    the polygon (``None`` if a float predicate is within epsilon)."""
    n = len(poly)
    a, b, c = poly[k - 1], poly[k], poly[(k + 1) % n]
    undecided = False
    for i in range(n):
        # sticks (k-1, k) and (k, k+1) define the triangle
        if i in ((k - 1) % n, k):
            continue
        hit = bend_triangle_contact((poly[i], poly[(i + 1) % n]), a, b, c)
        if hit:
            return False
        if hit is None:
            undecided = True
    return None if undecided else True


def simplify_polygon(poly: Sequence) -> List:
    """Straighten reducible corners until none is left (knot type is kept).

    Corners are scanned in order and the scan restarts after each
    straightening, so the result is deterministic.
    """
    pts = [tuple(p) for p in poly]
    changed = True
    while changed and len(pts) > 3:
        changed = False
        for k in range(len(pts)):
            if _collinear(pts[k - 1], pts[k], pts[(k + 1) % len(pts)]):
                del pts[k]
                changed = True
                break
            if corner_is_reducible(pts, k):
                del pts[k]
                changed = True
                break
    return pts


def polygon_diagram(poly: Sequence, rng):
    return generic_projection([list(poly)], rng)


def classify_polygon(poly: Sequence, rng, simplify: bool = True) -> KnotClass:
    """Unknot / trefoil (with chirality) / other, decided by the Jones polynomial.

    Polygons with fewer than six sticks after simplification are unknotted
    without projecting.
    """
    pts = simplify_polygon(poly) if simplify else list(poly)
    if len(pts) < MIN_KNOT_STICKS:
        return UNKNOT
    d = polygon_diagram(pts, rng)
    return knot_class_from_jones(jones_normalized(d))


def polygon_determinant(poly: Sequence, rng, simplify: bool = True) -> int:
    pts = simplify_polygon(poly) if simplify else list(poly)
    if len(pts) < MIN_KNOT_STICKS:
        return 1
    return knot_determinant(polygon_diagram(pts, rng))


def hexagon_prefilter_unknot(hexagon: Sequence) -> bool | None:
    """True when some corner of the hexagon is reducible within the hexagon,
    so it is isotopic to a pentagon and hence unknotted."""
    undecided = False
    for k in range(len(hexagon)):
        r = corner_is_reducible(hexagon, k)
        if r:
            return True
        if r is None:
            undecided = True
    return None if undecided else False


def hexagon_is_knotted(hexagon: Sequence, rng) -> bool:
    """Prefilter on reducible corners, then the knot determinant.

    A hexagon is either unknotted or a trefoil, so determinant 1 versus 3
    settles it.
    """
    pre = hexagon_prefilter_unknot(hexagon)
    if pre is None:
        raise DegeneratePolygonError("hexagon corner test within epsilon")
    if pre:
        return False
    return knot_determinant(polygon_diagram(hexagon, rng)) != 1
