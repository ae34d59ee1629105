"""Orientation predicates for points, segments and triangles in 3-space.

Two arithmetic modes are supported and chosen from the inputs themselves:

* exact: every coordinate is an ``int`` or ``fractions.Fraction``; signs are
  decided exactly.
* float: at least one coordinate is a ``float``; a predicate value ``v`` whose
  inputs have magnitude at most ``M`` is flagged degenerate when
  ``|v| < EPS * M**k`` (``k`` = 3 for orient3d, 2 for orient2d).

A degenerate float outcome is never a sign. Callers resample or escalate by
re-running on ``to_exact`` copies of the points.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Sequence, Tuple, Union

Scalar = Union[int, Fraction, float]
Point3 = Tuple[Scalar, Scalar, Scalar]

EPS = 1e-12


class DegenerateInputError(ValueError):
    """Raised when a predicate's own precondition (e.g. a non-degenerate
    triangle) is violated."""


@dataclass(frozen=True)
class PredicateOutcome:
    sign: int
    degenerate: bool = False


@dataclass(frozen=True)
class NoIntersection:
    pass


@dataclass(frozen=True)
class Pierce:
    sign: int


@dataclass(frozen=True)
class Degenerate:
    reason: str


NO_INTERSECTION = NoIntersection()

INSIDE = "inside"
OUTSIDE = "outside"
ON_BOUNDARY = "on_boundary"


@dataclass(frozen=True)
class Violation:
    kind: str  # "coincident" | "collinear" | "coplanar"
    indices: Tuple[int, ...]


# -- scalar helpers ---------------------------------------------------------

def is_float_mode(*points) -> bool:
    return any(isinstance(c, float) for p in points for c in p)


def to_exact(p) -> Tuple[Fraction, Fraction, Fraction]:
    """Exact rational copy of a point (floats convert without rounding)."""
    return tuple(Fraction(c) for c in p)


def sub(p, q):
    return (p[0] - q[0], p[1] - q[1], p[2] - q[2])


def add(p, q):
    return (p[0] + q[0], p[1] + q[1], p[2] + q[2])


def scale(p, s):
    return (p[0] * s, p[1] * s, p[2] * s)


def dot(p, q):
    return p[0] * q[0] + p[1] * q[1] + p[2] * q[2]


def cross(p, q):
    return (p[1] * q[2] - p[2] * q[1],
            p[2] * q[0] - p[0] * q[2],
            p[0] * q[1] - p[1] * q[0])


def _sgn(v) -> int:
    return int(v > 0) - int(v < 0)


def det3(p, q, r, s):
    """Raw determinant of [q-p, r-p, s-p]."""
    a = sub(q, p)
    b = sub(r, p)
    c = sub(s, p)
    return (a[0] * (b[1] * c[2] - b[2] * c[1])
            - a[1] * (b[0] * c[2] - b[2] * c[0])
            + a[2] * (b[0] * c[1] - b[1] * c[0]))


def _magnitude(base, *others) -> float:
    m = 0.0
    for o in others:
        for x, y in zip(o, base):
            d = abs(float(x) - float(y))
            if d > m:
                m = d
    return m


# -- predicates -------------------------------------------------------------

def orient3d(p, q, r, s) -> PredicateOutcome:
    """Sign of det[q-p, r-p, s-p]; positive for a right-handed frame."""
    v = det3(p, q, r, s)
    if is_float_mode(p, q, r, s):
        m = _magnitude(p, q, r, s)
        if abs(v) < EPS * m ** 3 or m == 0.0:
            return PredicateOutcome(_sgn(v), True)
    return PredicateOutcome(_sgn(v), False)


def orient2d(a, b, c) -> PredicateOutcome:
    """Sign of the 2-D cross product (b-a) x (c-a); positive when ccw."""
    v = (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0])
    if any(isinstance(x, float) for x in (*a, *b, *c)):
        m = max(abs(float(x) - float(y)) for o in (b, c) for x, y in zip(o, a))
        if abs(v) < EPS * m ** 2 or m == 0.0:
            return PredicateOutcome(_sgn(v), True)
    return PredicateOutcome(_sgn(v), False)


def triangle_is_degenerate(a, b, c) -> bool:
    n = cross(sub(b, a), sub(c, a))
    if is_float_mode(a, b, c):
        m = _magnitude(a, b, c)
        return dot(n, n) < (EPS * m * m) ** 2 or m == 0.0
    return n == (0, 0, 0)


def segment_triangle_pierce(seg, tri):
    """Classify how segment ``seg = (p, q)`` meets triangle ``tri = (a, b, c)``.

    Returns ``Pierce(sign)`` when the open segment crosses the open triangle
    transversally, where ``sign`` is +1 if the crossing runs along
    (b-a) x (c-a); ``NO_INTERSECTION``; or ``Degenerate(reason)`` for any
    contact on the plane, boundary or endpoints.
    """
    p, q = seg
    a, b, c = tri
    if triangle_is_degenerate(a, b, c):
        raise DegenerateInputError("triangle vertices are collinear")
    op = orient3d(a, b, c, p)
    oq = orient3d(a, b, c, q)
    if op.degenerate or oq.degenerate or op.sign == 0 or oq.sign == 0:
        if op.sign == 0 and oq.sign == 0 and not (op.degenerate or oq.degenerate):
            return Degenerate("segment coplanar with triangle")
        if op.sign == oq.sign and not (op.degenerate or oq.degenerate):
            return NO_INTERSECTION
        return Degenerate("endpoint on triangle plane")
    if op.sign == oq.sign:
        return NO_INTERSECTION
    sides = [orient3d(p, q, a, b), orient3d(p, q, b, c), orient3d(p, q, c, a)]
    clear = [s.sign for s in sides if not s.degenerate and s.sign != 0]
    if 1 in clear and -1 in clear:
        return NO_INTERSECTION
    if len(clear) < 3:
        return Degenerate("crossing on triangle boundary")
    return Pierce(oq.sign)


def point_in_tetrahedron(p, t: Sequence) -> str:
    """Strict interior test: INSIDE, OUTSIDE or ON_BOUNDARY."""
    a, b, c, d = t
    o = orient3d(a, b, c, d)
    if o.sign == 0 or o.degenerate:
        raise DegenerateInputError("tetrahedron is flat")
    faces = ((p, b, c, d), (a, p, c, d), (a, b, p, d), (a, b, c, p))
    signs = []
    for f in faces:
        r = orient3d(*f)
        signs.append(0 if r.degenerate else r.sign)
    if any(s == -o.sign for s in signs):
        return OUTSIDE
    if 0 in signs:
        return ON_BOUNDARY
    return INSIDE


def _collinear(a, b, c) -> bool:
    n = cross(sub(b, a), sub(c, a))
    if is_float_mode(a, b, c):
        m = _magnitude(a, b, c)
        return dot(n, n) < (EPS * m * m) ** 2
    return n == (0, 0, 0)


def _coincident(a, b) -> bool:
    if is_float_mode(a, b):
        return _magnitude(a, b) < EPS
    return tuple(a) == tuple(b)


def general_position_check(points: Sequence) -> Violation | None:
    """Return ``None`` when the points are in general position, otherwise the
    first offending tuple (pairs, then triples, then quadruples)."""
    pts = list(points)
    if len(pts) < 2:
        raise ValueError("need at least two points")
    for i, j in combinations(range(len(pts)), 2):
        if _coincident(pts[i], pts[j]):
            return Violation("coincident", (i, j))
    for i, j, k in combinations(range(len(pts)), 3):
        if _collinear(pts[i], pts[j], pts[k]):
            return Violation("collinear", (i, j, k))
    for quad in combinations(range(len(pts)), 4):
        o = orient3d(*(pts[i] for i in quad))
        if o.sign == 0 or o.degenerate:
            return Violation("coplanar", quad)
    return None


# -- segment/segment contact (used by embedding validation) -----------------

def _drop_axis(n) -> int:
    mags = [abs(x) for x in n]
    return mags.index(max(mags))


def _project2(p, axis):
    return tuple(p[i] for i in range(3) if i != axis)


def _on_segment2(a, b, p) -> bool:
    # p is known collinear with a, b
    return (min(a[0], b[0]) <= p[0] <= max(a[0], b[0])
            and min(a[1], b[1]) <= p[1] <= max(a[1], b[1]))


def _segments_intersect2(p1, q1, p2, q2) -> bool:
    d1 = orient2d(p2, q2, p1).sign
    d2 = orient2d(p2, q2, q1).sign
    d3 = orient2d(p1, q1, p2).sign
    d4 = orient2d(p1, q1, q2).sign
    if d1 * d2 < 0 and d3 * d4 < 0:
        return True
    return ((d1 == 0 and _on_segment2(p2, q2, p1))
            or (d2 == 0 and _on_segment2(p2, q2, q1))
            or (d3 == 0 and _on_segment2(p1, q1, p2))
            or (d4 == 0 and _on_segment2(p1, q1, q2)))


def segments_intersect(p1, q1, p2, q2) -> bool:
    """Exact closed-segment intersection test in 3-space.

    Float inputs are converted to exact rationals first, so the answer is
    exact for the coordinates as given.
    """
    p1, q1, p2, q2 = (to_exact(x) for x in (p1, q1, p2, q2))
    if det3(p1, q1, p2, q2) != 0:
        return False
    d = sub(q1, p1)
    n = cross(d, sub(p2, p1))
    if n == (0, 0, 0):
        n = cross(d, sub(q2, p1))
    if n == (0, 0, 0):
        # all four points collinear: overlap of parameter intervals along d
        if d == (0, 0, 0):
            d = sub(q2, p2)
        t = [dot(sub(x, p1), d) for x in (p1, q1, p2, q2)]
        lo1, hi1 = sorted(t[:2])
        lo2, hi2 = sorted(t[2:])
        return max(lo1, lo2) <= min(hi1, hi2)
    axis = _drop_axis(n)
    return _segments_intersect2(*(_project2(x, axis) for x in (p1, q1, p2, q2)))


# -- bend triangles ---------------------------------------------------------

def _clip_contact_on_sticks(p, q, a, b, c) -> bool:
    """Coplanar case, exact: True when segment pq meets closed triangle abc
    somewhere off the two sticks ab and bc."""
    p, q, a, b, c = (to_exact(x) for x in (p, q, a, b, c))
    axis = _drop_axis(cross(sub(b, a), sub(c, a)))
    p2, q2, a2, b2, c2 = (_project2(x, axis) for x in (p, q, a, b, c))
    sigma = orient2d(a2, b2, c2).sign
    lo, hi = Fraction(0), Fraction(1)
    d = (q2[0] - p2[0], q2[1] - p2[1])
    for u, v in ((a2, b2), (b2, c2), (c2, a2)):
        f0 = sigma * ((v[0] - u[0]) * (p2[1] - u[1]) - (v[1] - u[1]) * (p2[0] - u[0]))
        f1 = sigma * ((v[0] - u[0]) * (q2[1] - u[1]) - (v[1] - u[1]) * (q2[0] - u[0]))
        # f(t) = f0 + t (f1 - f0) >= 0
        if f0 == f1:
            if f0 < 0:
                return False
            continue
        t = f0 / (f0 - f1)
        if f1 > f0:
            lo = max(lo, t)
        else:
            hi = min(hi, t)
    if lo > hi:
        return False
    ends = [(p2[0] + t * d[0], p2[1] + t * d[1]) for t in (lo, hi)]
    for u, v in ((a2, b2), (b2, c2)):
        if all(orient2d(u, v, x).sign == 0 for x in ends):
            return False
    return True


def bend_triangle_contact(seg, a, b, c) -> bool | None:
    """Does stick ``seg`` meet the closed triangle ``abc`` anywhere other than
    on the sticks ``ab`` and ``bc``?

    Contacts on the spanning side ``ac`` count. Returns ``None`` when a float
    predicate is within epsilon and the answer depends on it.
    """
    p, q = seg
    tri = (tuple(a), tuple(b), tuple(c))
    fl = is_float_mode(p, q, a, b, c)
    op = orient3d(a, b, c, p)
    oq = orient3d(a, b, c, q)
    sp = 0 if tuple(p) in tri else (None if op.degenerate else op.sign)
    sq = 0 if tuple(q) in tri else (None if oq.degenerate else oq.sign)
    if sp is None or sq is None:
        return None
    if sp == sq and sp != 0:
        return False
    if sp == 0 and sq == 0:
        if fl and not (tuple(p) in tri and tuple(q) in tri):
            return None
        return _clip_contact_on_sticks(p, q, a, b, c)
    # single contact point with the plane
    if sp == 0 and tuple(p) in tri:
        return False
    if sq == 0 and tuple(q) in tri:
        return False
    s = [orient3d(p, q, a, b), orient3d(p, q, b, c), orient3d(p, q, c, a)]
    if any(x.degenerate for x in s):
        clear = [x.sign for x in s if not x.degenerate and x.sign]
        if 1 in clear and -1 in clear:
            return False
        return None
    signs = [x.sign for x in s]
    if 1 in signs and -1 in signs:
        return False
    zeros = [i for i, v in enumerate(signs) if v == 0]
    if not zeros:
        return True
    if len(zeros) >= 2:
        return False  # at a triangle vertex, which lies on ab or bc
    # on one side line: ab (0) and bc (1) are sticks, ca (2) is the spanning side
    return zeros[0] == 2
