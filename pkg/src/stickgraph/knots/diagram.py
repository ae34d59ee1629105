"""Planar diagrams of closed polygons via orthogonal projection.

Crossings are stored in planar-diagram (PD) form: each crossing lists its
four incident arc labels counterclockwise, starting from the incoming
under-strand. Arc labels increase along the orientation of each component.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import List, Sequence, Tuple

import numpy as np

from stickgraph.geometry import EPS, is_float_mode

MAX_ATTEMPTS = 64


@dataclass(frozen=True)
class Crossing:
    pd: Tuple[int, int, int, int]
    sign: int
    over_component: int = 0
    under_component: int = 0


@dataclass(frozen=True)
class Diagram:
    crossings: Tuple[Crossing, ...]
    components: int = 1
    free_loops: int = 0

    @property
    def n(self) -> int:
        return len(self.crossings)

    @property
    def writhe(self) -> int:
        return sum(c.sign for c in self.crossings)

    def pd_code(self) -> List[Tuple[int, int, int, int]]:
        return [c.pd for c in self.crossings]

    def to_pd_text(self) -> str:
        """KnotTheory-style ``PD[X[...], ...]`` text."""
        xs = ", ".join("X[%d, %d, %d, %d]" % c.pd for c in self.crossings)
        return f"PD[{xs}]"

    def mirror(self) -> "Diagram":
        # swapping over and under rotates each PD tuple by one position
        out = []
        for c in self.crossings:
            a, b, cc, d = c.pd
            if c.sign > 0:
                # positive: (u_in, o_out, u_out, o_in) -> new under is old over
                pd = (d, a, b, cc)
            else:
                pd = (b, cc, d, a)
            out.append(Crossing(pd, -c.sign, c.under_component, c.over_component))
        return Diagram(tuple(out), self.components, self.free_loops)

    @classmethod
    def from_pd(cls, codes: Sequence[Sequence[int]], signs: Sequence[int] | None = None,
                free_loops: int = 0) -> "Diagram":
        """Build a diagram from PD tuples.

        Without explicit ``signs`` the KnotTheory rule is used: a crossing
        ``X[i, j, k, l]`` is positive when ``j - l == 1`` or ``l - j > 1``.
        """
        codes = [tuple(int(x) for x in c) for c in codes]
        if signs is None:
            signs = [1 if (j - l == 1 or l - j > 1) else -1 for (_, j, _, l) in codes]
        parent = {}

        def find(x):
            parent.setdefault(x, x)
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for a, b, c, d in codes:
            parent[find(a)] = find(c)
            parent[find(b)] = find(d)
        roots = sorted({find(x) for code in codes for x in code})
        comp = {r: i for i, r in enumerate(roots)}
        xs = []
        for code, s in zip(codes, signs):
            a, b, _, _ = code
            xs.append(Crossing(code, int(s), comp[find(b)], comp[find(a)]))
        return cls(tuple(xs), len(roots) + free_loops, free_loops)


@dataclass(frozen=True)
class NonGeneric:
    reason: str


class ProjectionError(RuntimeError):
    """No generic projection direction was found within the attempt budget."""


@dataclass
class _Seg:
    comp: int
    idx: int
    p: tuple
    q: tuple
    hp: object
    hq: object
    events: list = field(default_factory=list)


def _basis(direction, exact: bool):
    d = tuple(direction)
    mags = [abs(x) for x in d]
    k = mags.index(min(mags))
    e = [0, 0, 0]
    e[k] = 1
    u = (d[1] * e[2] - d[2] * e[1], d[2] * e[0] - d[0] * e[2], d[0] * e[1] - d[1] * e[0])
    v = (d[1] * u[2] - d[2] * u[1], d[2] * u[0] - d[0] * u[2], d[0] * u[1] - d[1] * u[0])
    if not exact:
        d, u, v = (tuple(np.asarray(x, float) / np.linalg.norm(np.asarray(x, float)))
                   for x in (d, u, v))
        d, u, v = (tuple(float(c) for c in x) for x in (d, u, v))
    return d, u, v


def _dot(a, b):
    return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]


def _cross2(a, b):
    return a[0] * b[1] - a[1] * b[0]


def _between(a, b, p, tol):
    return (min(a[0], b[0]) - tol <= p[0] <= max(a[0], b[0]) + tol
            and min(a[1], b[1]) - tol <= p[1] <= max(a[1], b[1]) + tol)


def project(polygons: Sequence[Sequence], direction) -> Diagram | NonGeneric:
    """Orthogonal projection of disjoint closed polygons along ``direction``.

    The viewer sits at ``+direction``; the higher strand (larger dot product
    with ``direction``) passes over.
    """
    polys = [list(p) for p in polygons]
    exact = not is_float_mode(direction, *(pt for poly in polys for pt in poly))
    if exact:
        polys = [[tuple(Fraction(c) for c in pt) for pt in poly] for poly in polys]
    d, u, v = _basis(direction, exact)
    if exact and d == (0, 0, 0):
        raise ValueError("projection direction must be nonzero")

    scale = 1.0
    if not exact:
        scale = max((abs(float(c)) for poly in polys for pt in poly for c in pt), default=1.0) or 1.0
    tol2 = 0 if exact else EPS * scale * scale
    tol1 = 0 if exact else EPS * scale

    segs: List[_Seg] = []
    comp_segs: List[List[_Seg]] = []
    for ci, poly in enumerate(polys):
        if len(poly) < 3:
            raise ValueError("a closed polygon needs at least 3 points")
        flat = [(_dot(u, pt), _dot(v, pt), _dot(d, pt)) for pt in poly]
        row = []
        for k in range(len(flat)):
            a = flat[k]
            b = flat[(k + 1) % len(flat)]
            s = _Seg(ci, k, (a[0], a[1]), (b[0], b[1]), a[2], b[2])
            dx, dy = s.q[0] - s.p[0], s.q[1] - s.p[1]
            if (dx * dx + dy * dy) <= tol1 * tol1:
                return NonGeneric("stick parallel to projection direction")
            row.append(s)
        comp_segs.append(row)
        segs.extend(row)

    crossings = []  # (over_seg, under_seg, sign)
    nseg = len(segs)
    for i in range(nseg):
        s1 = segs[i]
        r = (s1.q[0] - s1.p[0], s1.q[1] - s1.p[1])
        for j in range(i + 1, nseg):
            s2 = segs[j]
            w = (s2.q[0] - s2.p[0], s2.q[1] - s2.p[1])
            adjacent = False
            if s1.comp == s2.comp:
                m = len(comp_segs[s1.comp])
                adjacent = (s2.idx - s1.idx) % m in (1, m - 1)
            if adjacent:
                if abs(_cross2(r, w)) <= tol2 * 4:
                    return NonGeneric("adjacent sticks overlap in projection")
                continue
            d1 = _cross2(r, (s2.p[0] - s1.p[0], s2.p[1] - s1.p[1]))
            d2 = _cross2(r, (s2.q[0] - s1.p[0], s2.q[1] - s1.p[1]))
            d3 = _cross2(w, (s1.p[0] - s2.p[0], s1.p[1] - s2.p[1]))
            d4 = _cross2(w, (s1.q[0] - s2.p[0], s1.q[1] - s2.p[1]))
            near = [abs(x) <= tol2 for x in (d1, d2, d3, d4)]
            if near[0] and _between(s1.p, s1.q, s2.p, tol1):
                return NonGeneric("vertex projects onto a stick")
            if near[1] and _between(s1.p, s1.q, s2.q, tol1):
                return NonGeneric("vertex projects onto a stick")
            if near[2] and _between(s2.p, s2.q, s1.p, tol1):
                return NonGeneric("vertex projects onto a stick")
            if near[3] and _between(s2.p, s2.q, s1.q, tol1):
                return NonGeneric("vertex projects onto a stick")
            if any(near):
                continue
            if (d1 > 0) == (d2 > 0) or (d3 > 0) == (d4 > 0):
                continue
            t1 = d3 / (d3 - d4)
            t2 = d1 / (d1 - d2)
            h1 = s1.hp + t1 * (s1.hq - s1.hp)
            h2 = s2.hp + t2 * (s2.hq - s2.hp)
            if abs(h1 - h2) <= tol1:
                return NonGeneric("polygons intersect")
            if h1 > h2:
                over, under, to, tu, o, un = s1, s2, t1, t2, r, w
            else:
                over, under, to, tu, o, un = s2, s1, t2, t1, w, r
            sign = 1 if _cross2(o, un) > 0 else -1
            cid = len(crossings)
            crossings.append(sign)
            over.events.append((to, cid, "over"))
            under.events.append((tu, cid, "under"))

    ptol = 0 if exact else 1e-12
    for s in segs:
        s.events.sort()
        for (ta, _, _), (tb, _, _) in zip(s.events, s.events[1:]):
            if abs(tb - ta) <= ptol:
                return NonGeneric("two crossings coincide")

    ends = {}  # (cid, role) -> (in_arc, out_arc)
    label = 1
    free = 0
    for row in comp_segs:
        events = [(cid, role) for s in row for (_, cid, role) in s.events]
        m = len(events)
        if m == 0:
            free += 1
            continue
        for k, ev in enumerate(events):
            ends[ev] = (label + k, label + (k + 1) % m)
        label += m

    out = []
    for cid, sign in enumerate(crossings):
        ui, uo = ends[(cid, "under")]
        oi, oo = ends[(cid, "over")]
        pd = (ui, oo, uo, oi) if sign > 0 else (ui, oi, uo, oo)
        out.append((pd, sign))
    comp_of = {}
    for s in segs:
        for _, cid, role in s.events:
            comp_of[(cid, role)] = s.comp
    xs = tuple(Crossing(pd, sign, comp_of[(cid, "over")], comp_of[(cid, "under")])
               for cid, (pd, sign) in enumerate(out))
    return Diagram(xs, len(polys), free)


def random_direction(rng, exact: bool):
    if exact:
        while True:
            d = tuple(int(x) for x in rng.integers(-(1 << 20), 1 << 20, size=3))
            if d != (0, 0, 0):
                return d
    while True:
        d = rng.normal(size=3)
        n = float(np.linalg.norm(d))
        if n > 1e-6:
            return tuple(float(x) for x in d / n)


def generic_projection(polygons, rng, attempts: int = MAX_ATTEMPTS) -> Diagram:
    """Project along random directions until the projection is generic."""
    exact = not is_float_mode(*(pt for poly in polygons for pt in poly))
    last = None
    for _ in range(attempts):
        res = project(polygons, random_direction(rng, exact))
        if isinstance(res, Diagram):
            return res
        last = res
    raise ProjectionError(f"no generic direction in {attempts} attempts ({last.reason})")
