"""Stick (piecewise-linear) embeddings of small abstract graphs."""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Dict, Hashable, Iterable, List, Sequence, Tuple

import numpy as np

from stickgraph.geometry import (
    EPS,
    Degenerate,
    bend_triangle_contact,
    cross,
    dot,
    segments_intersect,
    sub,
)

Label = Hashable


# -- abstract graphs --------------------------------------------------------

@dataclass(frozen=True)
class AbstractGraph:
    vertices: Tuple[Label, ...]
    edges: Tuple[Tuple[Label, Label], ...]

    def __post_init__(self):
        vs = set(self.vertices)
        if len(vs) != len(self.vertices):
            raise ValueError("repeated vertex label")
        seen = set()
        for u, v in self.edges:
            if u == v:
                raise ValueError(f"self-loop at {u!r}")
            if u not in vs or v not in vs:
                raise ValueError(f"edge {(u, v)!r} references an unknown vertex")
            key = frozenset((u, v))
            if key in seen:
                raise ValueError(f"repeated edge {(u, v)!r}")
            seen.add(key)

    def neighbours(self) -> Dict[Label, List[Tuple[Label, int]]]:
        out: Dict[Label, List[Tuple[Label, int]]] = {v: [] for v in self.vertices}
        for i, (u, v) in enumerate(self.edges):
            out[u].append((v, i))
            out[v].append((u, i))
        return out


def complete_graph(n: int, labels: Sequence[Label] | None = None) -> AbstractGraph:
    labels = tuple(labels) if labels is not None else tuple(f"v{i + 1}" for i in range(n))
    return AbstractGraph(labels, tuple(combinations(labels, 2)))


def complete_bipartite(a: Sequence[Label], b: Sequence[Label]) -> AbstractGraph:
    return AbstractGraph(tuple(a) + tuple(b), tuple((x, y) for x in a for y in b))


@dataclass(frozen=True)
class Cycle:
    vertices: Tuple[Label, ...]
    edges: Tuple[int, ...]

    def __len__(self):
        return len(self.edges)


def enumerate_cycles(g: AbstractGraph) -> List[Cycle]:
    """Every simple cycle once, up to rotation and reflection.

    Depth-first path extension from each start vertex through larger-indexed
    vertices only; a cycle is kept when its second vertex precedes its last.
    """
    order = {v: i for i, v in enumerate(g.vertices)}
    nbrs = g.neighbours()
    found: List[Cycle] = []
    for s in g.vertices:
        stack = [(s, (s,), ())]
        while stack:
            v, path, edges = stack.pop()
            for w, e in sorted(nbrs[v], key=lambda t: order[t[0]], reverse=True):
                if w == s and len(path) >= 3:
                    if order[path[1]] < order[path[-1]]:
                        found.append(Cycle(path, edges + (e,)))
                elif order[w] > order[s] and w not in path:
                    stack.append((w, path + (w,), edges + (e,)))
    found.sort(key=lambda c: (len(c), [order[v] for v in c.vertices]))
    return found


# -- embeddings -------------------------------------------------------------

@dataclass(frozen=True)
class Stick:
    edge: int
    index: int
    p: Label
    q: Label


class PLEmbedding:
    """A graph together with a polyline route for every edge.

    ``positions`` maps every label (graph vertices and bends) to a point;
    each route is a label sequence whose first and last entries are graph
    vertices and whose interior entries are bends used by that route only.
    """

    def __init__(self, positions: Dict[Label, Sequence], routes: Iterable[Sequence[Label]],
                 name: str | None = None, vertices: Sequence[Label] | None = None):
        self.name = name
        self.routes: Tuple[Tuple[Label, ...], ...] = tuple(tuple(r) for r in routes)
        self.positions: Dict[Label, tuple] = {k: tuple(v) for k, v in positions.items()}
        for r in self.routes:
            if len(r) < 2:
                raise ValueError("a route needs at least two labels")
            for lab in r:
                if lab not in self.positions:
                    raise ValueError(f"route references unknown label {lab!r}")
        ends = []
        for r in self.routes:
            for lab in (r[0], r[-1]):
                if lab not in ends:
                    ends.append(lab)
        if vertices is None:
            vertices = [k for k in self.positions if k in ends]
        self.graph = AbstractGraph(tuple(vertices), tuple((r[0], r[-1]) for r in self.routes))
        vset = set(self.graph.vertices)
        bends = [lab for r in self.routes for lab in r[1:-1]]
        if len(set(bends)) != len(bends):
            raise ValueError("a bend label is used twice")
        if vset & set(bends):
            raise ValueError("a label is both a graph vertex and a bend")
        unused = set(self.positions) - vset - set(bends)
        if unused:
            raise ValueError(f"unused labels {sorted(map(str, unused))}")
        kinds = {isinstance(c, float) for p in self.positions.values() for c in p}
        if len(kinds) > 1:
            raise ValueError("an embedding may not mix exact and float coordinates")
        for p in self.positions.values():
            if len(p) != 3:
                raise ValueError("points must have three coordinates")
            if any(isinstance(c, float) and not np.isfinite(c) for c in p):
                raise ValueError("coordinates must be finite")

    # -- basic views --
    @property
    def mode(self) -> str:
        return "float" if any(isinstance(c, float) for p in self.positions.values() for c in p) else "exact"

    @property
    def stick_count(self) -> int:
        return sum(len(r) - 1 for r in self.routes)

    def point(self, label):
        return self.positions[label]

    def sticks(self) -> List[Stick]:
        return [Stick(e, k, r[k], r[k + 1]) for e, r in enumerate(self.routes) for k in range(len(r) - 1)]

    def bends(self) -> List[Label]:
        """Bend labels in (route, position) order."""
        return [lab for r in self.routes for lab in r[1:-1]]

    def segment(self, s: Stick):
        return self.positions[s.p], self.positions[s.q]

    def __eq__(self, other):
        return (isinstance(other, PLEmbedding) and self.routes == other.routes
                and self.positions == other.positions
                and self.graph.vertices == other.graph.vertices)

    def __repr__(self):
        return (f"PLEmbedding(name={self.name!r}, vertices={len(self.graph.vertices)}, "
                f"edges={len(self.routes)}, sticks={self.stick_count}, mode={self.mode})")

    # -- edits (all return new embeddings) --
    def _rebuild(self, routes, name=None, vertices=None):
        labels = {lab for r in routes for lab in r}
        if vertices is not None:
            labels |= set(vertices)
        pos = {k: v for k, v in self.positions.items() if k in labels}
        return PLEmbedding(pos, routes, name=name if name is not None else self.name, vertices=vertices)

    def edge_index(self, u, v) -> int:
        for i, r in enumerate(self.routes):
            if {r[0], r[-1]} == {u, v}:
                return i
        raise KeyError(f"no edge between {u!r} and {v!r}")

    def delete_edge(self, u, v, name=None) -> "PLEmbedding":
        i = self.edge_index(u, v)
        routes = self.routes[:i] + self.routes[i + 1:]
        return self._rebuild(routes, name, vertices=self.graph.vertices)

    def delete_vertex(self, v, name=None) -> "PLEmbedding":
        routes = tuple(r for r in self.routes if v not in (r[0], r[-1]))
        verts = tuple(x for x in self.graph.vertices if x != v)
        return self._rebuild(routes, name, vertices=verts)

    def without_bend(self, bend) -> "PLEmbedding":
        routes = tuple(tuple(lab for lab in r if lab != bend) for r in self.routes)
        return self._rebuild(routes, vertices=self.graph.vertices)

    def relabel(self, mapping: Dict[Label, Label], name=None) -> "PLEmbedding":
        pos = {mapping.get(k, k): v for k, v in self.positions.items()}
        routes = [tuple(mapping.get(x, x) for x in r) for r in self.routes]
        verts = [mapping.get(x, x) for x in self.graph.vertices]
        return PLEmbedding(pos, routes, name=name or self.name, vertices=verts)

    def map_points(self, f, name=None) -> "PLEmbedding":
        pos = {k: tuple(f(v)) for k, v in self.positions.items()}
        return PLEmbedding(pos, self.routes, name=name or self.name, vertices=self.graph.vertices)


# -- validation -------------------------------------------------------------

@dataclass(frozen=True)
class Valid:
    pass


@dataclass(frozen=True)
class SelfIntersection:
    sticks: Tuple[Stick, Stick]


VALID = Valid()


def _near_zero_vec(v, scale_) -> bool:
    return float(dot(v, v)) <= (EPS * scale_) ** 2


def _segment_distance(p1, q1, p2, q2) -> float:
    p1, q1, p2, q2 = (np.asarray(x, float) for x in (p1, q1, p2, q2))
    best = np.inf
    # sample the analytic minimum over the parameter square via clamped projections
    d1, d2, r = q1 - p1, q2 - p2, p1 - p2
    a, e = d1 @ d1, d2 @ d2
    b, c, f = d1 @ d2, d1 @ r, d2 @ r
    denom = a * e - b * b
    cands = []
    if denom > 0:
        s = np.clip((b * f - c * e) / denom, 0, 1)
        t = np.clip((b * s + f) / e, 0, 1)
        s = np.clip((b * t - c) / a, 0, 1)
        cands.append((s, t))
    for s in (0.0, 1.0):
        cands.append((s, np.clip((b * s + f) / e, 0, 1)))
    for t in (0.0, 1.0):
        cands.append((np.clip((b * t - c) / a, 0, 1), t))
    for s, t in cands:
        best = min(best, float(np.linalg.norm(p1 + s * d1 - p2 - t * d2)))
    return best


def validate(e: PLEmbedding):
    """``VALID``, ``SelfIntersection(sticks)`` or ``Degenerate(reason)``."""
    pts = e.positions
    fl = e.mode == "float"
    scale_ = max((abs(float(c)) for p in pts.values() for c in p), default=1.0) or 1.0
    sticks = e.sticks()
    for s in sticks:
        d = sub(pts[s.q], pts[s.p])
        if d == (0, 0, 0) or (fl and _near_zero_vec(d, scale_)):
            return Degenerate(f"zero-length stick {s}")
    for r in e.routes:
        for k in range(1, len(r) - 1):
            n = cross(sub(pts[r[k]], pts[r[k - 1]]), sub(pts[r[k + 1]], pts[r[k]]))
            if n == (0, 0, 0) or (fl and _near_zero_vec(n, scale_ * scale_)):
                return Degenerate(f"bend {r[k]!r} is not a genuine bend")
    for s1, s2 in combinations(sticks, 2):
        shared = {s1.p, s1.q} & {s2.p, s2.q}
        a1, b1 = pts[s1.p], pts[s1.q]
        a2, b2 = pts[s2.p], pts[s2.q]
        if len(shared) == 2:
            return SelfIntersection((s1, s2))
        if shared:
            x = shared.pop()
            o1 = b1 if s1.p == x else a1
            o2 = b2 if s2.p == x else a2
            u, w = sub(o1, pts[x]), sub(o2, pts[x])
            if cross(u, w) == (0, 0, 0) and dot(u, w) > 0:
                return SelfIntersection((s1, s2))
            continue
        if segments_intersect(a1, b1, a2, b2):
            return SelfIntersection((s1, s2))
        if fl and _segment_distance(a1, b1, a2, b2) < EPS * scale_:
            return Degenerate(f"sticks {s1} and {s2} within epsilon")
    return VALID


# -- cycles -----------------------------------------------------------------

def realize_cycle(e: PLEmbedding, c: Cycle) -> List[tuple]:
    """Closed polygon of a cycle: routes concatenated in cycle order, bends kept."""
    pts: List[tuple] = []
    n = len(c.vertices)
    for k, ei in enumerate(c.edges):
        u = c.vertices[k]
        v = c.vertices[(k + 1) % n]
        r = e.routes[ei]
        if (r[0], r[-1]) == (u, v):
            labels = r
        elif (r[-1], r[0]) == (u, v):
            labels = tuple(reversed(r))
        else:
            raise ValueError(f"edge {ei} does not join {u!r} and {v!r}")
        pts.extend(e.positions[lab] for lab in labels[:-1])
    return pts


def cycle_from_vertices(e: PLEmbedding, vertices: Sequence[Label]) -> Cycle:
    edges = []
    for k in range(len(vertices)):
        edges.append(e.edge_index(vertices[k], vertices[(k + 1) % len(vertices)]))
    return Cycle(tuple(vertices), tuple(edges))


# -- reducible triangles ----------------------------------------------------

@dataclass(frozen=True)
class Reducible:
    pass


@dataclass(frozen=True)
class Irreducible:
    sticks: Tuple[Stick, ...]


REDUCIBLE = Reducible()


def _locate_bend(e: PLEmbedding, bend):
    for ei, r in enumerate(e.routes):
        for k in range(1, len(r) - 1):
            if r[k] == bend:
                return ei, k
    raise KeyError(f"{bend!r} is not a bend of this embedding")


def degree2_triangle(e: PLEmbedding, bend):
    """The triangle spanned by a bend and its two route neighbours."""
    ei, k = _locate_bend(e, bend)
    r = e.routes[ei]
    return e.positions[r[k - 1]], e.positions[r[k]], e.positions[r[k + 1]]


def is_reducible_triangle(e: PLEmbedding, bend):
    """``REDUCIBLE``, ``Irreducible(sticks)`` or ``Degenerate(reason)``.

    Any contact with the closed triangle off its two defining sticks blocks
    straightening, including contact with the spanning side.
    """
    ei, k = _locate_bend(e, bend)
    a, b, c = degree2_triangle(e, bend)
    blockers = []
    for s in e.sticks():
        if s.edge == ei and s.index in (k - 1, k):
            continue
        hit = bend_triangle_contact(e.segment(s), a, b, c)
        if hit is None:
            return Degenerate(f"contact of {s} with triangle at {bend!r} within epsilon")
        if hit:
            blockers.append(s)
    return Irreducible(tuple(blockers)) if blockers else REDUCIBLE


class ReductionDegenerate(ValueError):
    def __init__(self, message, partial, log):
        super().__init__(message)
        self.partial = partial
        self.log = log


@dataclass(frozen=True)
class ReductionStep:
    bend: Label
    triangle: tuple


def reduce_with_log(e: PLEmbedding):
    """Straighten reducible bends to a fixpoint; returns (embedding, log).

    Bends are scanned in (route, position) order and the scan restarts after
    every straightening.
    """
    cur = e
    log: List[ReductionStep] = []
    while True:
        for bend in cur.bends():
            res = is_reducible_triangle(cur, bend)
            if isinstance(res, Degenerate):
                raise ReductionDegenerate(res.reason, cur, log)
            if res is REDUCIBLE:
                log.append(ReductionStep(bend, degree2_triangle(cur, bend)))
                cur = cur.without_bend(bend)
                cur = _drop_straight_bends(cur, log)
                break
        else:
            return cur, log


def _drop_straight_bends(e: PLEmbedding, log) -> PLEmbedding:
    # straightening can leave a neighbouring bend collinear; such a bend is no bend
    changed = True
    while changed:
        changed = False
        for bend in e.bends():
            a, b, c = degree2_triangle(e, bend)
            if cross(sub(b, a), sub(c, b)) == (0, 0, 0):
                log.append(ReductionStep(bend, (a, b, c)))
                e = e.without_bend(bend)
                changed = True
                break
    return e


def reduce(e: PLEmbedding) -> PLEmbedding:
    return reduce_with_log(e)[0]


def as_fraction_point(p) -> Tuple[Fraction, Fraction, Fraction]:
    return tuple(Fraction(x) for x in p)
