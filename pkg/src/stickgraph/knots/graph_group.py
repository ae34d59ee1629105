"""Wirtinger presentation of a spatial graph diagram and finite-group
representation counts of the complement's fundamental group.

The number of homomorphisms from the complement group into a finite group
``G`` is an isotopy invariant. A trivially embedded graph has a free
complement group of rank ``b1`` (the graph's cycle rank), giving exactly
``|G| ** b1`` homomorphisms; any other count certifies a non-trivial
embedding even when every cycle is unknotted.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations
from typing import Dict, List, Sequence, Tuple

from stickgraph.knots.diagram import NonGeneric, ProjectionError, _basis, _cross2, _dot, random_direction


@dataclass(frozen=True)
class Presentation:
    """Generators are arcs ``0..n-1``.

    ``crossings`` holds ``(over, under_in, under_out, sign)`` meaning
    ``x_out = c x_in c^-1`` with ``c = x_over ** sign``; each vertex relation
    is a cyclic word of ``(arc, exponent)`` pairs whose product is trivial.
    """
    n: int
    crossings: Tuple[Tuple[int, int, int, int], ...]
    vertices: Tuple[Tuple[Tuple[int, int], ...], ...]


def wirtinger(e, direction) -> Presentation | NonGeneric:
    """Presentation read off the projection of embedding ``e`` along ``direction``.

    Every edge is oriented along its route; vertex words list incident arcs
    clockwise as seen by the viewer, outgoing arcs with exponent +1. (With
    this crossing convention the counterclockwise word gives counts that
    change with the projection direction.)
    """
    pos = {k: tuple(Fraction(c) for c in p) for k, p in e.positions.items()}
    d, u, v = _basis(direction, True)
    flat = {k: (_dot(u, p), _dot(v, p), _dot(d, p)) for k, p in pos.items()}
    sticks = []  # (edge, index, p2, q2, hp, hq, labels)
    for ei, r in enumerate(e.routes):
        for k in range(len(r) - 1):
            a, b = flat[r[k]], flat[r[k + 1]]
            if (a[0], a[1]) == (b[0], b[1]):
                return NonGeneric("stick parallel to projection direction")
            sticks.append((ei, k, a[:2], b[:2], a[2], b[2], (r[k], r[k + 1])))
    events: Dict[Tuple[int, int], list] = {}
    cross = []
    for i in range(len(sticks)):
        e1, k1, p1, q1, hp1, hq1, l1 = sticks[i]
        r1 = (q1[0] - p1[0], q1[1] - p1[1])
        for j in range(i + 1, len(sticks)):
            e2, k2, p2, q2, hp2, hq2, l2 = sticks[j]
            r2 = (q2[0] - p2[0], q2[1] - p2[1])
            shared = set(l1) & set(l2)
            if shared:
                x = next(iter(shared))
                o = flat[x][:2]
                a = p1 if l1[1] == x else q1
                b = p2 if l2[1] == x else q2
                w1 = (a[0] - o[0], a[1] - o[1])
                w2 = (b[0] - o[0], b[1] - o[1])
                # opposite directions are fine; a common ray is not
                if _cross2(w1, w2) == 0 and w1[0] * w2[0] + w1[1] * w2[1] > 0:
                    return NonGeneric("adjacent sticks overlap in projection")
                continue
            d1 = _cross2(r1, (p2[0] - p1[0], p2[1] - p1[1]))
            d2 = _cross2(r1, (q2[0] - p1[0], q2[1] - p1[1]))
            d3 = _cross2(r2, (p1[0] - p2[0], p1[1] - p2[1]))
            d4 = _cross2(r2, (q1[0] - p2[0], q1[1] - p2[1]))
            if 0 in (d1, d2, d3, d4):
                if (d1 == 0 and _inside(p1, q1, p2)) or (d2 == 0 and _inside(p1, q1, q2)) \
                        or (d3 == 0 and _inside(p2, q2, p1)) or (d4 == 0 and _inside(p2, q2, q1)):
                    return NonGeneric("vertex projects onto a stick")
                continue
            if (d1 > 0) == (d2 > 0) or (d3 > 0) == (d4 > 0):
                continue
            t1 = d3 / (d3 - d4)
            t2 = d1 / (d1 - d2)
            h1 = hp1 + t1 * (hq1 - hp1)
            h2 = hp2 + t2 * (hq2 - hp2)
            if h1 == h2:
                return NonGeneric("sticks intersect")
            if h1 > h2:
                over, under, to, tu, ro, ru = (e1, k1), (e2, k2), t1, t2, r1, r2
            else:
                over, under, to, tu, ro, ru = (e2, k2), (e1, k1), t2, t1, r2, r1
            cid = len(cross)
            cross.append(1 if _cross2(ro, ru) > 0 else -1)
            events.setdefault(over, []).append((to, cid, "over"))
            events.setdefault(under, []).append((tu, cid, "under"))

    # arcs: each edge is cut at its undercrossings
    arc_of_over: Dict[int, int] = {}
    under_arcs: Dict[int, Tuple[int, int]] = {}
    first_arc, last_arc = [], []
    n = 0
    for ei, r in enumerate(e.routes):
        first_arc.append(n)
        for k in range(len(r) - 1):
            evs = sorted(events.get((ei, k), []))
            for (ta, _, _), (tb, _, _) in zip(evs, evs[1:]):
                if ta == tb:
                    return NonGeneric("two crossings coincide")
            for _, cid, role in evs:
                if role == "over":
                    arc_of_over[cid] = n
                else:
                    under_arcs[cid] = (n, n + 1)
                    n += 1
        last_arc.append(n)
        n += 1
    rels = tuple((arc_of_over[c], under_arcs[c][0], under_arcs[c][1], cross[c]) for c in range(len(cross)))

    words = []
    for vtx in e.graph.vertices:
        inc = []
        for ei, r in enumerate(e.routes):
            if r[0] == vtx:
                nb, arc, ex = r[1], first_arc[ei], 1
            elif r[-1] == vtx:
                nb, arc, ex = r[-2], last_arc[ei], -1
            else:
                continue
            a, b = flat[vtx], flat[nb]
            inc.append((math.atan2(float(b[1] - a[1]), float(b[0] - a[0])), arc, ex))
        inc.sort(reverse=True)
        words.append(tuple((arc, ex) for _, arc, ex in inc))
    return Presentation(n, rels, tuple(words))


def _inside(a, b, p) -> bool:
    return min(a[0], b[0]) <= p[0] <= max(a[0], b[0]) and min(a[1], b[1]) <= p[1] <= max(a[1], b[1])


# -- finite groups ------------------------------------------------------------

@dataclass(frozen=True)
class FiniteGroup:
    name: str
    mul: Tuple[Tuple[int, ...], ...]
    inv: Tuple[int, ...]

    @property
    def order(self) -> int:
        return len(self.inv)


def permutation_group(degree: int, even_only: bool = False) -> FiniteGroup:
    def parity(p):
        s = 0
        for i in range(len(p)):
            for j in range(i + 1, len(p)):
                s += p[i] > p[j]
        return s % 2

    elems = [p for p in permutations(range(degree)) if not (even_only and parity(p))]
    index = {p: i for i, p in enumerate(elems)}
    mul = tuple(tuple(index[tuple(a[b[x]] for x in range(degree))] for b in elems) for a in elems)
    ident = index[tuple(range(degree))]
    inv = tuple(next(j for j in range(len(elems)) if mul[i][j] == ident) for i in range(len(elems)))
    name = ("A" if even_only else "S") + str(degree)
    return FiniteGroup(name, mul, inv)


def count_homomorphisms(pres: Presentation, group: FiniteGroup) -> int:
    """Number of assignments of group elements to arcs satisfying every
    relation, by depth-first search with relation propagation."""
    mul, inv = group.mul, group.inv
    touching: List[List[Tuple[str, int]]] = [[] for _ in range(pres.n)]
    for ri, (o, a, b, _) in enumerate(pres.crossings):
        for x in {o, a, b}:
            touching[x].append(("x", ri))
    for wi, word in enumerate(pres.vertices):
        for x in {arc for arc, _ in word}:
            touching[x].append(("v", wi))

    def conj(c, g):
        return mul[mul[c][g]][inv[c]]

    def propagate(val, queue):
        # returns False on contradiction; fills forced values in place
        while queue:
            kind, ri = queue.pop()
            if kind == "x":
                o, a, b, s = pres.crossings[ri]
                if val[o] is None:
                    continue
                c = val[o] if s > 0 else inv[val[o]]
                if val[a] is not None:
                    want = conj(c, val[a])
                    if val[b] is None:
                        val[b] = want
                        queue.extend(touching[b])
                    elif val[b] != want:
                        return False
                elif val[b] is not None:
                    val[a] = conj(inv[c], val[b])
                    queue.extend(touching[a])
            else:
                word = pres.vertices[ri]
                missing = [k for k, (arc, _) in enumerate(word) if val[arc] is None]
                if len(missing) > 1:
                    continue
                if not missing:
                    g = _word_value(word, val, mul, inv)
                    if g != _identity(group):
                        return False
                    continue
                k = missing[0]
                arc, ex = word[k]
                if sum(1 for a2, _ in word if a2 == arc) > 1:
                    continue
                # rotate so the unknown comes last: prefix * x^ex = 1
                rot = word[k + 1:] + word[:k]
                pre = _word_value(rot, val, mul, inv)
                x = inv[pre] if ex > 0 else pre
                val[arc] = x
                queue.extend(touching[arc])
        return True

    order = group.order

    branch_order = _branch_order(pres)

    def search(val):
        x = next((y for y in branch_order if val[y] is None), None)
        if x is None:
            return 1 if _all_hold(pres, val, group) else 0
        total = 0
        for g in range(order):
            nv = list(val)
            nv[x] = g
            if propagate(nv, list(touching[x])):
                total += search(nv)
        return total

    return search([None] * pres.n)


def _branch_order(pres: Presentation) -> List[int]:
    # greedy: branch on the arc whose value forces the most others
    def closure(known):
        known = set(known)
        changed = True
        while changed:
            changed = False
            for o, a, b, _ in pres.crossings:
                if o in known and (a in known) != (b in known):
                    known |= {a, b}
                    changed = True
            for w in pres.vertices:
                arcs = {arc for arc, _ in w}
                if len(arcs - known) == 1:
                    known |= arcs
                    changed = True
        return known

    order: List[int] = []
    known: set = set()
    while len(known) < pres.n:
        best = max((x for x in range(pres.n) if x not in known),
                   key=lambda x: (len(closure(known | {x})), -x))
        order.append(best)
        known = closure(known | {best})
    return order


def _identity(group: FiniteGroup) -> int:
    return next(i for i in range(group.order) if group.mul[i][i] == i)


def _word_value(word, val, mul, inv):
    acc = None
    for arc, ex in word:
        g = val[arc] if ex > 0 else inv[val[arc]]
        acc = g if acc is None else mul[acc][g]
    return acc


def _all_hold(pres: Presentation, val, group: FiniteGroup) -> bool:
    mul, inv = group.mul, group.inv
    for o, a, b, s in pres.crossings:
        c = val[o] if s > 0 else inv[val[o]]
        if mul[mul[c][val[a]]][inv[c]] != val[b]:
            return False
    ident = _identity(group)
    return all(_word_value(w, val, mul, inv) == ident for w in pres.vertices)


def representation_count(e, group: FiniteGroup, rng, attempts: int = 64) -> int:
    for _ in range(attempts):
        pres = wirtinger(e, random_direction(rng, True))
        if isinstance(pres, Presentation):
            return count_homomorphisms(pres, group)
    raise ProjectionError("no generic direction found")


def cycle_rank(e) -> int:
    g = e.graph
    parent = {v: v for v in g.vertices}

    def find(x):
        while parent[x] != x:
            x = parent[x]
        return x

    comps = len(g.vertices)
    for a, b in g.edges:
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[ra] = rb
            comps -= 1
    return len(g.edges) - len(g.vertices) + comps
