"""Kauffman bracket, normalized Jones polynomial and knot determinant."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, List, Tuple

import numpy as np

from stickgraph.knots.diagram import Diagram
from stickgraph.knots.laurent import DELTA, LaurentPolynomial

CROSSING_BUDGET = 26

ONE = LaurentPolynomial.one()
# t = A^-4; left trefoil V = -t^-4 + t^-3 + t^-1
JONES_TREFOIL_LEFT = LaurentPolynomial({16: -1, 12: 1, 4: 1})
JONES_TREFOIL_RIGHT = JONES_TREFOIL_LEFT.substitute_power(-1)


class CrossingBudgetError(ValueError):
    pass


def _smoothings(pd):
    a, b, c, d = pd
    return ((a, b), (c, d)), ((a, d), (b, c))


def _order_crossings(diagram: Diagram) -> List[int]:
    # greedy order keeping the open boundary small
    remaining = set(range(diagram.n))
    seen: Dict[int, int] = {}
    order = []
    while remaining:
        best = max(remaining, key=lambda i: (sum(x in seen for x in diagram.crossings[i].pd), -i))
        remaining.discard(best)
        order.append(best)
        for x in diagram.crossings[best].pd:
            seen[x] = seen.get(x, 0) + 1
    return order


def kauffman_bracket(diagram: Diagram) -> LaurentPolynomial:
    """Unnormalized Kauffman bracket with ``<O> = 1``.

    Computed as the state sum over all 2^n smoothings, each state weighted by
    ``A^(#A - #B) * delta^(loops - 1)``; the sum is accumulated crossing by
    crossing over partial states keyed by their open-path pairing, which keeps
    the work far below 2^n on diagrams of small width.
    """
    n = diagram.n
    if n > CROSSING_BUDGET:
        raise CrossingBudgetError(f"{n} crossings exceeds the budget of {CROSSING_BUDGET}")
    if n == 0:
        loops = max(diagram.components, 1)
        return DELTA ** (loops - 1)

    # state: frozenset of (end, end) pairs -> {(a_minus_b, loops): coefficient}
    states: Dict[frozenset, Dict[Tuple[int, int], int]] = {frozenset(): {(0, 0): 1}}
    for ci in _order_crossings(diagram):
        pd = diagram.crossings[ci].pd
        nxt: Dict[frozenset, Dict[Tuple[int, int], int]] = {}
        for key, poly in states.items():
            for weight, pairs in zip((1, -1), _smoothings(pd)):
                partner = {}
                for x, y in key:
                    partner[x] = y
                    partner[y] = x
                closed = 0
                for x, y in pairs:
                    if x == y and x not in partner:
                        closed += 1
                        continue
                    if partner.get(x) == y:
                        del partner[x], partner[y]
                        closed += 1
                        continue
                    ex = partner.pop(x, None)
                    if ex is None:
                        ex = x
                    else:
                        del partner[ex]
                    ey = partner.pop(y, None)
                    if ey is None:
                        ey = y
                    else:
                        del partner[ey]
                    partner[ex] = ey
                    partner[ey] = ex
                k = frozenset((x, y) for x, y in partner.items() if x < y)
                bucket = nxt.setdefault(k, {})
                for (ab, lp), coef in poly.items():
                    kk = (ab + weight, lp + closed)
                    bucket[kk] = bucket.get(kk, 0) + coef
        states = nxt
    (key, poly), = states.items()
    if key:
        raise ValueError("PD code does not close up")
    total = LaurentPolynomial()
    powers = {}
    for (ab, loops), coef in poly.items():
        loops += diagram.free_loops
        if loops not in powers:
            powers[loops] = DELTA ** (loops - 1) if loops >= 1 else None
        if powers[loops] is None:
            raise ValueError("state with no loops")
        total = total + powers[loops].shift(ab) * coef
    return total


def kauffman_bracket_bruteforce(diagram: Diagram) -> LaurentPolynomial:
    """Plain 2^n state sum; reference implementation for small diagrams."""
    n = diagram.n
    if n > 16:
        raise CrossingBudgetError("brute-force bracket limited to 16 crossings")
    if n == 0:
        return DELTA ** (max(diagram.components, 1) - 1)
    labels = sorted({x for c in diagram.crossings for x in c.pd})
    total = LaurentPolynomial()
    for state in range(1 << n):
        parent = {x: x for x in labels}

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        ab = 0
        for i, c in enumerate(diagram.crossings):
            use_a = not (state >> i) & 1
            pairs = _smoothings(c.pd)[0 if use_a else 1]
            ab += 1 if use_a else -1
            for x, y in pairs:
                parent[find(x)] = find(y)
        loops = len({find(x) for x in labels}) + diagram.free_loops
        total = total + (DELTA ** (loops - 1)).shift(ab)
    return total


def jones_normalized(diagram: Diagram) -> LaurentPolynomial:
    """``(-A^3)^(-writhe) * <D>``; equals 1 for any unknot diagram."""
    if diagram.components != 1:
        raise ValueError("normalized Jones polynomial here is for knots only")
    w = diagram.writhe
    out = kauffman_bracket(diagram).shift(-3 * w)
    return -out if w % 2 else out


# -- determinant via the Goeritz matrix -------------------------------------

def _faces(diagram: Diagram):
    """Trace faces of the diagram's planar 4-valent map.

    Returns a map from corner (crossing, k) -- the corner between PD
    positions k and k+1 -- to a face index, and the number of faces.
    """
    ends: Dict[int, List[Tuple[int, int]]] = {}
    for ci, c in enumerate(diagram.crossings):
        for k, x in enumerate(c.pd):
            ends.setdefault(x, []).append((ci, k))
    for x, e in ends.items():
        if len(e) != 2:
            raise ValueError(f"arc {x} does not occur exactly twice")

    def other_end(ci, k):
        e0, e1 = ends[diagram.crossings[ci].pd[k]]
        if e0 == (ci, k):
            return e1
        return e0

    corner_face: Dict[Tuple[int, int], int] = {}
    nfaces = 0
    for ci in range(diagram.n):
        for k in range(4):
            if (ci, k) in corner_face:
                continue
            # leave crossing ci along position k, keep the face on one side
            start = (ci, k)
            dart = start
            while True:
                cj, j = other_end(*dart)
                corner = (cj, (j - 1) % 4)
                corner_face[corner] = nfaces
                dart = (cj, (j - 1) % 4)
                if dart == start:
                    break
            nfaces += 1
    return corner_face, nfaces


def goeritz_matrix(diagram: Diagram) -> np.ndarray:
    corner_face, nfaces = _faces(diagram)
    # checkerboard: corners 0,2 share one colour, corners 1,3 the other
    colour = [-1] * nfaces
    adj: Dict[int, List[Tuple[int, bool]]] = {f: [] for f in range(nfaces)}
    for ci in range(diagram.n):
        f = [corner_face[(ci, k)] for k in range(4)]
        for a, b, same in ((f[0], f[2], True), (f[1], f[3], True), (f[0], f[1], False)):
            adj[a].append((b, same))
            adj[b].append((a, same))
    for s in range(nfaces):
        if colour[s] != -1:
            continue
        colour[s] = 0
        stack = [s]
        while stack:
            a = stack.pop()
            for b, same in adj[a]:
                want = colour[a] if same else 1 - colour[a]
                if colour[b] == -1:
                    colour[b] = want
                    stack.append(b)
                elif colour[b] != want:
                    raise ValueError("diagram is not checkerboard colourable")
    shaded = [f for f in range(nfaces) if colour[f] == 0]
    index = {f: i for i, f in enumerate(shaded)}
    g = np.zeros((len(shaded), len(shaded)), dtype=np.int64)
    for ci in range(diagram.n):
        # A-corners (swept by rotating the over-strand counterclockwise) are 1 and 3
        if colour[corner_face[(ci, 1)]] == 0:
            eta, f1, f2 = 1, corner_face[(ci, 1)], corner_face[(ci, 3)]
        else:
            eta, f1, f2 = -1, corner_face[(ci, 0)], corner_face[(ci, 2)]
        if f1 == f2:
            continue
        i, j = index[f1], index[f2]
        g[i, j] -= eta
        g[j, i] -= eta
        g[i, i] += eta
        g[j, j] += eta
    return g


def _int_det(m: np.ndarray) -> int:
    """Exact integer determinant by fraction-free (Bareiss) elimination."""
    a = [[int(x) for x in row] for row in m]
    n = len(a)
    if n == 0:
        return 1
    sign, prev = 1, 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for r in range(k + 1, n):
                if a[r][k] != 0:
                    a[k], a[r] = a[r], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def knot_determinant(diagram: Diagram) -> int:
    """|det| of the Goeritz matrix with one row and column deleted."""
    if diagram.n == 0:
        return 1
    g = goeritz_matrix(diagram)
    if g.shape[0] <= 1:
        return 1
    return abs(_int_det(g[1:, 1:]))


# -- knot classes -----------------------------------------------------------

@dataclass(frozen=True)
class KnotClass:
    name: str  # "unknot" | "trefoil_left" | "trefoil_right" | "other"
    jones: LaurentPolynomial | None = None

    @property
    def is_unknot(self) -> bool:
        return self.name == "unknot"

    def mirror(self) -> "KnotClass":
        swap = {"trefoil_left": "trefoil_right", "trefoil_right": "trefoil_left"}
        j = self.jones.substitute_power(-1) if self.jones is not None else None
        return KnotClass(swap.get(self.name, self.name), j)

    def to_json(self):
        out = {"class": self.name}
        if self.jones is not None:
            out["jones"] = self.jones.to_json()
        return out

    def __str__(self):
        if self.name == "other":
            return f"other(jones={self.jones})"
        return self.name


UNKNOT = KnotClass("unknot", ONE)


def knot_class_from_jones(jones: LaurentPolynomial) -> KnotClass:
    if jones == ONE:
        return KnotClass("unknot", jones)
    if jones == JONES_TREFOIL_LEFT:
        return KnotClass("trefoil_left", jones)
    if jones == JONES_TREFOIL_RIGHT:
        return KnotClass("trefoil_right", jones)
    return KnotClass("other", jones)
