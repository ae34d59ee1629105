"""Linking numbers and the linear K6 / K3,3 classifiers."""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, permutations
from typing import List, Sequence, Tuple

from stickgraph.geometry import (
    Degenerate,
    Pierce,
    general_position_check,
    segment_triangle_pierce,
)
from stickgraph.knots.diagram import generic_projection
from stickgraph.knots.polygons import hexagon_is_knotted


class DegenerateSampleError(ValueError):
    """The point set is not in general position (or too close to call in
    float mode); callers resample."""


def linking_number(a: Sequence, b: Sequence, rng) -> int:
    """Half the signed count of crossings between ``a`` and ``b``."""
    d = generic_projection([list(a), list(b)], rng)
    total = sum(c.sign for c in d.crossings if c.over_component != c.under_component)
    if total % 2:
        raise ArithmeticError("odd inter-component crossing sum")
    return total // 2


def triangle_linking_fast(a: Sequence, b: Sequence) -> int:
    """Linking number of two disjoint triangles from piercings alone.

    The flat triangle ``b`` is a spanning disk for its boundary, so the
    linking number is the signed number of edges of ``a`` that pierce it.
    """
    total = 0
    for i in range(3):
        r = segment_triangle_pierce((a[i], a[(i + 1) % 3]), b)
        if isinstance(r, Degenerate):
            raise DegenerateSampleError(r.reason)
        if isinstance(r, Pierce):
            total += r.sign
    return total


# 10 splits of {0..5} into two triangles, first part always holds 0
K6_PARTITIONS: Tuple[Tuple[Tuple[int, int, int], Tuple[int, int, int]], ...] = tuple(
    ((0, i, j), tuple(sorted(set(range(6)) - {0, i, j})))
    for i, j in combinations(range(1, 6), 2)
)


def _canonical_cycle(seq):
    n = len(seq)
    best = None
    for k in range(n):
        r = tuple(seq[k:] + seq[:k])
        for cand in (r, (r[0],) + tuple(reversed(r[1:]))):
            if best is None or cand < best:
                best = cand
    return best


K6_HEXAGONS: Tuple[Tuple[int, ...], ...] = tuple(sorted({
    _canonical_cycle([0] + list(p)) for p in permutations(range(1, 6))
}))

# hexagons of K3,3 with parts {0,1,2} | {3,4,5}
K33_HEXAGONS: Tuple[Tuple[int, ...], ...] = tuple(
    h for h in K6_HEXAGONS
    if all((h[k] < 3) != (h[(k + 1) % 6] < 3) for k in range(6))
)


@dataclass(frozen=True)
class HopfCensus:
    linked_pairs: Tuple[Tuple[Tuple[int, int, int], Tuple[int, int, int], int], ...]

    @property
    def count(self) -> int:
        return sum(1 for _, _, lk in self.linked_pairs if abs(lk) == 1)

    def to_json(self):
        return {"count": self.count,
                "pairs": [{"a": list(a), "b": list(b), "lk": lk} for a, b, lk in self.linked_pairs]}


def _require_general_position(points):
    v = general_position_check(points)
    if v is not None:
        raise DegenerateSampleError(f"{v.kind} points {v.indices}")


def hopf_census_k6(points: Sequence) -> HopfCensus:
    if len(points) != 6:
        raise ValueError("a K6 census needs exactly six points")
    _require_general_position(points)
    pairs = []
    for ta, tb in K6_PARTITIONS:
        lk = triangle_linking_fast([points[i] for i in ta], [points[i] for i in tb])
        pairs.append((ta, tb, lk))
    return HopfCensus(tuple(pairs))


def knotted_hexagons(points: Sequence, rng, hexagons=K6_HEXAGONS) -> List[Tuple[int, ...]]:
    """All hexagons (as vertex index cycles) whose realization is knotted."""
    return [h for h in hexagons if hexagon_is_knotted([points[i] for i in h], rng)]


def k6_contains_trefoil(points: Sequence, rng=None, find_witness: bool = True):
    """``None`` when the linear K6 is knotless, otherwise the knotted hexagon.

    The decision uses the Hopf census (three linked triangle pairs); with
    ``find_witness`` the hexagon is located among all 60 by its determinant.
    Returns ``True`` in place of the hexagon when no witness is requested.
    """
    census = hopf_census_k6(points)
    if census.count != 3:
        return None
    if not find_witness:
        return True
    if rng is None:
        raise ValueError("witness search needs a random generator for projections")
    found = knotted_hexagons(points, rng)
    if len(found) != 1:
        raise ArithmeticError(f"expected exactly one knotted hexagon, found {len(found)}")
    return found[0]


@dataclass(frozen=True)
class K33Classification:
    kind: str  # "mobius" | "knotted"
    knotted: Tuple[Tuple[int, ...], ...] = ()

    def to_json(self):
        return {"kind": self.kind, "knotted_hexagons": [list(h) for h in self.knotted]}


def classify_linear_k33(points: Sequence, rng) -> K33Classification:
    """Möbius form versus knotted for a linear K3,3 on parts
    ``points[:3] | points[3:]``.

    Quadrilaterals have fewer than six sticks, so only the six hexagons are
    tested.
    """
    if len(points) != 6:
        raise ValueError("a K3,3 needs exactly six points")
    _require_general_position(points)
    found = tuple(knotted_hexagons(points, rng, K33_HEXAGONS))
    return K33Classification("knotted" if found else "mobius", found)
