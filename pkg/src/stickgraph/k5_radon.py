"""The two affine types of five points in general position (Radon partitions)."""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Optional, Sequence, Tuple

from stickgraph.geometry import (
    INSIDE,
    DegenerateInputError,
    Pierce,
    general_position_check,
    orient3d,
    point_in_tetrahedron,
    segment_triangle_pierce,
)
from stickgraph.geometry import Degenerate as _Degenerate


@dataclass(frozen=True)
class RadonPartition:
    """``kind`` is "one_inside_four" (witness = inner index) or "two_three"
    (segment = index pair, triangle = index triple)."""
    kind: str
    inner: Optional[int] = None
    segment: Tuple[int, ...] = ()
    triangle: Tuple[int, ...] = ()

    def to_json(self):
        if self.kind == "one_inside_four":
            return {"kind": self.kind, "witness": {"inner": self.inner}}
        return {"kind": self.kind, "witness": {"segment": list(self.segment), "triangle": list(self.triangle)}}


def _check(points):
    if len(points) != 5:
        raise ValueError("need exactly five points")
    v = general_position_check(points)
    if v is not None:
        raise DegenerateInputError(f"{v.kind} points {v.indices}")


def classify_k5(points: Sequence) -> RadonPartition:
    """Try all 10 segment/triangle splits and all 5 point-in-tetrahedron
    tests; exactly one must succeed."""
    _check(points)
    found = []
    for seg in combinations(range(5), 2):
        tri = tuple(i for i in range(5) if i not in seg)
        r = segment_triangle_pierce((points[seg[0]], points[seg[1]]), [points[i] for i in tri])
        if isinstance(r, _Degenerate):
            raise DegenerateInputError(r.reason)
        if isinstance(r, Pierce):
            found.append(RadonPartition("two_three", segment=seg, triangle=tri))
    for i in range(5):
        rest = [points[j] for j in range(5) if j != i]
        if point_in_tetrahedron(points[i], rest) == INSIDE:
            found.append(RadonPartition("one_inside_four", inner=i))
    if len(found) != 1:
        raise ArithmeticError(f"expected a unique Radon partition, found {len(found)}")
    return found[0]


def face_sign_vector(points: Sequence, probe: int) -> Tuple[int, int, int, int]:
    """Side of the probe point relative to each face of the tetrahedron of
    the other four; +1 is the side holding that face's fourth vertex."""
    _check(points)
    return _face_signs(points, probe)


def face_sign_vectors(points: Sequence) -> Tuple[Tuple[int, int, int, int], ...]:
    """Sign vectors of all five probes (one general-position check)."""
    _check(points)
    return tuple(_face_signs(points, i) for i in range(5))


def _face_signs(points, probe):
    rest = [j for j in range(5) if j != probe]
    out = []
    for k in range(4):
        face = [points[j] for idx, j in enumerate(rest) if idx != k]
        opposite = orient3d(*face, points[rest[k]])
        here = orient3d(*face, points[probe])
        if opposite.degenerate or here.degenerate or here.sign == 0:
            raise DegenerateInputError("probe on a face plane")
        out.append(here.sign * opposite.sign)
    return tuple(out)


def classification_json(points: Sequence) -> dict:
    part = classify_k5(points)
    out = part.to_json()
    out["sign_vectors"] = [list(v) for v in face_sign_vectors(points)]
    return out
