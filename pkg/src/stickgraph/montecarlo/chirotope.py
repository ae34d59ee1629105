"""Batched orientation signs of six-point samples.

For six points in general position every question the estimators ask
(piercings, triangle linking numbers, reducible hexagon corners) is a
Boolean function of the 15 orientation signs of the 4-point subsets. This
module evaluates those signs for whole blocks of samples at once with the
same degeneracy threshold as the scalar predicates.
"""
from __future__ import annotations

from itertools import combinations
from typing import Sequence, Tuple

import numpy as np

from stickgraph.geometry import EPS
from stickgraph.knots.linking import K6_PARTITIONS

QUADS: Tuple[Tuple[int, int, int, int], ...] = tuple(combinations(range(6), 4))
_QIDX = {q: i for i, q in enumerate(QUADS)}


def _perm_parity(t) -> int:
    s = 1
    for i in range(len(t)):
        for j in range(i + 1, len(t)):
            if t[i] > t[j]:
                s = -s
    return s


def orientation_signs(points: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
    """Signs of orient3d over the 15 sorted quadruples.

    ``points`` has shape (n, 6, 3). Returns ``(chi, degenerate)`` where
    ``chi`` is int8 of shape (n, 15) and ``degenerate`` flags samples with a
    determinant inside ``EPS * M**3`` (M = largest coordinate difference of
    the four points involved).
    """
    n = points.shape[0]
    chi = np.empty((n, len(QUADS)), dtype=np.int8)
    degenerate = np.zeros(n, dtype=bool)
    for k, (i, j, l, m) in enumerate(QUADS):
        p = points[:, i]
        u = points[:, j] - p
        v = points[:, l] - p
        w = points[:, m] - p
        det = (u[:, 0] * (v[:, 1] * w[:, 2] - v[:, 2] * w[:, 1])
               - u[:, 1] * (v[:, 0] * w[:, 2] - v[:, 2] * w[:, 0])
               + u[:, 2] * (v[:, 0] * w[:, 1] - v[:, 1] * w[:, 0]))
        quad = points[:, [i, j, l, m]]
        mag = np.max(np.abs(quad[:, 1:] - quad[:, :1]), axis=(1, 2))
        degenerate |= (np.abs(det) < EPS * mag ** 3) | (mag == 0.0)
        chi[:, k] = np.sign(det).astype(np.int8)
    return chi, degenerate


def orient(chi: np.ndarray, t: Sequence[int]) -> np.ndarray:
    """Orientation sign of an arbitrary ordered quadruple of distinct indices."""
    key = tuple(sorted(t))
    return (_perm_parity(t) * chi[:, _QIDX[key]]).astype(np.int8)


def pierce(chi: np.ndarray, p: int, q: int, a: int, b: int, c: int) -> np.ndarray:
    """Signed piercing of segment pq through triangle abc (0 when none).

    The sign is that of orient(a, b, c, q), as in the scalar predicate.
    """
    op = orient(chi, (a, b, c, p))
    oq = orient(chi, (a, b, c, q))
    s1 = orient(chi, (p, q, a, b))
    s2 = orient(chi, (p, q, b, c))
    s3 = orient(chi, (p, q, c, a))
    hit = (op != oq) & (s1 == s2) & (s2 == s3)
    return np.where(hit, oq, 0).astype(np.int8)


def triangle_linking(chi: np.ndarray, ta: Sequence[int], tb: Sequence[int]) -> np.ndarray:
    total = np.zeros(chi.shape[0], dtype=np.int8)
    for x in range(3):
        total += pierce(chi, ta[x], ta[(x + 1) % 3], *tb)
    return total


def hopf_counts(chi: np.ndarray) -> np.ndarray:
    """Number of the 10 triangle pairs with linking number ±1."""
    count = np.zeros(chi.shape[0], dtype=np.int8)
    for ta, tb in K6_PARTITIONS:
        count += (np.abs(triangle_linking(chi, ta, tb)) == 1).astype(np.int8)
    return count


def hexagon_all_corners_blocked(chi: np.ndarray, hexagon: Sequence[int]) -> np.ndarray:
    """True where no corner of the hexagon is reducible.

    The triangle at a corner can only be met by the two sticks disjoint from
    it, so the corner is blocked iff one of those two pierces it.
    """
    h = hexagon
    blocked = np.ones(chi.shape[0], dtype=bool)
    for k in range(6):
        a, b, c = h[k - 1], h[k], h[(k + 1) % 6]
        d, e, f = h[(k + 2) % 6], h[(k + 3) % 6], h[(k + 4) % 6]
        blocked &= (pierce(chi, d, e, a, b, c) != 0) | (pierce(chi, e, f, a, b, c) != 0)
    return blocked


def chirotope_key(chi_row: np.ndarray) -> int:
    """Pack one sample's 15 signs into an integer (bit set = positive)."""
    return int(sum(1 << k for k, s in enumerate(chi_row) if s > 0))
