"""Census of Radon types and face sign vectors for random five-point sets.

    python3 scripts/k5_census.py --samples 100000 --seed 7

For each point, the sign vector records on which side of the four faces
(of the tetrahedron spanned by the other four points) it lies. The table
shows how many negative entries occur, split by the role of the point.
"""
import argparse
from collections import Counter

import numpy as np

from stickgraph.geometry import general_position_check
from stickgraph.k5_radon import classify_k5, face_sign_vectors


def role(part, i):
    if part.kind == "one_inside_four":
        return "inner" if i == part.inner else "outer"
    return "segment" if i in part.segment else "triangle"


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--samples", type=int, default=10 ** 5)
    ap.add_argument("--seed", type=int, required=True)
    args = ap.parse_args()

    rng = np.random.default_rng(args.seed)
    kinds, table = Counter(), Counter()
    skipped = 0
    for _ in range(args.samples):
        pts = [tuple(float(c) for c in p) for p in rng.random((5, 3))]
        if general_position_check(pts) is not None:
            skipped += 1
            continue
        part = classify_k5(pts)
        kinds[part.kind] += 1
        for i, v in enumerate(face_sign_vectors(pts)):
            table[(part.kind, role(part, i), sum(s < 0 for s in v))] += 1
    n = sum(kinds.values())
    for k, c in sorted(kinds.items()):
        print(f"{k:16s} {c:8d}  {c / n:.4f}")
    print(f"skipped (not in general position): {skipped}")
    print("\nkind             role      negatives  count")
    for (k, r, neg), c in sorted(table.items()):
        print(f"{k:16s} {r:9s} {neg:9d}  {c}")


if __name__ == "__main__":
    main()
