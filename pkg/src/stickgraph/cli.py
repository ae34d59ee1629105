"""Command-line front end.

Exit codes: 0 success, 1 verification failure, 2 usage or input error,
3 unresolved numeric degeneracy.
"""
from __future__ import annotations

import argparse
import json
import sys
from collections import Counter
from pathlib import Path

import numpy as np

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_DEGENERATE = 0, 1, 2, 3

_PIPELINES = {"k6": "k6_census", "k33": "k33_direct", "both": "both"}


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def _positive(text):
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError("must be a positive integer")
    return v


def _nonneg(text):
    v = int(text)
    if v < 0:
        raise argparse.ArgumentTypeError("must be nonnegative")
    return v


def _seed(text):
    v = int(text)
    if not 0 <= v < 2 ** 64:
        raise argparse.ArgumentTypeError("seed must be in [0, 2^64)")
    return v


def _write_json(path, obj):
    if path:
        Path(path).write_text(json.dumps(obj, sort_keys=True, indent=2) + "\n")


def _load_embedding(path):
    from stickgraph.catalog.io import FormatError, load
    try:
        return load(path)
    except (OSError, FormatError) as exc:
        raise UsageError(str(exc)) from exc


def _load_points(path, count):
    """Points from an embedding file (graph vertices in file order) or a
    ``{"points": [...]}`` file."""
    from stickgraph.catalog.io import FormatError, parse_number
    try:
        obj = json.loads(Path(path).read_text(), parse_float=str)
    except (OSError, json.JSONDecodeError) as exc:
        raise UsageError(str(exc)) from exc
    try:
        if isinstance(obj, dict) and "points" in obj:
            exact = obj.get("mode", "exact") != "float"
            pts = [tuple(parse_number(c, exact) for c in p) for p in obj["points"]]
        else:
            e = _load_embedding(path)
            if e.bends():
                raise UsageError("a linear embedding (no bends) is required")
            pts = [e.positions[v] for v in e.graph.vertices]
    except (FormatError, TypeError) as exc:
        raise UsageError(str(exc)) from exc
    if len(pts) != count or any(len(p) != 3 for p in pts):
        raise UsageError(f"expected {count} points in 3-space")
    return pts


# -- commands ---------------------------------------------------------------

def cmd_estimate(args):
    from stickgraph.montecarlo import RunConfig, run_estimation
    cfg = RunConfig(seed=args.seed, samples=args.samples, workers=args.workers,
                    pipeline=_PIPELINES[args.pipeline], cross_check_every=args.cross_check_every)
    rep = run_estimation(cfg)
    st = rep.state
    print(f"pipeline={cfg.pipeline} samples={cfg.samples} seed={cfg.seed} workers={cfg.workers}")
    for key in ("p3_hat", "q_hat", "p_k33_knot_census", "p_k33_knot_direct", "p_mobius",
                "pair_link_rate"):
        e = rep.estimates.get(key)
        if e is not None:
            print(f"  {key:20s} {e.value:.6f}  95% CI [{e.lo:.6f}, {e.hi:.6f}]")
    if "pipeline_z" in rep.estimates:
        print(f"  {'pipeline_z':20s} {rep.estimates['pipeline_z']:+.3f}")
    print(f"  discard_rate         {rep.estimates['discard_rate']:.3g}")
    if cfg.cross_check_every:
        print(f"  cross_checked={st.cross_checked} failures={st.cross_check_failures} "
              f"multi_knot={st.multi_knot_samples} k33_cross_checked={st.k33_cross_checked} "
              f"k33_failures={st.k33_cross_check_failures}")
    print(f"  wall_time_seconds    {rep.wall_time_seconds:.1f}")
    if args.json:
        Path(args.json).write_text(rep.dumps() + "\n")
    if args.csv:
        p = Path(args.csv)
        row = rep.csv_row(header=not p.exists())
        with p.open("a") as fh:
            fh.write(row)
    failures = st.cross_check_failures + st.k33_cross_check_failures + st.hopf_other
    return EXIT_FAIL if failures else EXIT_OK


def cmd_classify_k33(args):
    from stickgraph.knots.linking import classify_linear_k33
    pts = _load_points(args.file, 6)
    res = classify_linear_k33(pts, np.random.default_rng(args.seed))
    print("Mobius" if res.kind == "mobius" else "Knotted")
    for h in res.knotted:
        print("  knotted hexagon:", "-".join(map(str, h)))
    _write_json(args.json, res.to_json())
    return EXIT_OK


def cmd_classify_k5(args):
    from stickgraph.k5_radon import classification_json, classify_k5, face_sign_vectors
    if args.random is not None:
        if args.seed is None:
            raise UsageError("--random requires --seed")
        rng = np.random.default_rng(args.seed)
        kinds, negatives = Counter(), Counter()
        for _ in range(args.random):
            pts = [tuple(float(c) for c in p) for p in rng.random((5, 3))]
            kinds[classify_k5(pts).kind] += 1
            for v in face_sign_vectors(pts):
                negatives[sum(s < 0 for s in v)] += 1
        out = {"samples": args.random, "seed": args.seed, "kinds": dict(sorted(kinds.items())),
               "negative_sign_counts": {str(k): n for k, n in sorted(negatives.items())}}
        for k, n in sorted(kinds.items()):
            print(f"{k:16s} {n:8d}  {n / args.random:.4f}")
        for k, n in sorted(negatives.items()):
            print(f"probes with {k} negative face signs: {n}")
        _write_json(args.json, out)
        return EXIT_OK
    if args.file is None:
        raise UsageError("give a point file or --random N")
    out = classification_json(_load_points(args.file, 5))
    w = out["witness"]
    if out["kind"] == "one_inside_four":
        print(f"one_inside_four: point {w['inner']} inside the other four")
    else:
        print(f"two_three: segment {w['segment']} pierces triangle {w['triangle']}")
    _write_json(args.json, out)
    return EXIT_OK


def cmd_verify(args):
    from stickgraph.catalog import builtin, builtin_names, verify
    from stickgraph.catalog.verify import CatalogEntry, Claim
    target = args.target
    if target in builtin_names():
        entry = builtin(target)
    elif Path(target).exists():
        e = _load_embedding(target)
        claims = (Claim("valid"), Claim("all_cycles_unknotted"))
        entry = CatalogEntry(e.name or Path(target).stem, e, claims)
    else:
        raise UsageError(f"{target!r} is neither a catalog entry nor a file")
    rep = verify(entry)
    for r in rep.results:
        print(f"{'PASS' if r.passed else 'FAIL'}  {r.claim.describe()}")
    print(f"{entry.name}: {'all claims pass' if rep.all_passed else 'verification FAILED'}")
    _write_json(args.json, rep.to_json())
    return EXIT_OK if rep.all_passed else EXIT_FAIL


def _cycle(e, text):
    from stickgraph.graph import cycle_from_vertices
    labels = [x.strip() for x in text.split(",") if x.strip()]
    if len(labels) < 3 or len(set(labels)) != len(labels):
        raise UsageError(f"bad cycle {text!r}")
    try:
        return cycle_from_vertices(e, labels)
    except KeyError as exc:
        raise UsageError(f"not a cycle of the graph: {exc}") from exc


def cmd_knot(args):
    from stickgraph.graph import realize_cycle
    from stickgraph.knots.polygons import classify_polygon
    e = _load_embedding(args.file)
    poly = realize_cycle(e, _cycle(e, args.cycle))
    kc = classify_polygon(poly, np.random.default_rng(args.seed))
    print(kc)
    _write_json(args.json, kc.to_json())
    return EXIT_OK


def cmd_linking(args):
    from stickgraph.graph import realize_cycle
    from stickgraph.knots.linking import linking_number
    e = _load_embedding(args.file)
    ca, cb = _cycle(e, args.cycle_a), _cycle(e, args.cycle_b)
    if set(ca.vertices) & set(cb.vertices):
        raise UsageError("the two cycles must be vertex-disjoint")
    lk = linking_number(realize_cycle(e, ca), realize_cycle(e, cb), np.random.default_rng(args.seed))
    print(lk)
    _write_json(args.json, {"linking_number": lk})
    return EXIT_OK


def build_parser():
    p = _Parser(prog="stickgraph", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("estimate", help="Monte Carlo knotting probabilities")
    s.add_argument("--samples", type=_positive, required=True)
    s.add_argument("--seed", type=_seed, required=True)
    s.add_argument("--workers", type=_positive, default=1)
    s.add_argument("--pipeline", choices=sorted(_PIPELINES), default="k6")
    s.add_argument("--cross-check-every", type=_nonneg, default=0)
    s.add_argument("--json")
    s.add_argument("--csv", help="append one CSV row (header on first write)")
    s.set_defaults(func=cmd_estimate)

    s = sub.add_parser("classify-k33", help="Mobius form versus knotted for a linear K3,3")
    s.add_argument("file")
    s.add_argument("--seed", type=_seed, required=True)
    s.add_argument("--json")
    s.set_defaults(func=cmd_classify_k33)

    s = sub.add_parser("classify-k5", help="Radon type of five points")
    s.add_argument("file", nargs="?")
    s.add_argument("--random", type=_positive)
    s.add_argument("--seed", type=_seed)
    s.add_argument("--json")
    s.set_defaults(func=cmd_classify_k5)

    s = sub.add_parser("verify", help="check the claims of a catalog entry or file")
    s.add_argument("target")
    s.add_argument("--json")
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("knot", help="knot class of one cycle")
    s.add_argument("file")
    s.add_argument("--cycle", required=True)
    s.add_argument("--seed", type=_seed, required=True)
    s.add_argument("--json")
    s.set_defaults(func=cmd_knot)

    s = sub.add_parser("linking", help="linking number of two disjoint cycles")
    s.add_argument("file")
    s.add_argument("--cycle-a", required=True)
    s.add_argument("--cycle-b", required=True)
    s.add_argument("--seed", type=_seed, required=True)
    s.add_argument("--json")
    s.set_defaults(func=cmd_linking)
    return p


def main(argv=None) -> int:
    from stickgraph.geometry import DegenerateInputError
    from stickgraph.graph import ReductionDegenerate
    from stickgraph.knots.diagram import ProjectionError
    from stickgraph.knots.linking import DegenerateSampleError
    from stickgraph.knots.polygons import DegeneratePolygonError

    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (DegenerateInputError, DegenerateSampleError, DegeneratePolygonError,
            ReductionDegenerate, ProjectionError) as exc:
        print(f"degenerate input: {exc}", file=sys.stderr)
        return EXIT_DEGENERATE


if __name__ == "__main__":
    sys.exit(main())
