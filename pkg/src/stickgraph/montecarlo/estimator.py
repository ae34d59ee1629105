"""Seeded, block-parallel estimation of the K6 / K3,3 knotting probabilities.

Sampling contract: sample ``i`` of pipeline ``k`` lives in block
``i // BLOCK_SIZE`` and is drawn from a Philox generator seeded by
``SeedSequence(seed, spawn_key=(k, block))``. Blocks are independent, so
the tallies do not depend on how blocks are assigned to workers.
"""
from __future__ import annotations

import csv
import io
import json
import math
import multiprocessing
import time
from dataclasses import asdict, dataclass, field, fields
from fractions import Fraction
from typing import Dict, List, Optional, Tuple

import numpy as np

from stickgraph.knots.linking import K6_HEXAGONS, K33_HEXAGONS
from stickgraph.knots.polygons import DegeneratePolygonError, hexagon_is_knotted
from stickgraph.montecarlo.chirotope import (
    chirotope_key,
    hexagon_all_corners_blocked,
    hopf_counts,
    orientation_signs,
)

BLOCK_SIZE = 65536
Z95 = 1.96
PIPELINES = ("k6_census", "k33_direct", "both")
_STREAM_K6, _STREAM_K33 = 0, 1


def sample_cube_points(rng: np.random.Generator, k: int) -> np.ndarray:
    """``k`` points uniform on [0,1)^3 (53-bit doubles), shape (k, 3)."""
    return rng.random((k, 3))


def block_generator(seed: int, stream: int, block: int) -> np.random.Generator:
    return np.random.Generator(np.random.Philox(np.random.SeedSequence(seed, spawn_key=(stream, block))))


# -- configuration and counters ---------------------------------------------

@dataclass(frozen=True)
class RunConfig:
    seed: int
    samples: int
    workers: int = 1
    pipeline: str = "k6_census"
    cross_check_every: int = 0

    def __post_init__(self):
        if not (isinstance(self.seed, int) and 0 <= self.seed < 2 ** 64):
            raise ValueError("seed must be an integer in [0, 2^64)")
        if self.samples < 1:
            raise ValueError("samples must be at least 1")
        if self.workers < 1:
            raise ValueError("workers must be at least 1")
        if self.pipeline not in PIPELINES:
            raise ValueError(f"pipeline must be one of {PIPELINES}")
        if self.cross_check_every < 0:
            raise ValueError("cross_check_every must be nonnegative")

    @property
    def runs_k6(self) -> bool:
        return self.pipeline in ("k6_census", "both")

    @property
    def runs_k33(self) -> bool:
        return self.pipeline in ("k33_direct", "both")


@dataclass
class EstimatorState:
    pipeline: str
    k6_accepted: int = 0
    k6_discarded: int = 0
    hopf1: int = 0
    hopf3: int = 0
    hopf_other: int = 0
    k33_accepted: int = 0
    k33_discarded: int = 0
    k33_knotted: int = 0
    cross_checked: int = 0
    cross_check_failures: int = 0
    multi_knot_samples: int = 0
    k33_cross_checked: int = 0
    k33_cross_check_failures: int = 0

    @property
    def n_accepted(self) -> int:
        return self.k6_accepted + self.k33_accepted

    @property
    def n_discarded_degenerate(self) -> int:
        return self.k6_discarded + self.k33_discarded

    def counters(self) -> Dict[str, int]:
        return {f.name: getattr(self, f.name) for f in fields(self) if f.name != "pipeline"}


def merge(a: EstimatorState, b: EstimatorState) -> EstimatorState:
    if a.pipeline != b.pipeline:
        raise ValueError(f"cannot merge {a.pipeline} state with {b.pipeline} state")
    ca, cb = a.counters(), b.counters()
    return EstimatorState(a.pipeline, **{k: ca[k] + cb[k] for k in ca})


def wilson_interval(k: int, n: int, z: float = Z95) -> Tuple[float, float]:
    if n < 1 or not 0 <= k <= n:
        raise ValueError("need 0 <= k <= n and n >= 1")
    p = k / n
    z2 = z * z
    denom = 1 + z2 / n
    centre = (p + z2 / (2 * n)) / denom
    half = z * math.sqrt(p * (1 - p) / n + z2 / (4 * n * n)) / denom
    # the bounds at k = 0 and k = n are exactly 0 and 1; avoid rounding residue
    lo = 0.0 if k == 0 else max(0.0, min(p, centre - half))
    hi = 1.0 if k == n else min(1.0, max(p, centre + half))
    return lo, hi


# -- per-block work ----------------------------------------------------------

_K33_CACHE: Dict[int, bool] = {}


def _k6_block(cfg: RunConfig, block: int, start: int, count: int, st: EstimatorState):
    rng = block_generator(cfg.seed, _STREAM_K6, block)
    pts = sample_cube_points(rng, 6 * count).reshape(count, 6, 3)
    chi, degenerate = orientation_signs(pts)
    ok = ~degenerate
    hc = hopf_counts(chi)[ok]
    st.k6_accepted += int(ok.sum())
    st.k6_discarded += int(degenerate.sum())
    st.hopf1 += int((hc == 1).sum())
    st.hopf3 += int((hc == 3).sum())
    st.hopf_other += int(((hc != 1) & (hc != 3)).sum())
    m = cfg.cross_check_every
    if m:
        idx = np.arange(start, start + count)
        chosen = np.flatnonzero(ok & (idx % m == 0))
        if chosen.size:
            _k6_cross_check(pts[chosen], chi[chosen], hopf_counts(chi[chosen]), rng, st)


def _k6_cross_check(pts, chi, hc, rng, st: EstimatorState):
    """Compare the 3-Hopf criterion with the 60-hexagon determinant oracle."""
    survivors = np.stack([hexagon_all_corners_blocked(chi, h) for h in K6_HEXAGONS], axis=1)
    for s in range(pts.shape[0]):
        knotted = 0
        for hi in np.flatnonzero(survivors[s]):
            hexagon = [tuple(float(c) for c in pts[s, i]) for i in K6_HEXAGONS[hi]]
            try:
                knotted += hexagon_is_knotted(hexagon, rng)
            except DegeneratePolygonError:
                knotted = -1
                break
        st.cross_checked += 1
        if knotted < 0 or (knotted > 0) != (hc[s] == 3):
            st.cross_check_failures += 1
        if knotted > 1:
            st.multi_knot_samples += 1


def _k33_knotted_exact(points6: np.ndarray, candidates, rng) -> bool:
    for hi in candidates:
        hexagon = [tuple(float(c) for c in points6[i]) for i in K33_HEXAGONS[hi]]
        if hexagon_is_knotted(hexagon, rng):
            return True
    return False


def _k33_block(cfg: RunConfig, block: int, start: int, count: int, st: EstimatorState):
    rng = block_generator(cfg.seed, _STREAM_K33, block)
    pts = sample_cube_points(rng, 6 * count).reshape(count, 6, 3)
    chi, degenerate = orientation_signs(pts)
    survivors = np.stack([hexagon_all_corners_blocked(chi, h) for h in K33_HEXAGONS], axis=1)
    survivors[degenerate] = False
    m = cfg.cross_check_every
    knotted = 0
    discarded = int(degenerate.sum())
    for s in np.flatnonzero(survivors.any(axis=1)):
        key = chirotope_key(chi[s])
        cand = np.flatnonzero(survivors[s])
        try:
            if key not in _K33_CACHE:
                _K33_CACHE[key] = _k33_knotted_exact(pts[s], cand, rng)
            knotted += _K33_CACHE[key]
        except DegeneratePolygonError:
            discarded += 1
    if m:
        for s in np.flatnonzero(~degenerate & ((np.arange(start, start + count) % m) == 0)):
            cand = np.flatnonzero(survivors[s])
            st.k33_cross_checked += 1
            try:
                direct = _k33_knotted_exact(pts[s], range(len(K33_HEXAGONS)), rng)
            except DegeneratePolygonError:
                st.k33_cross_check_failures += 1
                continue
            cached = bool(cand.size) and _K33_CACHE.get(chirotope_key(chi[s]), False)
            if direct != cached:
                st.k33_cross_check_failures += 1
    st.k33_accepted += count - discarded
    st.k33_discarded += discarded
    st.k33_knotted += knotted


def _run_block(args) -> EstimatorState:
    cfg, block = args
    start = block * BLOCK_SIZE
    count = min(BLOCK_SIZE, cfg.samples - start)
    st = EstimatorState(cfg.pipeline)
    if cfg.runs_k6:
        _k6_block(cfg, block, start, count, st)
    if cfg.runs_k33:
        _k33_block(cfg, block, start, count, st)
    return st


def run_state(cfg: RunConfig) -> EstimatorState:
    nblocks = -(-cfg.samples // BLOCK_SIZE)
    jobs = [(cfg, b) for b in range(nblocks)]
    total = EstimatorState(cfg.pipeline)
    if cfg.workers == 1 or nblocks == 1:
        results = map(_run_block, jobs)
        for r in results:
            total = merge(total, r)
        return total
    with multiprocessing.get_context("fork").Pool(cfg.workers) as pool:
        for r in pool.imap(_run_block, jobs):
            total = merge(total, r)
    return total


# -- report -----------------------------------------------------------------

@dataclass(frozen=True)
class Estimate:
    value: float
    lo: float
    hi: float

    def to_json(self):
        return {"value": self.value, "ci95": [self.lo, self.hi]}


def _affine(e: Estimate, a: float, b: float) -> Estimate:
    lo, hi = sorted((a * e.lo + b, a * e.hi + b))
    return Estimate(a * e.value + b, lo, hi)


@dataclass
class EstimatorReport:
    config: RunConfig
    state: EstimatorState
    estimates: Dict[str, object]
    wall_time_seconds: float = 0.0

    def get(self, name) -> Optional[float]:
        e = self.estimates.get(name)
        return e.value if isinstance(e, Estimate) else e

    def to_json(self, include_timing: bool = True) -> dict:
        out = {
            "config": asdict(self.config),
            "counters": self.state.counters(),
            "estimates": {k: (v.to_json() if isinstance(v, Estimate) else v)
                          for k, v in self.estimates.items()},
        }
        if include_timing:
            out["wall_time_seconds"] = self.wall_time_seconds
        return out

    def dumps(self, include_timing: bool = True) -> str:
        return json.dumps(self.to_json(include_timing), sort_keys=True, indent=2)

    def csv_row(self, header: bool = False) -> str:
        cols = {**{f"config.{k}": v for k, v in asdict(self.config).items()},
                **{f"counters.{k}": v for k, v in self.state.counters().items()}}
        for k, v in sorted(self.estimates.items()):
            cols[k] = v.value if isinstance(v, Estimate) else v
        cols["wall_time_seconds"] = self.wall_time_seconds
        buf = io.StringIO()
        w = csv.DictWriter(buf, fieldnames=list(cols), lineterminator="\n")
        if header:
            w.writeheader()
        w.writerow(cols)
        return buf.getvalue()


def build_report(cfg: RunConfig, st: EstimatorState, wall: float = 0.0) -> EstimatorReport:
    est: Dict[str, object] = {}
    z = Z95
    drawn = st.k6_accepted + st.k6_discarded + st.k33_accepted + st.k33_discarded
    est["discard_rate"] = st.n_discarded_degenerate / drawn if drawn else 0.0
    se_census = se_direct = None
    if cfg.runs_k6 and st.k6_accepted:
        n = st.k6_accepted
        p3 = Fraction(st.hopf3, n)
        p3e = Estimate(float(p3), *wilson_interval(st.hopf3, n, z))
        est["p1_hat"] = Estimate(st.hopf1 / n, *wilson_interval(st.hopf1, n, z))
        est["p3_hat"] = p3e
        q = (2 * p3 + 1) / 45
        est["q_hat"] = _affine(p3e, 2 / 45, 1 / 45)
        est["q_hat"] = Estimate(float(q), est["q_hat"].lo, est["q_hat"].hi)
        est["p_k6_knot"] = p3e
        k33c = p3 / 10
        # the K3,3 rate written through q, kept as an exact rational identity
        est["k33_formula_identity_exact"] = (45 * q - 1) / 20 == k33c
        est["p_k33_knot_census"] = Estimate(float(k33c), p3e.lo / 10, p3e.hi / 10)
        est["p_mobius_census"] = Estimate(float(1 - k33c), 1 - p3e.hi / 10, 1 - p3e.lo / 10)
        est["pair_link_rate"] = Estimate(float((1 + 2 * p3) / 10), (1 + 2 * p3e.lo) / 10, (1 + 2 * p3e.hi) / 10)
        se_census = math.sqrt(float(p3) * (1 - float(p3)) / n) / 10
    if cfg.runs_k33 and st.k33_accepted:
        n = st.k33_accepted
        pk = st.k33_knotted / n
        pe = Estimate(pk, *wilson_interval(st.k33_knotted, n, z))
        est["p_k33_knot_direct"] = pe
        est["p_mobius_direct"] = Estimate(1 - pk, 1 - pe.hi, 1 - pe.lo)
        se_direct = math.sqrt(pk * (1 - pk) / n)
    if "p_mobius_census" in est:
        est["p_mobius"] = est["p_mobius_census"]
        est["p_k33_knot"] = est["p_k33_knot_census"]
    elif "p_mobius_direct" in est:
        est["p_mobius"] = est["p_mobius_direct"]
        est["p_k33_knot"] = est["p_k33_knot_direct"]
    if se_census is not None and se_direct is not None:
        diff = est["p_k33_knot_direct"].value - est["p_k33_knot_census"].value
        se = math.sqrt(se_census ** 2 + se_direct ** 2)
        est["pipeline_z"] = diff / se if se > 0 else 0.0
    return EstimatorReport(cfg, st, est, wall)


def run_estimation(cfg: RunConfig) -> EstimatorReport:
    t0 = time.perf_counter()
    st = run_state(cfg)
    return build_report(cfg, st, time.perf_counter() - t0)
