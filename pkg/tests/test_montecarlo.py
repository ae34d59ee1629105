import csv
import io
import json
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from stickgraph.geometry import orient3d
from stickgraph.knots.linking import K6_HEXAGONS, hopf_census_k6
from stickgraph.knots.polygons import hexagon_prefilter_unknot
from stickgraph.montecarlo import (
    BLOCK_SIZE,
    EstimatorState,
    RunConfig,
    build_report,
    merge,
    run_estimation,
    run_state,
    sample_cube_points,
    wilson_interval,
)
from stickgraph.montecarlo.chirotope import (
    QUADS,
    chirotope_key,
    hexagon_all_corners_blocked,
    hopf_counts,
    orient,
    orientation_signs,
)
from stickgraph.montecarlo.estimator import block_generator

counter_names = [n for n in EstimatorState("both").counters()]


def test_sample_cube_points():
    a = sample_cube_points(np.random.default_rng(7), 3)
    b = sample_cube_points(np.random.default_rng(7), 3)
    assert a.shape == (3, 3) and np.array_equal(a, b)
    assert sample_cube_points(np.random.default_rng(0), 0).shape == (0, 3)
    big = sample_cube_points(np.random.default_rng(1), 10 ** 6)
    assert np.all(np.abs(big.mean(axis=0) - 0.5) < 0.002)
    assert big.min() >= 0 and big.max() < 1


def test_block_streams_are_independent():
    a = block_generator(1, 0, 0).random(4)
    assert not np.array_equal(a, block_generator(1, 1, 0).random(4))
    assert not np.array_equal(a, block_generator(1, 0, 1).random(4))
    assert np.array_equal(a, block_generator(1, 0, 0).random(4))


def test_wilson_examples():
    lo, hi = wilson_interval(0, 10)
    assert lo == 0 and hi > 0
    lo, hi = wilson_interval(10, 10)
    assert hi > lo and hi <= 1
    lo, hi = wilson_interval(5, 10)
    assert abs(lo - 0.2366) < 1e-3 and abs(hi - 0.7634) < 1e-3
    with pytest.raises(ValueError):
        wilson_interval(3, 2)


@given(st.integers(1, 10 ** 6), st.data())
def test_wilson_contains_estimate(n, data):
    k = data.draw(st.integers(0, n))
    lo, hi = wilson_interval(k, n)
    assert 0 <= lo <= k / n <= hi <= 1


def test_run_config_validation():
    for bad in (dict(samples=0), dict(workers=0), dict(pipeline="x"), dict(cross_check_every=-1),
                dict(seed=-1)):
        kw = dict(seed=1, samples=10)
        kw.update(bad)
        with pytest.raises(ValueError):
            RunConfig(**kw)


states = st.builds(lambda vals: EstimatorState("k6_census", **dict(zip(counter_names, vals))),
                   st.lists(st.integers(0, 10 ** 6), min_size=len(counter_names),
                            max_size=len(counter_names)))


@given(states, states)
def test_merge_laws(a, b):
    zero = EstimatorState("k6_census")
    assert merge(a, zero) == a
    assert merge(a, b) == merge(b, a)
    with pytest.raises(ValueError):
        merge(a, EstimatorState("k33_direct"))


# -- vectorized chirotope against the scalar predicates ------------------------

def test_orientation_signs_match_orient3d():
    pts = sample_cube_points(np.random.default_rng(3), 6 * 200).reshape(200, 6, 3)
    chi, deg = orientation_signs(pts)
    assert chi.shape == (200, 15) and not deg.any()
    for s in range(20):
        p = [tuple(float(c) for c in x) for x in pts[s]]
        for qi, q in enumerate(QUADS):
            assert chi[s, qi] == orient3d(*(p[i] for i in q)).sign
        assert orient(chi[s:s + 1], (1, 0, 2, 3))[0] == -chi[s, 0]


def test_degenerate_samples_are_flagged():
    pts = sample_cube_points(np.random.default_rng(4), 12).reshape(2, 6, 3)
    pts[1, 3] = pts[1, 0]
    _, deg = orientation_signs(pts)
    assert list(deg) == [False, True]


def test_vectorized_census_and_prefilter():
    pts = sample_cube_points(np.random.default_rng(5), 6 * 300).reshape(300, 6, 3)
    chi, _ = orientation_signs(pts)
    hc = hopf_counts(chi)
    for s in range(300):
        p = [tuple(float(c) for c in x) for x in pts[s]]
        assert hc[s] == hopf_census_k6(p).count
    for h in K6_HEXAGONS[:12]:
        blocked = hexagon_all_corners_blocked(chi, h)
        for s in range(60):
            p = [tuple(float(c) for c in pts[s][i]) for i in h]
            assert bool(blocked[s]) == (hexagon_prefilter_unknot(p) is False)


def test_chirotope_key_distinguishes():
    chi = np.array([[1] * 15, [1] * 14 + [-1]], dtype=np.int8)
    assert chirotope_key(chi[0]) != chirotope_key(chi[1])


# -- runs ----------------------------------------------------------------------

def small_report(**kw):
    cfg = dict(seed=3, samples=20000, pipeline="both", cross_check_every=50)
    cfg.update(kw)
    return run_estimation(RunConfig(**cfg))


def test_report_invariants():
    rep = small_report()
    st_ = rep.state
    e = rep.estimates
    assert st_.hopf1 + st_.hopf3 == st_.k6_accepted and st_.hopf_other == 0
    assert st_.k6_accepted + st_.k6_discarded == 20000
    assert st_.k33_accepted + st_.k33_discarded == 20000
    assert e["p1_hat"].value + e["p3_hat"].value == pytest.approx(1.0, abs=1e-15)
    assert Fraction(st_.hopf1, st_.k6_accepted) + Fraction(st_.hopf3, st_.k6_accepted) == 1
    assert e["k33_formula_identity_exact"] is True
    for k, v in e.items():
        if hasattr(v, "lo"):
            assert 0 <= v.lo <= v.value <= v.hi <= 1, k
    assert e["q_hat"].value == pytest.approx((2 * e["p3_hat"].value + 1) / 45)
    assert e["pair_link_rate"].value == pytest.approx(4.5 * e["q_hat"].value)
    assert st_.cross_check_failures == 0 and st_.k33_cross_check_failures == 0
    assert st_.cross_checked > 0 and st_.k33_cross_checked > 0


def test_report_serialization():
    rep = small_report(samples=3000, cross_check_every=0)
    obj = json.loads(rep.dumps())
    assert set(obj) == {"config", "counters", "estimates", "wall_time_seconds"}
    assert "wall_time_seconds" not in rep.to_json(include_timing=False)
    rows = list(csv.DictReader(io.StringIO(rep.csv_row(header=True))))
    assert len(rows) == 1 and float(rows[0]["p3_hat"]) == rep.estimates["p3_hat"].value


def test_same_config_same_report():
    a = small_report(samples=5000)
    b = small_report(samples=5000)
    assert a.dumps(include_timing=False) == b.dumps(include_timing=False)


def test_worker_split_invariance():
    n = BLOCK_SIZE + 3000  # spans two blocks
    one = run_state(RunConfig(seed=9, samples=n, workers=1, pipeline="k6_census"))
    four = run_state(RunConfig(seed=9, samples=n, workers=4, pipeline="k6_census"))
    assert one == four


def test_pipelines_are_independent_streams():
    a = small_report(samples=5000, pipeline="k6_census", cross_check_every=0).state
    b = small_report(samples=5000, pipeline="both", cross_check_every=0).state
    assert (a.hopf1, a.hopf3) == (b.hopf1, b.hopf3)
