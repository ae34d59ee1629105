from fractions import Fraction

import numpy as np
import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from stickgraph.geometry import DegenerateInputError, general_position_check
from stickgraph.k5_radon import (
    RadonPartition,
    classification_json,
    classify_k5,
    face_sign_vector,
    face_sign_vectors,
)

from conftest import int_point, random_affine

REG = [(1, 1, 1), (1, -1, -1), (-1, 1, -1), (-1, -1, 1)]
BIPYRAMID = [(1, 0, 0), (-1, 1, 0), (-1, -1, 0), (0, 0, 1), (0, 0, -1)]


def test_examples():
    assert classify_k5(REG + [(0, 0, 0)]) == RadonPartition("one_inside_four", inner=4)
    assert classify_k5(BIPYRAMID) == RadonPartition("two_three", segment=(3, 4), triangle=(0, 1, 2))
    with pytest.raises(DegenerateInputError):
        classify_k5([(0, 0, 0), (1, 0, 0), (0, 1, 0), (1, 1, 0), (0, 0, 1)])
    with pytest.raises(ValueError):
        classify_k5(REG)


def test_sign_vector_examples():
    assert face_sign_vector(REG + [(0, 0, 0)], 4) == (1, 1, 1, 1)
    assert sum(s < 0 for s in face_sign_vector(BIPYRAMID, 3)) == 1


def test_json_shape():
    out = classification_json(BIPYRAMID)
    assert out["kind"] == "two_three"
    assert out["witness"] == {"segment": [3, 4], "triangle": [0, 1, 2]}
    assert len(out["sign_vectors"]) == 5


def five_points():
    return st.lists(int_point, min_size=5, max_size=5).filter(lambda p: general_position_check(p) is None)


@given(five_points(), st.integers(0, 2 ** 32 - 1))
def test_affine_invariance(pts, seed):
    f, _ = random_affine(np.random.default_rng(seed))
    assert classify_k5([f(p) for p in pts]) == classify_k5(pts)


@given(five_points())
def test_sign_vectors_cohere_with_partition(pts):
    part = classify_k5(pts)
    vecs = face_sign_vectors(pts)
    negs = [sum(s < 0 for s in v) for v in vecs]
    assert 4 not in negs
    if part.kind == "one_inside_four":
        assert [i for i, v in enumerate(vecs) if v == (1, 1, 1, 1)] == [part.inner]
        assert all(negs[i] == 3 for i in range(5) if i != part.inner)
    else:
        assert (1, 1, 1, 1) not in vecs
        assert all(negs[i] == 1 for i in part.segment)
        assert all(negs[i] == 2 for i in part.triangle)
