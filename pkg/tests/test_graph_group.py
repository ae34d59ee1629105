import numpy as np
import pytest

from stickgraph.catalog import builtin
from stickgraph.graph import PLEmbedding
from stickgraph.knots.graph_group import (
    Presentation,
    count_homomorphisms,
    cycle_rank,
    permutation_group,
    representation_count,
    wirtinger,
)

from conftest import TREFOIL_HEXAGON, mirror

S3 = permutation_group(3)
S4 = permutation_group(4)


def cycle_embedding(points):
    labels = [f"p{i}" for i in range(len(points))]
    return PLEmbedding(dict(zip(labels, points)), [(labels[i], labels[(i + 1) % len(labels)])
                                                   for i in range(len(labels))])


def planar_theta():
    pos = {"u": (0, 0, 1), "w": (0, 0, -1), "a": (2, 0, 0), "b": (-1, 2, 0), "c": (-1, -2, 0)}
    return PLEmbedding(pos, [("u", "a"), ("a", "w"), ("u", "b"), ("b", "w"), ("u", "c"), ("c", "w")])


def test_group_orders():
    assert S3.order == 6 and S4.order == 24
    assert permutation_group(4, even_only=True).order == 12


def test_free_group_counts():
    free2 = Presentation(2, (), ())
    assert count_homomorphisms(free2, S3) == 36


def test_knot_counts():
    rng = np.random.default_rng(0)
    # abelian representations (6) plus the six nontrivial 3-colourings
    assert representation_count(cycle_embedding(TREFOIL_HEXAGON), S3, rng) == 12
    assert representation_count(cycle_embedding(mirror(TREFOIL_HEXAGON)), S3, rng) == 12
    hexagon = [(2, 0, 0), (1, 2, 0), (-1, 2, 0), (-2, 0, 0), (-1, -2, 0), (1, -2, 0)]
    assert representation_count(cycle_embedding(hexagon), S3, rng) == 6


def test_planar_theta_is_free():
    e = planar_theta()
    assert cycle_rank(e) == 2
    rng = np.random.default_rng(1)
    assert {representation_count(e, S4, rng) for _ in range(5)} == {24 ** 2}


def test_catalog_theta_count_is_projection_invariant():
    e = builtin("huh_oh_theta_8").embedding
    rng = np.random.default_rng(2)
    counts = {representation_count(e, S4, rng) for _ in range(8)}
    assert counts == {672}


def test_presentation_shape():
    e = planar_theta()
    pres = wirtinger(e, (3, 5, 7))
    assert len(pres.vertices) == 5
    assert all(len(w) in (2, 3) for w in pres.vertices)
