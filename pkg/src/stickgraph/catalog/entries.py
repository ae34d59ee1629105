"""Built-in catalog of constructed embeddings with their claims.

Coordinates of the searched entries live in ``coordinates.py``, generated by
``scripts/construct_catalog.py``; the rest are written out here.
"""
from __future__ import annotations

from functools import lru_cache
from itertools import combinations
from typing import Dict, Sequence, Tuple

from stickgraph.catalog.coordinates import COORDINATES
from stickgraph.catalog.io import embedding_from_json, parse_number
from stickgraph.catalog.verify import CatalogEntry, Claim
from stickgraph.graph import PLEmbedding


def _linear(name, labels, points, edges) -> PLEmbedding:
    pos = {lab: tuple(parse_number(c) for c in p) for lab, p in zip(labels, points)}
    return PLEmbedding(pos, edges, name=name, vertices=labels)


def _complete(name, points) -> PLEmbedding:
    labels = [f"v{i + 1}" for i in range(len(points))]
    return _linear(name, labels, points, list(combinations(labels, 2)))


def _bipartite(name, points) -> PLEmbedding:
    labels = ["a1", "a2", "a3", "b1", "b2", "b3"]
    return _linear(name, labels, points, [(a, b) for a in labels[:3] for b in labels[3:]])


def _searched(name) -> PLEmbedding:
    e = embedding_from_json(COORDINATES[name])
    e.name = name
    return e


def _knotless(sticks: int) -> Tuple[Claim, ...]:
    return (Claim("valid"), Claim("stick_count", sticks), Claim("all_cycles_unknotted"), Claim("irreducible"))


def _entries() -> Dict[str, CatalogEntry]:
    out = {}

    def add(name, e, claims, notes="", order: Sequence[str] = ()):
        out[name] = CatalogEntry(name, e, tuple(claims), notes, tuple(order))

    add("tetrahedron_k4",
        _complete("tetrahedron_k4", [(0, 0, 0), (1, 0, 0), (0, 1, 0), (0, 0, 1)]),
        _knotless(6), "straight tetrahedron")
    add("huh_oh_theta_8", _searched("huh_oh_theta_8"),
        _knotless(8) + (Claim("nontrivial_embedding", "S4"),),
        "theta-curve drawn as K4 minus edge v3v4 (v3, v4 of degree 2); every "
        "constituent knot is trivial yet the S4 representation count differs "
        "from the free value 24^2, so the embedding is not planar")
    add("k4_9stick", _searched("k4_9stick"),
        _knotless(9) + (Claim("contains_subembedding", "huh_oh_theta_8", delete_edges=(("v3", "v4"),)),),
        "the 8-stick theta-curve plus a straight edge v3v4")
    add("k5_13stick", _searched("k5_13stick"),
        _knotless(13) + (Claim("contains_subembedding", "huh_oh_theta_8",
                               delete_edges=(("v1", "v2"),), delete_vertices=("v5",)),),
        "k4_9stick relabelled so the added edge is v1v2, plus v5 joined straight to v1..v4")
    k33 = COORDINATES["k33_mobius_linear"]["points"]
    add("k33_mobius_linear", _bipartite("k33_mobius_linear", k33),
        (Claim("valid"), Claim("all_cycles_unknotted"), Claim("k33_class", "mobius")),
        "parts a1..a3 and b1..b3")
    add("k33_nonmobius_knotless", _searched("k33_nonmobius_knotless"),
        (Claim("valid"), Claim("all_cycles_unknotted")),
        "parts {x, v1, v2} and {y, v3, v4}; built from the knotless K4 by turning "
        "the bend of v1v2 into x and joining it to a point y of v3v4. Not being "
        "in Mobius form is not machine-checked.")
    add("k5_linear_type_a",
        _complete("k5_linear_type_a", [(1, 1, 1), (1, -1, -1), (-1, 1, -1), (-1, -1, 1), (0, 0, 0)]),
        (Claim("valid"), Claim("all_cycles_unknotted"), Claim("radon_kind", "one_inside_four")),
        "v5 inside the tetrahedron v1..v4")
    add("k5_linear_type_b",
        _complete("k5_linear_type_b", [(1, 0, 0), (-1, 1, 0), (-1, -1, 0), (0, 0, 1), (0, 0, -1)]),
        (Claim("valid"), Claim("all_cycles_unknotted"), Claim("radon_kind", "two_three")),
        "segment v4v5 pierces triangle v1v2v3")
    k6 = COORDINATES["k6_trefoil_sample"]
    add("k6_trefoil_sample", _complete("k6_trefoil_sample", k6["points"]),
        (Claim("valid"), Claim("hopf_census", 3), Claim("knotted_cycle_count", 1),
         Claim("has_knotted_cycle", tuple(f"v{i + 1}" for i in k6["knotted_hexagon"]))),
        "seeded random linear K6 with three Hopf-linked triangle pairs")
    return out


@lru_cache(maxsize=1)
def _catalog() -> Dict[str, CatalogEntry]:
    return _entries()


def builtin_names() -> Tuple[str, ...]:
    return tuple(_catalog())


def builtin(name: str) -> CatalogEntry:
    try:
        return _catalog()[name]
    except KeyError:
        raise KeyError(f"unknown catalog entry {name!r}; known: {', '.join(builtin_names())}") from None
