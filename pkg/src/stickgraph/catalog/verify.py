"""Machine-checkable claims about embeddings and their verification."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Dict, List, Optional, Sequence, Tuple

import numpy as np

from stickgraph.geometry import DegenerateInputError
from stickgraph.graph import (
    VALID,
    PLEmbedding,
    ReductionDegenerate,
    cycle_from_vertices,
    enumerate_cycles,
    realize_cycle,
    reduce_with_log,
    validate,
)
from stickgraph.k5_radon import classify_k5
from stickgraph.knots.graph_group import cycle_rank, permutation_group, representation_count
from stickgraph.knots.invariants import UNKNOT, KnotClass
from stickgraph.knots.linking import DegenerateSampleError, classify_linear_k33, hopf_census_k6
from stickgraph.knots.polygons import MIN_KNOT_STICKS, classify_polygon

VERIFY_SEED = 20240607

CLAIM_KINDS = (
    "valid",
    "stick_count",
    "all_cycles_unknotted",
    "has_knotted_cycle",
    "knotted_cycle_count",
    "irreducible",
    "contains_subembedding",
    "hopf_census",
    "k33_class",
    "radon_kind",
    "nontrivial_embedding",
)


@dataclass(frozen=True)
class Claim:
    kind: str
    value: object = None
    # for contains_subembedding: edges / vertices deleted to reach the sub-embedding
    delete_edges: Tuple[Tuple[str, str], ...] = ()
    delete_vertices: Tuple[str, ...] = ()

    def __post_init__(self):
        if self.kind not in CLAIM_KINDS:
            raise ValueError(f"unknown claim kind {self.kind!r}")

    def describe(self) -> str:
        if self.kind == "contains_subembedding":
            parts = [f"contains {self.value}"]
            if self.delete_vertices:
                parts.append("minus vertices " + ",".join(self.delete_vertices))
            if self.delete_edges:
                parts.append("minus edges " + ",".join(f"{u}{v}" for u, v in self.delete_edges))
            return " ".join(parts)
        if self.value is None:
            return self.kind
        return f"{self.kind} = {self.value}"


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    embedding: PLEmbedding
    claims: Tuple[Claim, ...]
    notes: str = ""
    # vertex order used by linear-classifier claims
    point_order: Tuple[str, ...] = ()


@dataclass(frozen=True)
class ClaimResult:
    claim: Claim
    passed: bool
    witness: object = None

    def to_json(self):
        return {"claim": self.claim.describe(), "kind": self.claim.kind,
                "passed": self.passed, "witness": self.witness}


@dataclass(frozen=True)
class VerificationReport:
    name: str
    results: Tuple[ClaimResult, ...]

    @property
    def all_passed(self) -> bool:
        return all(r.passed for r in self.results)

    def to_json(self):
        return {"name": self.name, "all_passed": self.all_passed,
                "claims": [r.to_json() for r in self.results]}


# -- census -----------------------------------------------------------------

def cycle_knot_census(e: PLEmbedding, seed: int = VERIFY_SEED) -> List[Tuple[Tuple, KnotClass]]:
    """Knot class of every cycle; cycles with fewer than six sticks are unknots."""
    rng = np.random.default_rng(seed)
    out = []
    for c in enumerate_cycles(e.graph):
        poly = realize_cycle(e, c)
        if len(poly) < MIN_KNOT_STICKS:
            out.append((c.vertices, UNKNOT))
        else:
            out.append((c.vertices, classify_polygon(poly, rng)))
    return out


def same_embedding(a: PLEmbedding, b: PLEmbedding) -> bool:
    """Equal as point sets of routes, ignoring labels and route direction."""
    def routes(e):
        out = set()
        for r in e.routes:
            pts = tuple(e.positions[x] for x in r)
            out.add(min(pts, pts[::-1]))
        return out

    def verts(e):
        return sorted(e.positions[v] for v in e.graph.vertices)

    return routes(a) == routes(b) and verts(a) == verts(b)


def _points(entry: CatalogEntry):
    order = entry.point_order or entry.embedding.graph.vertices
    return [entry.embedding.positions[v] for v in order]


def _fmt_cycle(vs):
    return list(map(str, vs))


def check_claim(entry: CatalogEntry, claim: Claim, lookup: Callable[[str], CatalogEntry],
                census_cache: Dict) -> ClaimResult:
    e = entry.embedding
    k = claim.kind

    def census():
        if "census" not in census_cache:
            census_cache["census"] = cycle_knot_census(e)
        return census_cache["census"]

    if k == "valid":
        res = validate(e)
        return ClaimResult(claim, res == VALID, None if res == VALID else repr(res))
    if k == "stick_count":
        return ClaimResult(claim, e.stick_count == claim.value, e.stick_count)
    if k == "all_cycles_unknotted":
        bad = [(vs, kc) for vs, kc in census() if not kc.is_unknot]
        if bad:
            return ClaimResult(claim, False, {"knotted_cycle": _fmt_cycle(bad[0][0]), "class": str(bad[0][1])})
        return ClaimResult(claim, True, {"cycles": len(census())})
    if k == "has_knotted_cycle":
        c = cycle_from_vertices(e, claim.value)
        kc = classify_polygon(realize_cycle(e, c), np.random.default_rng(VERIFY_SEED))
        return ClaimResult(claim, not kc.is_unknot, str(kc))
    if k == "knotted_cycle_count":
        knotted = [_fmt_cycle(vs) for vs, kc in census() if not kc.is_unknot]
        return ClaimResult(claim, len(knotted) == claim.value, knotted)
    if k == "irreducible":
        try:
            red, log = reduce_with_log(e)
        except ReductionDegenerate as exc:
            return ClaimResult(claim, False, f"degenerate: {exc}")
        if log:
            return ClaimResult(claim, False, {"reducible_bend": str(log[0].bend)})
        return ClaimResult(claim, True, {"bends": len(e.bends())})
    if k == "contains_subembedding":
        sub = e
        for v in claim.delete_vertices:
            sub = sub.delete_vertex(v)
        for u, v in claim.delete_edges:
            sub = sub.delete_edge(u, v)
        target = lookup(claim.value).embedding
        return ClaimResult(claim, same_embedding(sub, target), {"sticks": sub.stick_count})
    if k == "nontrivial_embedding":
        # count of complement-group homomorphisms into S_n; a trivial
        # embedding gives |S_n| ** cycle_rank
        group = permutation_group(int(str(claim.value).lstrip("S")))
        cnt = representation_count(e, group, np.random.default_rng(VERIFY_SEED))
        free = group.order ** cycle_rank(e)
        return ClaimResult(claim, cnt != free, {"count": cnt, "trivial_count": free})
    try:
        if k == "hopf_census":
            hc = hopf_census_k6(_points(entry))
            return ClaimResult(claim, hc.count == claim.value, hc.count)
        if k == "k33_class":
            cls = classify_linear_k33(_points(entry), np.random.default_rng(VERIFY_SEED))
            return ClaimResult(claim, cls.kind == claim.value, cls.to_json())
        if k == "radon_kind":
            part = classify_k5(_points(entry))
            return ClaimResult(claim, part.kind == claim.value, part.to_json())
    except (DegenerateInputError, DegenerateSampleError) as exc:
        return ClaimResult(claim, False, f"degenerate: {exc}")
    raise AssertionError(k)


def verify(entry: CatalogEntry, lookup: Optional[Callable[[str], CatalogEntry]] = None) -> VerificationReport:
    if lookup is None:
        from stickgraph.catalog.entries import builtin as lookup
    cache: Dict = {}
    results = tuple(check_claim(entry, c, lookup, cache) for c in entry.claims)
    return VerificationReport(entry.name, results)
