"""Embedding interchange format.

``{"name": ..., "vertices": {label: [x, y, z]}, "edges": [[label, ...], ...]}``
where every coordinate is an integer, a decimal, or a ``"p/q"`` string, and
the interior labels of an edge are its bends. Exact embeddings load as
rationals; ``"mode": "float"`` keeps decimals as doubles.
"""
from __future__ import annotations

import json
from fractions import Fraction
from pathlib import Path

from stickgraph.graph import PLEmbedding


class FormatError(ValueError):
    pass


def parse_number(x, exact: bool = True):
    if isinstance(x, bool):
        raise FormatError(f"not a number: {x!r}")
    if isinstance(x, (int, Fraction)) and not exact:
        return float(x)
    if isinstance(x, int):
        return x
    if isinstance(x, Fraction):
        return x.numerator if x.denominator == 1 else x
    if isinstance(x, float):
        return Fraction(repr(x)) if exact else x
    if isinstance(x, str):
        try:
            f = Fraction(x.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise FormatError(f"bad number {x!r}") from exc
        if not exact:
            return float(f)
        return f.numerator if f.denominator == 1 else f
    raise FormatError(f"not a number: {x!r}")


def format_number(x):
    if isinstance(x, float):
        return x
    f = Fraction(x)
    return f.numerator if f.denominator == 1 else f"{f.numerator}/{f.denominator}"


def embedding_to_json(e: PLEmbedding) -> dict:
    # graph vertices first, in graph order, so loading restores that order
    labels = list(e.graph.vertices) + [k for k in e.positions if k not in set(e.graph.vertices)]
    out = {
        "name": e.name,
        "vertices": {str(k): [format_number(e.positions[k][i]) for i in range(3)] for k in labels},
        "edges": [[str(x) for x in r] for r in e.routes],
    }
    if e.mode == "float":
        out["mode"] = "float"
    return out


def embedding_from_json(obj) -> PLEmbedding:
    if not isinstance(obj, dict) or "vertices" not in obj or "edges" not in obj:
        raise FormatError("expected an object with 'vertices' and 'edges'")
    exact = obj.get("mode", "exact") != "float"
    verts = obj["vertices"]
    if not isinstance(verts, dict):
        raise FormatError("'vertices' must map labels to points")
    pos = {}
    for k, p in verts.items():
        if not isinstance(p, list) or len(p) != 3:
            raise FormatError(f"point {k!r} must have three coordinates")
        pos[k] = tuple(parse_number(c, exact) for c in p)
    edges = obj["edges"]
    if not isinstance(edges, list) or not all(isinstance(r, list) for r in edges):
        raise FormatError("'edges' must be a list of label lists")
    for r in edges:
        for lab in r:
            if lab not in pos:
                raise FormatError(f"edge references unknown label {lab!r}")
    try:
        return PLEmbedding(pos, edges, name=obj.get("name"))
    except ValueError as exc:
        raise FormatError(str(exc)) from exc


def loads(text: str) -> PLEmbedding:
    try:
        obj = json.loads(text, parse_float=str)  # keep decimals exact
    except json.JSONDecodeError as exc:
        raise FormatError(f"malformed JSON: {exc}") from exc
    return embedding_from_json(obj)


def dumps(e: PLEmbedding) -> str:
    return json.dumps(embedding_to_json(e), indent=2)


def load(path) -> PLEmbedding:
    return loads(Path(path).read_text())


def save(e: PLEmbedding, path) -> None:
    Path(path).write_text(dumps(e) + "\n")
