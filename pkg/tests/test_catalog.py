import json
from fractions import Fraction

import pytest

from stickgraph.catalog import (
    CatalogEntry,
    Claim,
    FormatError,
    builtin,
    builtin_names,
    cycle_knot_census,
    dumps,
    load,
    loads,
    save,
    verify,
)
from stickgraph.catalog.io import parse_number
from stickgraph.graph import reduce

REQUIRED = ["tetrahedron_k4", "huh_oh_theta_8", "k4_9stick", "k5_13stick", "k33_mobius_linear",
            "k33_nonmobius_knotless", "k5_linear_type_a", "k5_linear_type_b", "k6_trefoil_sample"]


def test_required_entries_present():
    assert set(REQUIRED) <= set(builtin_names())
    with pytest.raises(KeyError):
        builtin("no_such_entry")


@pytest.mark.parametrize("name", REQUIRED)
def test_every_entry_verifies(name):
    rep = verify(builtin(name))
    assert rep.all_passed, rep.to_json()
    assert len(rep.results) == len(builtin(name).claims)
    assert builtin(name).embedding.mode == "exact"


@pytest.mark.parametrize("name", REQUIRED)
def test_round_trip(name, tmp_path):
    e = builtin(name).embedding
    path = tmp_path / f"{name}.json"
    save(e, path)
    back = load(path)
    assert back == e and back.name == e.name


def test_number_parsing_is_exact():
    assert parse_number("3/2") == Fraction(3, 2)
    assert parse_number("0.1") == Fraction(1, 10)
    assert parse_number(4) == 4
    assert parse_number("0.1", exact=False) == 0.1
    with pytest.raises(FormatError):
        parse_number(True)
    with pytest.raises(FormatError):
        parse_number("x/2")
    e = loads('{"vertices": {"a": [0.1, 0, 0], "b": [1, "1/3", 0]}, "edges": [["a", "b"]]}')
    assert e.positions["a"][0] == Fraction(1, 10) and e.positions["b"][1] == Fraction(1, 3)


@pytest.mark.parametrize("text", [
    "{not json",
    '{"vertices": {"a": [0, 0, 0]}, "edges": [["a", "b"]]}',
    '{"vertices": {"a": [0, 0, 0], "b": [1, 0, 0]}, "edges": [["a", "b"], ["b", "a"]]}',
    '{"vertices": {"a": [0, 0]}, "edges": []}',
    '{"edges": []}',
])
def test_malformed_inputs(text):
    with pytest.raises(FormatError):
        loads(text)


def test_float_mode_round_trip():
    text = '{"mode": "float", "vertices": {"a": [0.1, 0, 0], "b": [1, 0.5, 0]}, "edges": [["a", "b"]]}'
    e = loads(text)
    assert e.mode == "float" and loads(dumps(e)) == e


def test_censuses():
    assert [kc.name for _, kc in cycle_knot_census(builtin("tetrahedron_k4").embedding)] == ["unknot"] * 7
    k4 = cycle_knot_census(builtin("k4_9stick").embedding)
    assert len(k4) == 7 and all(kc.is_unknot for _, kc in k4)
    k5 = cycle_knot_census(builtin("k5_13stick").embedding)
    assert len(k5) == 37 and all(kc.is_unknot for _, kc in k5)
    k6 = cycle_knot_census(builtin("k6_trefoil_sample").embedding)
    hexes = [(vs, kc) for vs, kc in k6 if len(vs) == 6]
    assert len(hexes) == 60 and sum(not kc.is_unknot for _, kc in hexes) == 1


def test_subembedding_census_matches_theta():
    sub = builtin("k4_9stick").embedding.delete_edge("v3", "v4")
    theta = builtin("huh_oh_theta_8").embedding
    assert [kc for _, kc in cycle_knot_census(sub)] == [kc for _, kc in cycle_knot_census(theta)]


def test_reduce_keeps_stick_counts():
    for name in ("k4_9stick", "k5_13stick", "huh_oh_theta_8"):
        e = builtin(name).embedding
        assert reduce(e).stick_count == e.stick_count


def test_failing_claims_report_witnesses():
    e = builtin("k6_trefoil_sample").embedding
    entry = CatalogEntry("bad", e, (Claim("all_cycles_unknotted"), Claim("stick_count", 99),
                                    Claim("hopf_census", 1)))
    rep = verify(entry)
    assert not rep.all_passed
    assert [r.passed for r in rep.results] == [False, False, False]
    assert "knotted_cycle" in rep.results[0].witness
    assert json.dumps(rep.to_json())
    with pytest.raises(ValueError):
        Claim("paneled")
