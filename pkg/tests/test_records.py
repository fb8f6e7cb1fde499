import json

import pytest

from mubkit.entangle import bell_even, verify_bell_family
from mubkit.mub import MubSet, mub_set, verify_mub_set
from mubkit.records import (
    RecordError,
    bell_from_record,
    bell_to_record,
    dumps,
    mub_from_record,
    mub_to_record,
    parse_record,
    verification_record,
)


@pytest.mark.parametrize("d", [1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 12])
def test_round_trip(d):
    s = mub_set(d)
    text = dumps(mub_to_record(s))
    back = parse_record(text)
    assert isinstance(back, MubSet)
    assert back.bases == s.bases
    assert verify_mub_set(back).passed
    assert dumps(mub_to_record(back)) == text


def test_record_layout():
    rec = mub_to_record(mub_set(3))
    assert rec["kind"] == "mub" and rec["dim"] == 3 and rec["order"] == 3
    assert rec["scale_sq"] == [1, 3, 3, 3]
    assert rec["bases"][1][1][1] == [0, 1]  # omega_3 in the basis (1, z3)
    assert rec["provenance"]["route"] == "field"


def test_bell_round_trip():
    f = bell_even(2)
    rec = bell_to_record(f)
    back = bell_from_record(json.loads(dumps(rec)))
    assert [s.vector for s in back.states()] == [s.vector for s in f.states()]
    assert [(s.h, s.a, s.b) for s in back.states()] == [(s.h, s.a, s.b) for s in f.states()]
    assert verify_bell_family(back).passed


def test_flipped_coefficient_fails_with_location():
    rec = mub_to_record(mub_set(5))
    rec["bases"][2][1][3][0] += 1
    s = mub_from_record(rec)
    rep = verification_record(s)
    assert not rep["passed"]
    bad = [p for p in rep["pairs"] if not p["passed"]]
    assert [0, 2] in [p["pair"] for p in bad]
    f = bad[0]["failures"][0]
    assert f["vectors"][1] == 1 or f["vectors"][0] == 1
    assert "z5" in f["inner_product"] or f["inner_product"].lstrip("-").isdigit()


@pytest.mark.parametrize(
    "mutate,msg",
    [
        (lambda r: r.pop("dim"), "missing key"),
        (lambda r: r.update(dim="3"), "wrong type"),
        (lambda r: r.update(scale_sq=[1]), "differ in length"),
        (lambda r: r["bases"][1][0].pop(), "expected 3 entries"),
        (lambda r: r["bases"][1][0].__setitem__(0, [1]), "integer coordinates"),
        (lambda r: r.update(kind="bogus"), "unknown record kind"),
        (lambda r: r.update(scale_sq=[1, 0, 3, 3]), "positive integers"),
    ],
)
def test_malformed_records(mutate, msg):
    rec = mub_to_record(mub_set(3))
    mutate(rec)
    with pytest.raises(RecordError, match=msg):
        parse_record(json.dumps(rec))


def test_invalid_json():
    with pytest.raises(RecordError):
        parse_record("{not json")
    with pytest.raises(RecordError):
        parse_record("[1, 2]")


def test_empty_basis_list_parses():
    s = parse_record('{"kind":"mub","dim":4,"order":1,"scale_sq":[],"bases":[]}')
    assert len(s) == 0
    assert verification_record(s)["passed"]
