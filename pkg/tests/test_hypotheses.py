from fractions import Fraction

import pytest

from burniat.characters import Character, NonRepresentation, TraceVector
from burniat.hypotheses import (
    ASSUMED,
    FAILS,
    OUT_OF_SCOPE,
    VERIFIED,
    check_condition3,
    check_condition5,
    check_multiplicity_chiA,
    full_report,
    route,
)
from burniat.scenarios import ALL_NAMES, builtin

MULT = {"S1": 6, "S2": 6, "S3": 1, "S4": 1, "S11": 1, "S12": 1, "S16": 1, "sicilian": 1}


@pytest.mark.parametrize("name", ALL_NAMES)
def test_condition3_verified(name):
    assert check_condition3(builtin(name)).status == VERIFIED


@pytest.mark.parametrize("name", ALL_NAMES)
def test_condition5_and_route(name):
    s = builtin(name)
    c5 = check_condition5(s).status
    r = route(s)
    if name in ("S1", "S2"):
        assert c5 == FAILS and r == "part1"
    else:
        assert c5 == VERIFIED
        assert r == ("sicilian" if name == "sicilian" else "part2")


@pytest.mark.parametrize("name", ALL_NAMES)
def test_mult_chiA_positive_integer(name):
    m, status = check_multiplicity_chiA(builtin(name))
    assert m.denominator == 1 and m > 0 and status == VERIFIED
    assert m == MULT.get(name, 2)


def test_condition3_fails_on_trivial_only_trace():
    r = check_condition3(TraceVector((8,) * 8))
    assert r.status == FAILS and len(r.evidence["missing"]) == 7


def test_non_integral_multiplicity_raises():
    with pytest.raises(NonRepresentation):
        check_multiplicity_chiA(TraceVector((43, -5, -5, -5, -5, 3, 3, 4)), Character.parse("(++-)"))
    with pytest.raises(ValueError):
        check_multiplicity_chiA(TraceVector((1,) * 8))


def test_report_json_shape():
    obj = full_report(builtin("S6")).to_json_obj()
    assert obj["schema"] == "1"
    assert obj["condition1"] == ASSUMED and obj["condition2"] == OUT_OF_SCOPE
    assert obj["condition3"] == VERIFIED and obj["condition5"] == VERIFIED
    assert obj["mult_chiA"] == 2 and obj["route"] == "part2"
    assert obj["evidence"]["chi_A"] == "(-+-)"


def test_motive_shortcut_when_chiA_trivial():
    for name in ("S3", "S16", "sicilian"):
        assert full_report(builtin(name)).motive_is_hY
    assert not full_report(builtin("S5")).motive_is_hY
    assert isinstance(full_report(builtin("S5")).mult_chiA, Fraction)
