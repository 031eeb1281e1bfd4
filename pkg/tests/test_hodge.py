from fractions import Fraction
from itertools import product

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from burniat.baselines import COROLLARY, TABLE2, TABLE2_NORMALIZED
from burniat.characters import TraceVector, multiplicity, trivial
from burniat.forms import one_form_characters, type_vector
from burniat.hodge import (
    consistency_suite,
    elementary_symmetric,
    euler_X,
    hodge_X,
    hodge_Y,
    trace_H1_A,
    trace_H2_A,
    trace_H2_A_closed,
    trace_H2_var,
    trace_vector_H2var,
)
from burniat.scenarios import ALL_NAMES, BURNIAT_NAMES, builtin


@settings(max_examples=300, deadline=None)
@given(st.lists(st.integers(-3, 3), min_size=0, max_size=7), st.integers(0, 7))
def test_elementary_symmetric_against_numpy_poly(values, k):
    # np.poly gives coefficients of prod (x - v): coefficient k is (-1)^k e_k
    coeffs = np.poly(values) if values else np.array([1.0])
    expect = round((-1) ** k * coeffs[k]) if k < len(coeffs) else 0
    assert elementary_symmetric(values, k) == expect


@pytest.mark.parametrize("signs", list(product((1, -1), repeat=3)))
def test_trace_H2_A_routes(signs):
    # trace of the second exterior power of the doubled diagonal action, via numpy
    m = np.diag([float(s) for s in signs + signs])
    oracle = round((np.trace(m) ** 2 - np.trace(m @ m)) / 2)
    assert trace_H2_A(signs) == trace_H2_A_closed(signs) == oracle
    assert trace_H1_A(signs) == round(np.trace(m))


def test_case_lists():
    values = {p: trace_H2_var((1,) * p + (-1,) * (3 - p)) for p in range(4)}
    assert values == {0: -29, 1: -5, 2: 3, 3: -5}
    h2a = {p: trace_H2_A((1,) * p + (-1,) * (3 - p)) for p in range(4)}
    assert h2a == {0: 15, 1: -1, 2: -1, 3: 15}


def test_trace_H2_var_identity_needs_b2var():
    with pytest.raises(ValueError):
        trace_H2_var((1, 1, 1), identity=True)
    assert trace_H2_var((1, 1, 1), identity=True, b2_var=43) == 43


def test_invariants_of_X():
    hx = hodge_X(builtin("S16"))
    assert (hx.euler, hx.b1, hx.b2) == (COROLLARY["euler"], COROLLARY["b1"], COROLLARY["b2"])
    assert hx.var == COROLLARY["var"] and hx.fix == COROLLARY["fix"]
    assert euler_X(48) == 48 and hx.c1sq == 48


@pytest.mark.parametrize("name", BURNIAT_NAMES)
def test_fix_triple_matches_print(name):
    assert hodge_Y(builtin(name)).b2_fix_Y == TABLE2[name][3]


@pytest.mark.parametrize("name", BURNIAT_NAMES)
def test_var_triple_from_noether(name):
    # oracle independent of the trace machinery: e(Y) = 48/8 and b2(Y) = e(Y) - 2 + 4q
    h = hodge_Y(builtin(name))
    q = h.q_Y
    b2 = 6 - 2 + 4 * q
    assert sum(h.b2_var_Y) == b2 - sum(TABLE2[name][3])
    assert h.hodge_Y == (q, 4 + 2 * q, q)
    if name not in ("S1", "S2", "S3", "S4"):
        assert h.b2_var_Y == TABLE2[name][4]


@pytest.mark.parametrize("name", BURNIAT_NAMES)
def test_trace_vector_invariant_part_numpy(name):
    s = builtin(name)
    tv = trace_vector_H2var(s)
    assert np.mean(tv.values) == sum(hodge_Y(s).b2_var_Y)


@pytest.mark.parametrize("name", ALL_NAMES)
def test_consistency_suite_passes(name):
    report = consistency_suite(builtin(name))
    assert report.passed, str(report)


@pytest.mark.parametrize("name", ALL_NAMES)
def test_euler_and_c1sq_of_Y(name):
    h = hodge_Y(builtin(name))
    assert h.euler_Y == 6 and h.c1sq_Y == 6
    assert isinstance(h.euler_Y, Fraction)


@pytest.mark.parametrize("name", ALL_NAMES)
def test_chi0_independence(name):
    s = builtin(name)
    seen = {(hodge_Y(s, c).b2_var_Y, hodge_Y(s, c).h20var_chars[hodge_Y(s).chi_A]) for c in s.admissible_chi0}
    assert len(seen) == 1


def test_fault_injection_printed_s5_type():
    s = builtin("S5")
    bad = TraceVector((3, 3, 1, 1, 1, 2, 2, 2))
    report = consistency_suite(s, type_vector=bad)
    failed = {c.name for c in report.failures()}
    assert "(d) integrality" in failed and "(c) two-route invariants" in failed
    # the printed type is not the type of a representation on 1-forms
    hol = TraceVector(tuple(2 * x - 3 for x in bad.values))
    assert multiplicity(hol, trivial(3)) == Fraction(3, 4)


def test_q_matches_invariant_forms():
    for name in BURNIAT_NAMES:
        s = builtin(name)
        _, q = one_form_characters(s.forms)
        assert q == multiplicity(type_vector(s.forms).scale(2) - TraceVector((3,) * 8), trivial(3))


def test_sicilian_chain():
    s = builtin("sicilian")
    hx = hodge_X(s)
    h = hodge_Y(s)
    assert (hx.euler, hx.b2, hx.var) == (24, 34, (3, 13, 3))
    assert h.b2_var_Y == (0, 1, 0) and h.b2_fix_Y == (1, 5, 1)
    assert h.hodge_Y[1] == 6 and h.euler_Y == 6


def test_normalized_s15_w_is_used_only_in_baseline():
    assert ("S15", "W") in TABLE2_NORMALIZED
