from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from scipy.linalg import hadamard

from burniat.characters import (
    Character,
    CharMultiset,
    NonRepresentation,
    TraceVector,
    all_characters,
    decompose_trace,
    multiplicity,
    parse_multiset_expr,
    trace_of_multiset,
    trivial,
)


@st.composite
def multisets(draw):
    rank = draw(st.integers(1, 4))
    chars = all_characters(rank)
    counts = draw(st.lists(st.integers(0, 6), min_size=len(chars), max_size=len(chars)))
    return CharMultiset(dict(zip(chars, counts)), rank)


@settings(max_examples=1000, deadline=None)
@given(multisets())
def test_decompose_trace_round_trip(m):
    assert decompose_trace(trace_of_multiset(m)) == m


@settings(max_examples=200, deadline=None)
@given(multisets())
def test_multiplicities_match_hadamard_oracle(m):
    t = np.array(trace_of_multiset(m).values)
    n = len(t)
    # character values on canonical elements for each character, independent of the library
    chars = all_characters(m.rank)
    table = np.array([c.values() for c in chars])
    assert abs(np.linalg.det(table)) > 0
    mult = table @ t / n
    assert np.allclose(mult, [m[c] for c in chars])
    # the character table of (Z/2)^r is a Hadamard matrix up to row/column order
    h = hadamard(n)
    assert sorted(map(tuple, np.abs(table @ table.T))) == sorted(map(tuple, np.abs(h @ h.T)))


@pytest.mark.parametrize("rank", [1, 2, 3, 4])
def test_orthogonality(rank):
    chars = all_characters(rank)
    n = 1 << rank
    for a in chars:
        for b in chars:
            s = sum(x * y for x, y in zip(a.values(), b.values()))
            assert s == (n if a == b else 0)


def test_character_parse_and_product():
    a, b = Character.parse("(+-+)"), Character.parse("(--+)")
    assert str(a * b) == "(-++)"
    assert (a * a).is_trivial()
    assert trivial(3).values() == (1,) * 8
    with pytest.raises(ValueError):
        Character.parse("(+x+)")


def test_non_representation_reports_fractions():
    with pytest.raises(NonRepresentation) as exc:
        decompose_trace(TraceVector((3, 1, 1, 1, 1, 1, 1, 2)))
    assert any(m.denominator != 1 for m in exc.value.multiplicities.values())
    assert multiplicity(TraceVector((1, 0)), trivial(1)) == Fraction(1, 2)


def test_trace_vector_rejects_bad_length():
    with pytest.raises(ValueError):
        TraceVector((1, 2, 3))


def test_table_notation_parser():
    m = parse_multiset_expr("(+-+)(+--) + 1", 3)
    assert m.dim == 3 and m[trivial(3)] == 1
    assert parse_multiset_expr("2·(---) + 1", 3) == parse_multiset_expr("2(---) + 1", 3)
    assert parse_multiset_expr("3·1", 3).dim == 3
    with pytest.raises(ValueError):
        parse_multiset_expr("2·+-+) + 1", 3)


def test_display_forms():
    t = TraceVector((43, -5, -5, 3, -5, 3, 3, 3))
    assert str(t) == "(43|-5 -5 3|-5 3 3|3)"
    m = CharMultiset([Character.parse("(+-+)"), trivial(3), Character.parse("(+--)")], 3)
    assert str(m) == "(+-+)(+--) + 1"


def test_twist_and_remove():
    regular = CharMultiset(all_characters(2), 2)
    chi = Character.parse("(-+)")
    assert regular.twist(chi) == regular
    r = regular.remove(chi)
    assert r.dim == 3 and r[chi] == 0
    with pytest.raises(ValueError):
        r.remove(chi)
