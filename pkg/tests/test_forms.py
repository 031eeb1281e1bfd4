import pytest

from burniat.affine_group import g0_elements, parse_word
from burniat.baselines import ONE_FORM_COLUMNS, ONE_FORM_TABLE, TABLE1, parse_signs
from burniat.characters import trivial
from burniat.forms import (
    chi_A,
    dz_signs,
    h11_characters,
    holomorphic_trace,
    one_form_characters,
    type_vector,
    wedge2_characters,
)
from burniat.scenarios import BURNIAT_NAMES, builtin


def test_one_form_signs_of_basic_involutions():
    for k, label in enumerate(("dz1", "dz2", "dz3")):
        got = tuple(dz_signs(parse_word(w))[k] for w in ONE_FORM_COLUMNS)
        assert got == parse_signs(ONE_FORM_TABLE[label])


def test_dz_signs_multiplicative_on_g0():
    g0 = g0_elements()
    for g in g0:
        for h in g0:
            assert dz_signs(g * h) == tuple(a * b for a, b in zip(dz_signs(g), dz_signs(h)))


@pytest.mark.parametrize("name", BURNIAT_NAMES)
def test_chi_A_is_determinant(name):
    s = builtin(name)
    chars, _ = one_form_characters(s.forms)
    ca = chi_A(s.forms)
    assert ca == chars[0] * chars[1] * chars[2]
    assert str(ca)[1:-1] == TABLE1[name][2]


@pytest.mark.parametrize("name", BURNIAT_NAMES)
def test_type_and_trace_agree(name):
    s = builtin(name)
    p = type_vector(s.forms)
    h = holomorphic_trace(s.forms)
    assert p.values[0] == 3
    assert all(t == 2 * x - 3 for t, x in zip(h.values, p.values))


@pytest.mark.parametrize("name", BURNIAT_NAMES)
def test_h11_is_three_plus_twice_wedge2(name):
    s = builtin(name)
    W = wedge2_characters(s.forms)
    H = h11_characters(s.forms)
    assert W.dim == 3 and H.dim == 9
    assert H[trivial(3)] == 3 + 2 * W[trivial(3)]
