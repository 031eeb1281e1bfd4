import os
import subprocess
import sys
from fractions import Fraction

import mpmath
import numpy as np
import pytest

from burniat.affine_group import FLIP, T_FLIP, FactorAction, HalfPeriod, parse_word
from burniat.numeric import (
    ThetaParams,
    count_fixed_points,
    element_fixed_points,
    level2_basis,
    theta_eval,
    theta_eval_many,
    verify_group_table,
    verify_sign_table,
)
from burniat.numeric._kernels import NUMBA_AVAILABLE, _theta_sum_numba, _theta_sum_numpy
from burniat.numeric.series import choose_order, tail_bound
from burniat.numeric.signs import automorphy_ratio, recover_factor_matrix
from burniat.scenarios import builtin
from burniat.theta_model import lemma_table

HALF = Fraction(1, 2)
TAUS = (1j, 0.3 + 1.2j, 2j, -0.4 + 0.8j)


def _random_inputs(n, seed=0):
    rng = np.random.default_rng(seed)
    out = []
    for _ in range(n):
        tau = complex(rng.uniform(-0.5, 0.5), rng.uniform(0.6, 2.0))
        z = complex(rng.uniform(0, 1), 0) + rng.uniform(0, 1) * tau
        out.append((rng.choice([0, 0.5]), rng.choice([0, 0.5]), tau, z))
    return out


def test_theta_against_mpmath():
    # theta[0;0](z, tau) = jtheta(3, pi z, q) with q = exp(i pi tau)
    for _, _, tau, z in _random_inputs(20, seed=3):
        r = theta_eval(ThetaParams(0, 0, tau), z)
        ref = complex(mpmath.jtheta(3, mpmath.pi * z, mpmath.exp(1j * mpmath.pi * tau)))
        assert abs(r.value - ref) <= r.error_bound + 1e-15


def test_theta_value_at_i():
    r = theta_eval(ThetaParams(0, 0, 1j), 0)
    ref = float(mpmath.jtheta(3, 0, mpmath.exp(-mpmath.pi)))
    assert abs(r.value - ref) <= r.error_bound


def test_truncation_self_consistency():
    inputs = _random_inputs(120)
    for a, b, tau, z in inputs:
        p = ThetaParams(a, b, tau)
        lo = theta_eval(p, z)
        hi = theta_eval(p, z, 2 * lo.n_max)
        assert abs(lo.value - hi.value) <= lo.error_bound


@pytest.mark.parametrize("tau", TAUS)
def test_odd_theta_vanishes(tau):
    r = theta_eval(ThetaParams(HALF, HALF, tau), 0)
    assert abs(r.value) <= r.error_bound


@pytest.mark.parametrize("tau", TAUS)
def test_squared_thetas_have_double_zeros(tau):
    for a, b in ((0, 0), (0, HALF), (HALF, 0), (HALF, HALF)):
        z0 = (0.5 - float(b)) + (0.5 - float(a)) * tau
        p = ThetaParams(a, b, tau)
        at = theta_eval(p, z0)
        assert abs(at.value) <= at.error_bound
        ratios = [abs(theta_eval(p, z0 + h).value) ** 2 / h**2 for h in (1e-3, 1e-4)]
        assert ratios[0] > 1e-6
        assert abs(ratios[0] - ratios[1]) <= 1e-2 * ratios[0]


@pytest.mark.parametrize("tau", TAUS[:3])
def test_level2_basis_even_and_t_eigenvalues(tau):
    basis = level2_basis(tau)
    rng = np.random.default_rng(7)
    z = rng.random(100) + rng.random(100) * tau
    f, fb = basis.both(z)
    g, gb = basis.both(-z)
    h, hb = basis.both(z + 0.5)
    assert np.all(np.abs(f - g) <= fb + gb)
    assert np.all(np.abs(h[0] - f[0]) <= hb[0] + fb[0])
    assert np.all(np.abs(h[1] + f[1]) <= hb[1] + fb[1])


@pytest.mark.parametrize("tau", TAUS[:3])
def test_tau_shift_is_antidiagonal(tau):
    fm = recover_factor_matrix(level2_basis(tau), FactorAction(1, HalfPeriod(0, 1)), samples=100)
    assert abs(fm.matrix[0, 0]) < 1e-9 and abs(fm.matrix[1, 1]) < 1e-9
    assert abs(abs(fm.matrix[0, 1]) - 1) < 1e-9
    assert fm.residual < 1e-9


def test_automorphy_factor_ratio():
    basis = level2_basis(0.3 + 1.2j)
    fm = recover_factor_matrix(basis, FactorAction(1, HalfPeriod(0, 1)))
    rng = np.random.default_rng(1)
    z, w, d = (rng.random(20) * 0.5 + 0.2j for _ in range(3))
    assert np.allclose(automorphy_ratio(basis, fm, z, w, d), 1, atol=1e-8)


@pytest.mark.parametrize("taus", [(1j, 1j, 1j), (0.3 + 1.2j, 1j, 2j)])
def test_sign_table_numeric(taus):
    sc = verify_sign_table(taus, samples=100, tol=1e-9)
    assert sc.passed, sc.mismatches
    assert sc.agreement().all()


def test_sign_table_fault_injection():
    table = np.array(lemma_table())
    table[4, 5] *= -1
    sc = verify_sign_table(symbolic=table)
    assert not sc.passed
    assert [(r, c) for r, c, _, _ in sc.mismatches] == [(4, 5)]


@pytest.mark.parametrize("name", ["S1", "S6", "S16"])
def test_group_generator_tables(name):
    assert verify_group_table(builtin(name).group).passed


def test_backends_agree():
    if not NUMBA_AVAILABLE:
        pytest.skip("numba not installed")
    rng = np.random.default_rng(5)
    tau = 0.2 + 1.1j
    z = rng.random(50) + rng.random(50) * tau
    a = _theta_sum_numpy(0.5, 0.0, tau, z, 9)
    b = _theta_sum_numba(0.5, 0.0, tau, z, 9)
    for x, y in zip(a, b):
        assert np.allclose(x, y, rtol=1e-14, atol=1e-15)


def test_env_flag_selects_numpy():
    code = "from burniat.numeric import backend; print(backend())"
    env = dict(os.environ, BURNIAT_USE_NUMBA="0")
    out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True, check=True)
    assert out.stdout.strip() == "numpy"


def test_tail_bound_monotone_and_order():
    tau = 1j
    bounds = [float(tail_bound(0, tau, 0.3, n)) for n in range(1, 6)]
    assert all(x > y for x, y in zip(bounds, bounds[1:]))
    n = choose_order(0, tau, [0.3], 1e-12)
    assert tail_bound(0, tau, 0.3, n) <= 1e-12


def test_param_validation():
    with pytest.raises(ValueError):
        ThetaParams(0, 0, 1.0 + 0j)
    with pytest.raises(ValueError):
        ThetaParams(0, 0, 1j, truncation_tol=0)
    with pytest.raises(ValueError):
        level2_basis(1j).params(2)


def test_batch_matches_single():
    p = ThetaParams(HALF, 0, 0.3 + 1.2j)
    z = np.array([0.1 + 0.2j, 0.4 + 0.5j])
    batch = theta_eval_many(p, z)
    for k in range(2):
        assert abs(batch[k].value - theta_eval(p, z[k], batch.n_max).value) < 1e-15


def test_fixed_point_counts():
    assert count_fixed_points(FLIP, 1j, grid=6).count == 4
    assert count_fixed_points(T_FLIP, 0.3 + 1.2j, grid=6).count == 4
    assert count_fixed_points(FactorAction(1, HalfPeriod(1, 1)), 1j, grid=4).count == 0
    assert count_fixed_points(FactorAction(), 1j).count is None


def test_element_fixed_points():
    taus = (1j, 1j, 1j)
    assert element_fixed_points(parse_word("i1 i12"), taus) == 0
    assert element_fixed_points(parse_word("i1"), taus) is None
