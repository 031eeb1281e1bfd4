"""Bundle of numeric self-checks run by the ``numeric`` subcommand."""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

import numpy as np

from .series import DEFAULT_TOL, ThetaParams, level2_basis, theta_eval, theta_eval_many
from .signs import SIGN_TOL, verify_sign_table

__all__ = ["truncation_check", "odd_theta_check", "basis_symmetry_check", "run_numeric_checks"]

HALF = Fraction(1, 2)


def _random_points(rng: np.random.Generator, tau: complex, n: int) -> np.ndarray:
    return rng.random(n) + rng.random(n) * complex(tau)


def truncation_check(taus: Sequence[complex], n: int = 100, seed: int = 0, tol: float = DEFAULT_TOL) -> dict:
    """|val(N) - val(2N)| <= bound(N) for random characteristics and points."""
    rng = np.random.default_rng(seed)
    worst = 0.0
    count = 0
    per = -(-n // len(taus))
    for tau in taus:
        for a in (0, HALF):
            for b in (0, HALF):
                p = ThetaParams(a, b, complex(tau), tol)
                z = _random_points(rng, tau, -(-per // 4))
                lo = theta_eval_many(p, z)
                hi = theta_eval_many(p, z, 2 * lo.n_max)
                ratio = np.abs(lo.values - hi.values) / lo.error_bounds
                worst = max(worst, float(ratio.max()))
                count += len(z)
    return {"passed": worst <= 1.0, "samples": count, "worst_ratio": worst,
            "detail": f"{count} points, max |val(N)-val(2N)|/bound(N) = {worst:.3g}"}


def odd_theta_check(taus: Sequence[complex], tol: float = DEFAULT_TOL) -> dict:
    rows = []
    for tau in taus:
        r = theta_eval(ThetaParams(HALF, HALF, complex(tau), tol), 0j)
        rows.append((abs(r.value), r.error_bound))
    ok = all(v <= b for v, b in rows)
    worst = max(v for v, _ in rows)
    return {"passed": ok, "values": [v for v, _ in rows], "bounds": [b for _, b in rows],
            "detail": f"max |theta[1/2;1/2](0)| = {worst:.3g} within its bound: {ok}"}


def basis_symmetry_check(taus: Sequence[complex], n: int = 100, seed: int = 0, tol: float = DEFAULT_TOL) -> dict:
    """Level-2 basis is even and diagonalizes the 1/2 shift with eigenvalues (+1, -1)."""
    rng = np.random.default_rng(seed + 1)
    even = shift = 0.0
    for tau in taus:
        basis = level2_basis(tau, tol)
        z = _random_points(rng, tau, n)
        f, fb = basis.both(z)
        g, gb = basis.both(-z)
        h, hb = basis.both(z + 0.5)
        even = max(even, float(np.max(np.abs(f - g) / (fb + gb))))
        expect = f * np.array([[1.0], [-1.0]])
        shift = max(shift, float(np.max(np.abs(h - expect) / (fb + hb))))
    ok = even <= 1.0 and shift <= 1.0
    return {"passed": ok, "evenness_ratio": even, "shift_ratio": shift,
            "detail": f"evenness ratio {even:.3g}, half-shift ratio {shift:.3g} (<= 1 means within bounds)"}


def run_numeric_checks(
    taus: Sequence[complex] = (1j, 1j, 1j),
    samples: int = 100,
    tol: float = SIGN_TOL,
    seed: int = 0,
) -> dict:
    sc = verify_sign_table(taus, samples=samples, tol=tol, seed=seed)
    checks = {
        "sign_table": {
            "passed": sc.passed,
            "max_deviation": sc.max_deviation,
            "mismatches": [list(m) for m in sc.mismatches],
            "detail": f"8x7 table, max deviation {sc.max_deviation:.3g}, "
                      f"{len(sc.mismatches)} mismatches, tol {tol:g}",
        },
        "truncation": truncation_check(taus, samples, seed),
        "odd_theta": odd_theta_check(taus),
        "basis_symmetry": basis_symmetry_check(taus, samples, seed),
    }
    return {
        "taus": [[t.real, t.imag] for t in map(complex, taus)],
        "samples": samples,
        "seed": seed,
        "passed": all(c["passed"] for c in checks.values()),
        "checks": checks,
    }
