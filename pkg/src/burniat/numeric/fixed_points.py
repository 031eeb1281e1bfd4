"""Fixed points of affine maps of C / (Z + tau Z) located by residual minimization."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy.optimize import minimize

from ..affine_group import FactorAction, GroupElement

__all__ = ["lattice_distance", "count_fixed_points", "element_fixed_points", "FixedPointCount"]


def lattice_distance(u: complex, tau: complex) -> float:
    """Distance from u to the lattice Z + tau Z (exact nearest point among the reduced neighbours)."""
    y = tau.imag
    n2 = np.round(u.imag / y)
    r = u - n2 * tau
    n1 = np.round(r.real)
    r = r - n1
    best = abs(r)
    for d1 in (-1, 0, 1):
        for d2 in (-1, 0, 1):
            best = min(best, abs(r - d1 - d2 * tau))
    return float(best)


def _reduce(z: complex, tau: complex) -> complex:
    n2 = np.floor(z.imag / tau.imag)
    z = z - n2 * tau
    return complex(z - np.floor(z.real))


@dataclass(frozen=True)
class FixedPointCount:
    count: int | None  # None: a whole curve is fixed
    min_residual: float
    points: tuple[complex, ...]


def count_fixed_points(
    action: FactorAction, tau: complex, grid: int = 12, tol: float = 1e-10
) -> FixedPointCount:
    tau = complex(tau)
    c = 0.5 * action.shift.b1 + 0.5 * action.shift.b2 * tau

    def residual(x: np.ndarray) -> float:
        z = x[0] + x[1] * tau
        return lattice_distance(action.sign * z + c - z, tau) ** 2

    if action.is_identity():
        return FixedPointCount(None, 0.0, ())
    found: list[complex] = []
    best = np.inf
    for i in range(grid):
        for j in range(grid):
            x0 = np.array([(i + 0.5) / grid, (j + 0.5) / grid])
            res = minimize(residual, x0, method="Nelder-Mead", options={"xatol": 1e-14, "fatol": 1e-30})
            r = np.sqrt(res.fun)
            best = min(best, r)
            if r < tol:
                z = _reduce(res.x[0] + res.x[1] * tau, tau)
                if all(lattice_distance(z - p, tau) > 1e-6 for p in found):
                    found.append(z)
    return FixedPointCount(len(found), float(best), tuple(found))


def element_fixed_points(g: GroupElement, taus) -> int | None:
    """Number of isolated fixed points on the product, 0 if free, None if positive dimensional."""
    total = 1
    curve = False
    for action, tau in zip(g.factors, taus):
        fc = count_fixed_points(action, tau)
        if fc.count is None:
            curve = True
            continue
        total *= fc.count
    if total == 0:
        return 0
    return None if curve else total
