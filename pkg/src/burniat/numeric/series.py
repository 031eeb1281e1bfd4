"""Theta functions with characteristics, truncated with an analytic tail bound.

theta[a;b](z, tau) = sum_n exp(pi i (n+a)^2 tau + 2 pi i (n+a)(z+b)).

With y = Im tau, w = Im z and m = n + a, completing the square gives
|term| = exp(pi w^2 / y) * exp(-pi y (m + w/y)^2), so each one-sided tail is
dominated by a geometric series.  The reported error bound is that tail bound
plus a floating point allowance proportional to the sum of |term|.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

import numpy as np

from ._kernels import theta_sum

__all__ = [
    "ThetaParams",
    "EvalResult",
    "BatchResult",
    "tail_bound",
    "choose_order",
    "theta_eval",
    "theta_eval_many",
    "Level2Basis",
    "level2_basis",
    "DEFAULT_TOL",
]

DEFAULT_TOL = 1e-12
_EPS = np.finfo(float).eps
Real = Union[float, Fraction, int]


@dataclass(frozen=True)
class ThetaParams:
    a: Real
    b: Real
    tau: complex
    truncation_tol: float = DEFAULT_TOL

    def __post_init__(self) -> None:
        if complex(self.tau).imag <= 0:
            raise ValueError(f"Im(tau) must be positive, got tau = {self.tau}")
        if not self.truncation_tol > 0:
            raise ValueError(f"truncation_tol must be positive, got {self.truncation_tol}")


@dataclass(frozen=True)
class EvalResult:
    value: complex
    error_bound: float
    n_max: int
    tail: float


@dataclass(frozen=True)
class BatchResult:
    values: np.ndarray
    error_bounds: np.ndarray
    n_max: int
    tails: np.ndarray

    def __getitem__(self, k: int) -> EvalResult:
        return EvalResult(complex(self.values[k]), float(self.error_bounds[k]), self.n_max, float(self.tails[k]))

    def __len__(self) -> int:
        return len(self.values)


def _one_side(u: np.ndarray, y: float, log_pref: np.ndarray) -> np.ndarray:
    # sum_{k>=0} exp(-pi y (u+k)^2) <= exp(-pi y u^2) / (1 - exp(-2 pi y u)) for u > 0
    with np.errstate(over="ignore", divide="ignore", invalid="ignore"):
        out = np.exp(log_pref - math.pi * y * u * u) / -np.expm1(-2.0 * math.pi * y * u)
    return np.where(u > 0, out, np.inf)


def tail_bound(a: Real, tau: complex, z_imag, n_max: int) -> np.ndarray:
    """Bound on |sum over |n| > n_max| at points with imaginary part ``z_imag``."""
    y = complex(tau).imag
    w = np.asarray(z_imag, dtype=float)
    c = w / y
    log_pref = math.pi * w * w / y
    a = float(a)
    up = (n_max + 1) + a + c
    down = (n_max + 1) - a - c
    return _one_side(up, y, log_pref) + _one_side(down, y, log_pref)


def choose_order(a: Real, tau: complex, z_imag, tol: float, n_min: int = 1, n_cap: int = 10_000) -> int:
    """Smallest n_max >= n_min with tail_bound <= tol at every given point."""
    n = n_min
    while True:
        if np.all(tail_bound(a, tau, z_imag, n) <= tol):
            return n
        n = n + 1 if n < 64 else 2 * n
        if n > n_cap:
            raise ValueError(f"truncation order exceeds {n_cap}; tau = {tau} is too close to the real axis")


def theta_eval_many(p: ThetaParams, z, n_max: int | None = None) -> BatchResult:
    zs = np.atleast_1d(np.asarray(z, dtype=np.complex128)).ravel()
    if n_max is None:
        n_max = choose_order(p.a, p.tau, zs.imag, p.truncation_tol)
    vals, absum, weighted = theta_sum(float(p.a), float(p.b), complex(p.tau), zs, n_max)
    tails = tail_bound(p.a, p.tau, zs.imag, n_max)
    bounds = tails + _EPS * weighted + 2 * _EPS * absum
    return BatchResult(vals, bounds, n_max, tails)


def theta_eval(p: ThetaParams, z: complex, n_max: int | None = None) -> EvalResult:
    return theta_eval_many(p, np.array([z]), n_max)[0]


@dataclass(frozen=True)
class Level2Basis:
    """f_j(z) = theta[j/2; 0](2z, 2tau), j = 0, 1: a basis of sections of the square of the origin bundle."""

    tau: complex
    truncation_tol: float = DEFAULT_TOL

    def __post_init__(self) -> None:
        if complex(self.tau).imag <= 0:
            raise ValueError(f"Im(tau) must be positive, got tau = {self.tau}")

    def params(self, j: int) -> ThetaParams:
        if j not in (0, 1):
            raise ValueError(f"basis index must be 0 or 1, got {j}")
        return ThetaParams(Fraction(j, 2), 0, 2 * complex(self.tau), self.truncation_tol)

    def eval(self, j: int, z) -> BatchResult:
        return theta_eval_many(self.params(j), 2 * np.asarray(z, dtype=np.complex128))

    def both(self, z) -> tuple[np.ndarray, np.ndarray]:
        """Values (2, n) and error bounds (2, n)."""
        r0, r1 = self.eval(0, z), self.eval(1, z)
        return np.vstack([r0.values, r1.values]), np.vstack([r0.error_bounds, r1.error_bounds])

    def half_period(self, b1: int, b2: int) -> complex:
        return 0.5 * b1 + 0.5 * b2 * complex(self.tau)


def level2_basis(tau: complex, truncation_tol: float = DEFAULT_TOL) -> Level2Basis:
    return Level2Basis(complex(tau), truncation_tol)
