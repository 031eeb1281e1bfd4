"""Numerical cross-check of the symbolic sign tables.

For an affine involution g of one elliptic factor, sections pull back as
f(g z) = phi_g(z) M_g f(z), f = (f_0, f_1).  M_g is recovered from sampled
values by a homogeneous least-squares fit that eliminates phi_g, then scaled
to an involution.  On the product the lifts are Kronecker products; they
commute, so a random combination diagonalizes all of them at once, and the
joint eigenvalue rows are matched against the symbolic rows.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import reduce
from typing import Sequence

import numpy as np
from scipy.optimize import linear_sum_assignment

from ..affine_group import ActionGroup, FactorAction, GroupElement, parse_word
from ..theta_model import BASIS, LEMMA_COLUMNS, lemma_table, worked_sign_table
from .series import DEFAULT_TOL, Level2Basis, level2_basis

__all__ = [
    "RecoveryError",
    "FactorMatrix",
    "recover_factor_matrix",
    "SignCheck",
    "verify_signs",
    "verify_sign_table",
    "verify_group_table",
    "automorphy_ratio",
]

SIGN_TOL = 1e-9
REJECT_FACTOR = 1e3


class RecoveryError(RuntimeError):
    """The sampled system stayed ill-conditioned after resampling."""


def _apply(action: FactorAction, basis: Level2Basis, z: np.ndarray) -> np.ndarray:
    return action.sign * z + basis.half_period(action.shift.b1, action.shift.b2)


def _sample(basis: Level2Basis, action: FactorAction, n: int, rng: np.random.Generator):
    """Points in the fundamental domain where both f(z) and f(gz) are well above their error bounds."""
    tau = complex(basis.tau)
    zs, w_all, v_all = [], [], []
    tries = 0
    while sum(len(z) for z in zs) < n:
        tries += 1
        if tries > 50:
            raise RecoveryError("could not draw samples away from the zero loci")
        x, y = rng.random(2 * n), rng.random(2 * n)
        z = x + y * tau
        w, wb = basis.both(z)
        v, vb = basis.both(_apply(action, basis, z))
        keep = np.all(np.abs(w) > REJECT_FACTOR * wb, axis=0) & np.all(np.abs(v) > REJECT_FACTOR * vb, axis=0)
        zs.append(z[keep])
        w_all.append(w[:, keep])
        v_all.append(v[:, keep])
    z = np.concatenate(zs)[:n]
    return z, np.hstack(w_all)[:, :n], np.hstack(v_all)[:, :n]


@dataclass(frozen=True)
class FactorMatrix:
    action: FactorAction
    matrix: np.ndarray  # real 2x2 involution in the natural gauge
    residual: float  # relative residual of the fitted relation
    imag_part: float  # size of the discarded imaginary part after normalization
    separation: float  # smallest / second smallest singular value


def _normalize(m: np.ndarray) -> tuple[np.ndarray, float]:
    c = np.trace(m @ m) / 2
    m = m / np.sqrt(c)
    flat = m.ravel()
    first = flat[np.argmax(np.abs(flat) > 0.5)]
    m = m / (first / abs(first))
    return m.real.copy(), float(np.max(np.abs(m.imag)))


def recover_factor_matrix(
    basis: Level2Basis, action: FactorAction, samples: int = 100, seed: int = 0, attempts: int = 3
) -> FactorMatrix:
    rng = np.random.default_rng(seed)
    for _ in range(attempts):
        z, w, v = _sample(basis, action, samples, rng)
        rows = np.stack([-v[1] * w[0], -v[1] * w[1], v[0] * w[0], v[0] * w[1]], axis=1)
        rows /= np.linalg.norm(rows, axis=1, keepdims=True)
        _, s, vh = np.linalg.svd(rows)
        sep = s[-1] / s[-2]
        if sep < 1e-6:
            m, imag = _normalize(vh[-1].conj().reshape(2, 2))
            resid = float(np.max(np.abs(rows @ m.ravel())))
            return FactorMatrix(action, m, resid, imag, float(sep))
    raise RecoveryError(f"ill-conditioned recovery for {action} at tau = {basis.tau}")


def automorphy_ratio(basis: Level2Basis, fm: FactorMatrix, z, w, delta) -> np.ndarray:
    """phi(z) phi(w) / (phi(z+delta) phi(w-delta)); equals 1 when phi is exp of an affine function."""

    def phi(pts):
        pts = np.asarray(pts, dtype=np.complex128)
        f, _ = basis.both(pts)
        g, _ = basis.both(_apply(fm.action, basis, pts))
        mf = fm.matrix @ f
        return np.sum(g * mf.conj(), axis=0) / np.sum(np.abs(mf) ** 2, axis=0)

    z, w, delta = (np.asarray(x, dtype=np.complex128) for x in (z, w, delta))
    return phi(z) * phi(w) / (phi(z + delta) * phi(w - delta))


@dataclass
class SignCheck:
    columns: tuple[str, ...]
    numeric: np.ndarray  # rows x columns of measured eigenvalues, after gauge pinning
    symbolic: np.ndarray
    assignment: np.ndarray  # symbolic row index for each numeric row
    gauge: np.ndarray  # sign applied per column
    max_deviation: float
    commutator: float
    involution: float
    factor_residual: float
    tol: float
    mismatches: list[tuple[int, int, float, int]] = field(default_factory=list)  # (row, col, numeric, symbolic)

    @property
    def passed(self) -> bool:
        return not self.mismatches and self.commutator <= self.tol and self.involution <= self.tol

    def agreement(self) -> np.ndarray:
        """Boolean matrix in symbolic row order."""
        ok = np.zeros(self.symbolic.shape, dtype=bool)
        for r, s in enumerate(self.assignment):
            ok[s] = np.abs(self.numeric[r] - self.symbolic[s]) <= self.tol
        return ok


def verify_signs(
    elements: Sequence[GroupElement],
    symbolic: np.ndarray,
    taus: Sequence[complex],
    samples: int = 100,
    tol: float = SIGN_TOL,
    seed: int = 0,
    truncation_tol: float = DEFAULT_TOL,
    columns: Sequence[str] | None = None,
) -> SignCheck:
    symbolic = np.asarray(symbolic, dtype=float)
    bases = [level2_basis(t, truncation_tol) for t in taus]
    cache: dict[tuple[int, FactorAction], FactorMatrix] = {}
    mats = []
    resid = 0.0
    for g in elements:
        parts = []
        for alpha, action in enumerate(g.factors):
            key = (alpha, action)
            if key not in cache:
                cache[key] = recover_factor_matrix(bases[alpha], action, samples, seed + 17 * alpha + len(cache))
            fm = cache[key]
            resid = max(resid, fm.residual, fm.imag_part)
            parts.append(fm.matrix)
        mats.append(reduce(np.kron, parts))
    n = mats[0].shape[0]
    eye = np.eye(n)
    involution = max(float(np.max(np.abs(m @ m - eye))) for m in mats)
    commutator = max(
        (float(np.max(np.abs(a @ b - b @ a))) for i, a in enumerate(mats) for b in mats[i + 1 :]), default=0.0
    )
    rng = np.random.default_rng(seed + 99991)
    combo = sum(c * m for c, m in zip(rng.normal(size=len(mats)), mats))
    _, vecs = np.linalg.eigh((combo + combo.T) / 2)
    diag = np.array([[vecs[:, r] @ m @ vecs[:, r] for m in mats] for r in range(n)])
    offdiag = max(float(np.max(np.abs(vecs.T @ m @ vecs - np.diag(np.diag(vecs.T @ m @ vecs))))) for m in mats)

    # pin the gauge: one measured row becomes the all-plus row
    signs = np.sign(np.round(diag))
    pin = int(np.argmax(np.sum(signs > 0, axis=1)))
    gauge = signs[pin].copy()
    gauge[gauge == 0] = 1
    numeric = diag * gauge
    cost = np.abs(numeric[:, None, :] - symbolic[None, :, :]).sum(axis=2)
    r_idx, c_idx = linear_sum_assignment(cost)
    assignment = np.empty(n, dtype=int)
    assignment[r_idx] = c_idx
    mismatches = []
    dev = 0.0
    for r in range(n):
        s = assignment[r]
        for k in range(symbolic.shape[1]):
            d = abs(numeric[r, k] - symbolic[s, k])
            dev = max(dev, d)
            if d > tol:
                mismatches.append((int(s), k, float(numeric[r, k]), int(symbolic[s, k])))
    return SignCheck(
        tuple(columns or (g.label for g in elements)),
        numeric,
        symbolic,
        assignment,
        gauge,
        max(dev, offdiag),
        commutator,
        involution,
        resid,
        tol,
        sorted(mismatches),
    )


def verify_sign_table(
    taus: Sequence[complex] = (1j, 1j, 1j),
    samples: int = 100,
    tol: float = SIGN_TOL,
    seed: int = 0,
    symbolic: np.ndarray | None = None,
) -> SignCheck:
    """The 8 x 7 table of the basic involutions; ``symbolic`` overrides the model table (fault injection)."""
    table = np.array(lemma_table() if symbolic is None else symbolic)
    elements = [parse_word(w) for w in LEMMA_COLUMNS]
    return verify_signs(elements, table, taus, samples, tol, seed, columns=LEMMA_COLUMNS)


def verify_group_table(
    group: ActionGroup,
    taus: Sequence[complex] = (1j, 1j, 1j),
    samples: int = 100,
    tol: float = SIGN_TOL,
    seed: int = 0,
) -> SignCheck:
    """Generator columns of a Burniat group, against theta_model's prediction."""
    table = np.array(worked_sign_table(group))
    return verify_signs(group.generators, table, taus, samples, tol, seed)


ROW_LABELS = tuple("θ" + "".join(map(str, v)) for v in BASIS)
