"""Floating point theta series and numerical checks of the symbolic model."""

from ._kernels import backend
from .fixed_points import count_fixed_points, element_fixed_points
from .series import EvalResult, Level2Basis, ThetaParams, level2_basis, theta_eval, theta_eval_many
from .signs import SignCheck, verify_group_table, verify_sign_table

__all__ = [
    "backend",
    "ThetaParams",
    "EvalResult",
    "Level2Basis",
    "level2_basis",
    "theta_eval",
    "theta_eval_many",
    "SignCheck",
    "verify_sign_table",
    "verify_group_table",
    "count_fixed_points",
    "element_fixed_points",
]
