"""Exact recomputation and audit of the finite data behind generalized Burniat surfaces.

The exact layer (group, characters, forms, theta signs, Hodge engine,
hypothesis checker) uses only integers and Fractions.  Floating point lives
in :mod:`burniat.numeric` and is used purely as a cross-check.
"""

from .affine_group import ActionGroup, FactorAction, GroupElement, HalfPeriod, generate_group, parse_word
from .characters import Character, CharMultiset, NonRepresentation, TraceVector, decompose_trace
from .hodge import consistency_suite, hodge_X, hodge_Y
from .hypotheses import full_report
from .scenarios import Scenario, ScenarioError, builtin, load_scenario, parse_scenario

__version__ = "0.1.0"

__all__ = [
    "ActionGroup",
    "FactorAction",
    "GroupElement",
    "HalfPeriod",
    "generate_group",
    "parse_word",
    "Character",
    "CharMultiset",
    "NonRepresentation",
    "TraceVector",
    "decompose_trace",
    "consistency_suite",
    "hodge_X",
    "hodge_Y",
    "full_report",
    "Scenario",
    "ScenarioError",
    "builtin",
    "load_scenario",
    "parse_scenario",
]
