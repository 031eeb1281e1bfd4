"""Checkable hypotheses of the finite-dimensionality criterion, and clause routing.

Conditions (1) and (4) are theory inputs and (2) is not finitely checkable;
they are reported with a status but never computed.  Conditions (3) and (5)
and the chi_A multiplicity are decided from the Hodge pipeline.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Union

from .affine_group import parse_word
from .characters import Character, NonRepresentation, TraceVector, all_characters, decompose_trace, multiplicity
from .forms import chi_A
from .hodge import h20_var_characters, hodge_X, trace_vector_H2var
from .scenarios import Scenario

__all__ = [
    "VERIFIED",
    "FAILS",
    "ASSUMED",
    "OUT_OF_SCOPE",
    "ConditionResult",
    "CheckReport",
    "check_condition3",
    "check_condition5",
    "check_multiplicity_chiA",
    "route",
    "full_report",
]

VERIFIED = "verified"
FAILS = "fails"
ASSUMED = "assumed-by-theory"
OUT_OF_SCOPE = "out-of-scope"

J_WORD = "i1 i2 i3"


@dataclass(frozen=True)
class ConditionResult:
    status: str
    evidence: dict[str, Any] = field(default_factory=dict)


def check_condition3(source: Union[Scenario, TraceVector]) -> ConditionResult:
    """Every character is a product of two characters occurring in H^2_var."""
    tv = source if isinstance(source, TraceVector) else trace_vector_H2var(source)
    m = decompose_trace(tv)
    present = [c for c in all_characters(tv.rank) if m[c] > 0]
    witnesses: dict[str, list[str] | None] = {}
    for psi in all_characters(tv.rank):
        pair = next(((a, b) for a in present for b in present if a * b == psi), None)
        witnesses[str(psi)] = [str(pair[0]), str(pair[1])] if pair else None
    missing = [k for k, v in witnesses.items() if v is None]
    ev = {
        "multiplicities": {str(c): m[c] for c in all_characters(tv.rank)},
        "witnesses": witnesses,
    }
    if missing:
        ev["missing"] = missing
    return ConditionResult(FAILS if missing else VERIFIED, ev)


def check_condition5(scenario: Scenario) -> ConditionResult:
    """H^2_var nonzero and chi_A absent from H^{2,0}_var for every admissible chi0."""
    ca = chi_A(scenario.forms)
    b2_var = hodge_X(scenario).b2_var
    mults = {str(c0): h20_var_characters(scenario, c0)[ca] for c0 in scenario.admissible_chi0}
    ok = b2_var > 0 and all(v == 0 for v in mults.values())
    return ConditionResult(VERIFIED if ok else FAILS, {"b2_var": b2_var, "chi_A": str(ca), "mult_chiA_h20var": mults})


def check_multiplicity_chiA(source: Union[Scenario, TraceVector], chi: Character | None = None) -> tuple[Fraction, str]:
    if isinstance(source, TraceVector):
        if chi is None:
            raise ValueError("a bare trace vector needs the character chi")
        tv = source
    else:
        tv = trace_vector_H2var(source)
        chi = chi_A(source.forms) if chi is None else chi
    m = multiplicity(tv, chi)
    if m.denominator != 1:
        raise NonRepresentation(f"multiplicity of {chi} in {tv} is {m}", {chi: m})
    return m, VERIFIED if m > 0 else FAILS


def route(scenario: Scenario) -> str:
    if scenario.opaque:
        return "sicilian"
    if scenario.elliptic and len(scenario.elliptic) == 3 and parse_word(J_WORD) in scenario.group:
        return "part1"
    return "part2"


@dataclass(frozen=True)
class CheckReport:
    scenario: str
    conditions: dict[str, ConditionResult]
    mult_chiA: Fraction
    mult_status: str
    route: str
    motive_is_hY: bool
    evidence: dict[str, Any]

    def to_json_obj(self) -> dict[str, Any]:
        m = self.mult_chiA
        return {
            "schema": "1",
            "scenario": self.scenario,
            **{k: v.status for k, v in self.conditions.items()},
            "mult_chiA": int(m) if m.denominator == 1 else str(m),
            "route": self.route,
            "evidence": {
                **{k: v.evidence for k, v in self.conditions.items() if v.evidence},
                **self.evidence,
            },
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj(), indent=2, sort_keys=False, ensure_ascii=False)


def full_report(scenario: Scenario) -> CheckReport:
    c3 = check_condition3(scenario)
    c5 = check_condition5(scenario)
    mult, mstat = check_multiplicity_chiA(scenario)
    ca = chi_A(scenario.forms)
    r = route(scenario)
    conditions = {
        "condition1": ConditionResult(ASSUMED, {"note": "B(M) holds for abelian varieties"}),
        "condition2": ConditionResult(OUT_OF_SCOPE, {"note": "invariant sections separating orbits is not checked"}),
        "condition3": c3,
        "condition4": ConditionResult(ASSUMED, {"note": "motives of abelian varieties are finite-dimensional"}),
        "condition5": c5,
    }
    evidence: dict[str, Any] = {
        "chi_A": str(ca),
        "trace_H2var": list(trace_vector_H2var(scenario).values),
        "j_in_G": r == "part1",
        "motive": "h(Y)" if ca.is_trivial() else f"(X, pi_chi_A) with chi_A = {ca}",
    }
    return CheckReport(scenario.name, conditions, mult, mstat, r, ca.is_trivial(), evidence)
