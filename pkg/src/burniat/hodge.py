"""Cohomology of X and Y = X/G through Lefschetz traces and residue characters.

Two independent routes feed the audit:

* the trace route starts from the +-1 eigenvalues of each element on
  holomorphic 1-forms and reaches every trace through elementary symmetric
  polynomials and the Lefschetz identity;
* the character route manipulates explicit character multisets (dz
  characters, their pairwise products, residues of theta/theta_0 * omega).

Published values never enter here.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from math import comb, prod
from typing import Sequence

from .characters import (
    Character,
    CharMultiset,
    NonRepresentation,
    TraceVector,
    decompose_trace,
    multiplicity,
    trace_of_multiset,
    trivial,
)
from .forms import chi_A, h11_characters, one_form_characters, wedge2_characters
from .scenarios import Scenario, ScenarioError

__all__ = [
    "HodgeError",
    "HodgeX",
    "HodgeSummary",
    "Check",
    "AuditReport",
    "elementary_symmetric",
    "euler_X",
    "trace_H1_A",
    "trace_H2_A",
    "trace_H2_A_closed",
    "trace_H2_var",
    "trace_vector_H2var",
    "holomorphic_eigenvalues",
    "h20_var_characters",
    "hodge_X",
    "hodge_Y",
    "consistency_suite",
]


class HodgeError(ValueError):
    """Raised when a trace is requested outside the hypotheses that make it valid."""


Triple = tuple[int, int, int]


def elementary_symmetric(values: Sequence[int], k: int) -> int:
    """e_k by brute force over k-subsets."""
    return sum(prod(c) for c in combinations(values, k))


def euler_X(divisor_selfint: int) -> int:
    """e(X) = c_2(X) = D^3 for a smooth X in |D| on an abelian threefold (also c_1^2(X))."""
    if divisor_selfint <= 0:
        raise HodgeError(f"D^3 must be positive, got {divisor_selfint}")
    return divisor_selfint


def _doubled(signs: Sequence[int]) -> list[int]:
    # eigenvalues on H^1 = H^{1,0} + H^{0,1}; all characters are real
    return list(signs) + list(signs)


def trace_H1_A(signs: Sequence[int]) -> int:
    return sum(_doubled(signs))


def trace_H2_A(signs: Sequence[int]) -> int:
    """Trace on H^2(A) = wedge^2 H^1(A)."""
    return elementary_symmetric(_doubled(signs), 2)


def trace_H2_A_closed(signs: Sequence[int]) -> int:
    t, n = sum(signs), len(signs)
    return 2 * t * t - n


def trace_H2_var(signs: Sequence[int], *, identity: bool = False, b2_var: int | None = None, free: bool = True) -> int:
    """Trace of one element on H^2_var(X).

    A fixed-point free g gives 0 = 2 - 2 Tr|H^1 + Tr|H^2(X) with
    H^2(X) = H^2(A) + H^2_var; the identity returns ``b2_var``.
    """
    if identity:
        if b2_var is None:
            raise HodgeError("the identity needs b2_var")
        return b2_var
    if not free:
        raise HodgeError("Lefschetz trace needs an element acting freely on X")
    return -2 + 2 * trace_H1_A(signs) - trace_H2_A(signs)


def holomorphic_eigenvalues(scenario: Scenario) -> tuple[tuple[int, ...], ...]:
    return scenario.forms.signs


def _eigen_from_type(p_vector: TraceVector, n: int) -> tuple[tuple[int, ...], ...]:
    return tuple((1,) * p + (-1,) * (n - p) for p in p_vector.values)


@dataclass(frozen=True)
class HodgeX:
    euler: int
    c1sq: int
    b1: int
    b2: int
    b2_fix: int
    b2_var: int
    fix: Triple
    var: Triple


def hodge_X(scenario: Scenario) -> HodgeX:
    n = scenario.forms.n_forms
    e = euler_X(scenario.divisor_selfint)
    b1 = 2 * n
    b2 = e - 2 + 2 * b1
    b2_fix = comb(2 * n, 2)
    h20_fix = comb(n, 2)
    fix = (h20_fix, b2_fix - 2 * h20_fix, h20_fix)
    h20_var = scenario.sections.dim - 1
    b2_var = b2 - b2_fix
    var = (h20_var, b2_var - 2 * h20_var, h20_var)
    return HodgeX(e, scenario.divisor_selfint, b1, b2, b2_fix, b2_var, fix, var)


def trace_vector_H2var(scenario: Scenario, type_vector: TraceVector | None = None) -> TraceVector:
    """Trace of every element on H^2_var(X), canonical order.

    ``type_vector`` replaces the scenario's eigenvalue data by a p-vector,
    which is how printed rows are pushed through the same pipeline.
    """
    hx = hodge_X(scenario)
    eig = (
        holomorphic_eigenvalues(scenario)
        if type_vector is None
        else _eigen_from_type(type_vector, scenario.forms.n_forms)
    )
    vals = [hx.b2_var]
    for k, signs in enumerate(eig[1:]):
        vals.append(trace_H2_var(signs, free=scenario.freeness[k].free_on_X))
    return TraceVector(tuple(vals))


def h20_var_characters(scenario: Scenario, chi0: Character | None = None) -> CharMultiset:
    """Residues of theta/theta_0 * dz1^dz2^dz3 carry chi(theta)*chi0*chi_A; one chi_A dies (H^0 of Omega^3_A)."""
    chi0 = scenario.default_chi0 if chi0 is None else chi0
    if not scenario.sections[chi0]:
        raise HodgeError(f"chi0 = {chi0} does not occur among the section characters {scenario.sections}")
    ca = chi_A(scenario.forms)
    return scenario.sections.twist(chi0 * ca).remove(ca)


@dataclass(frozen=True)
class HodgeSummary:
    name: str
    chi0: Character
    euler_X: int
    c1sq_X: int
    b1_X: int
    b2_X: int
    b2_fix_X: Triple
    b2_var_X: Triple
    q_Y: int
    b2_fix_Y: Triple
    b2_var_Y: Triple
    euler_Y: Fraction
    c1sq_Y: Fraction
    chi_A: Character
    trace_H2var: TraceVector
    h20var_chars: CharMultiset
    h11var_trace: TraceVector
    h11var_chars: CharMultiset
    mult_chiA: Fraction
    U: CharMultiset = field(compare=False, default=None)  # type: ignore[assignment]
    W: CharMultiset = field(compare=False, default=None)  # type: ignore[assignment]

    @property
    def b2_Y(self) -> int:
        return sum(self.b2_fix_Y) + sum(self.b2_var_Y)

    @property
    def hodge_Y(self) -> Triple:
        f, v = self.b2_fix_Y, self.b2_var_Y
        return (f[0] + v[0], f[1] + v[1], f[2] + v[2])


def hodge_Y(scenario: Scenario, chi0: Character | None = None) -> HodgeSummary:
    """Fixed and variable Hodge triples of Y; raises NonRepresentation on inconsistent input."""
    data = scenario.forms
    chi0 = scenario.default_chi0 if chi0 is None else chi0
    hx = hodge_X(scenario)
    triv = trivial(scenario.rank)
    chars, q = one_form_characters(data)
    U = CharMultiset(chars, scenario.rank)
    W = wedge2_characters(data)
    H11 = h11_characters(data)
    fix_Y = (W[triv], H11[triv], W[triv])

    tv = trace_vector_H2var(scenario)
    decompose_trace(tv)
    h20 = h20_var_characters(scenario, chi0)
    h11_trace = tv - trace_of_multiset(h20).scale(2)
    h11 = decompose_trace(h11_trace)
    var_Y = (h20[triv], h11[triv], h20[triv])
    ca = chi_A(data)
    return HodgeSummary(
        name=scenario.name,
        chi0=chi0,
        euler_X=hx.euler,
        c1sq_X=hx.c1sq,
        b1_X=hx.b1,
        b2_X=hx.b2,
        b2_fix_X=hx.fix,
        b2_var_X=hx.var,
        q_Y=q,
        b2_fix_Y=fix_Y,
        b2_var_Y=var_Y,
        euler_Y=Fraction(hx.euler, scenario.order),
        c1sq_Y=Fraction(hx.c1sq, scenario.order),
        chi_A=ca,
        trace_H2var=tv,
        h20var_chars=h20,
        h11var_trace=h11_trace,
        h11var_chars=h11,
        mult_chiA=multiplicity(tv, ca),
        U=U,
        W=W,
    )


# -- audit --------------------------------------------------------------------


@dataclass(frozen=True)
class Check:
    name: str
    passed: bool
    detail: str


@dataclass(frozen=True)
class AuditReport:
    scenario: str
    checks: tuple[Check, ...]

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def failures(self) -> list[Check]:
        return [c for c in self.checks if not c.passed]

    def __str__(self) -> str:
        lines = [f"audit {self.scenario}: {'PASS' if self.passed else 'FAIL'}"]
        lines += [f"  [{'ok' if c.passed else 'FAIL'}] {c.name}: {c.detail}" for c in self.checks]
        return "\n".join(lines)


def _trace_route(scenario: Scenario, type_vector: TraceVector | None) -> dict[str, TraceVector]:
    """Every trace vector built from eigenvalues alone."""
    n = scenario.forms.n_forms
    eig = (
        holomorphic_eigenvalues(scenario)
        if type_vector is None
        else _eigen_from_type(type_vector, n)
    )
    return {
        "H0(Omega1)": TraceVector(tuple(sum(s) for s in eig)),
        "H0(Omega2)": TraceVector(tuple(elementary_symmetric(s, 2) for s in eig)),
        "H1(A)": TraceVector(tuple(trace_H1_A(s) for s in eig)),
        "H2(A)": TraceVector(tuple(trace_H2_A(s) for s in eig)),
        "H11(A)": TraceVector(tuple(trace_H2_A(s) - 2 * elementary_symmetric(s, 2) for s in eig)),
        "H2var(X)": trace_vector_H2var(scenario, type_vector),
    }


def _integral_triv(t: TraceVector) -> Fraction:
    return multiplicity(t, trivial(t.rank))


def consistency_suite(
    scenario: Scenario,
    chi0: Character | None = None,
    type_vector: TraceVector | None = None,
) -> AuditReport:
    """Checks (a)-(f) plus chi0 independence; never raises on inconsistent data."""
    checks: list[Check] = []
    hx = hodge_X(scenario)
    order = scenario.order

    # (d) every trace vector decomposes
    traces = _trace_route(scenario, type_vector)
    decomposed: dict[str, CharMultiset] = {}
    bad = []
    for label, tv in traces.items():
        try:
            decomposed[label] = decompose_trace(tv)
        except NonRepresentation as exc:
            nonint = {str(c): str(m) for c, m in exc.multiplicities.items() if m.denominator != 1 or m < 0}
            bad.append(f"{label} {tv}: {nonint}")
    checks.append(Check("(d) integrality", not bad, "; ".join(bad) if bad else f"{len(traces)} trace vectors decompose"))

    try:
        summary = hodge_Y(scenario, chi0)
    except (NonRepresentation, HodgeError, ScenarioError) as exc:
        checks.append(Check("pipeline", False, str(exc)))
        return AuditReport(scenario.name, tuple(checks))

    # (a) Euler characteristic is multiplicative
    ok = hx.euler % order == 0 and summary.euler_Y * order == hx.euler
    checks.append(Check("(a) e(Y)|G| = e(X)", ok, f"{summary.euler_Y} * {order} vs {hx.euler}"))

    # (b) Noether: 1 - q + pg = (c1^2 + e)/12, and e(Y) = 2 - 4q + b2(Y); pg = q when chi(O_Y) = 1
    q = summary.q_Y
    pg = summary.hodge_Y[0]
    chi = (summary.c1sq_Y + summary.euler_Y) / 12
    ok = 1 - q + pg == chi and summary.euler_Y == 2 - 4 * q + summary.b2_Y
    checks.append(
        Check(
            "(b) Noether and b2(Y)",
            ok,
            f"q={q}, pg={pg}, chi(O_Y)={chi}, b2(Y)={summary.hodge_Y}, e(Y)={summary.euler_Y}",
        )
    )

    # (c) invariant dimensions by two routes
    var_by_trace = _integral_triv(traces["H2var(X)"])
    var_by_chars = sum(summary.b2_var_Y)
    fix_by_trace = _integral_triv(traces["H2(A)"])
    fix_by_chars = sum(summary.b2_fix_Y)
    u_by_trace = _integral_triv(traces["H0(Omega1)"])
    w_by_trace = _integral_triv(traces["H0(Omega2)"])
    # total H^2(X)^G from the Lefschetz numbers of X directly
    total = Fraction(hx.b2 + sum(2 * traces["H1(A)"].values[k] - 2 for k in range(1, order)), order)
    pairs = [
        ("H2var^G", var_by_trace, var_by_chars),
        ("H2fix^G", fix_by_trace, fix_by_chars),
        ("q", u_by_trace, summary.q_Y),
        ("h20fix^G", w_by_trace, summary.b2_fix_Y[0]),
        ("H2(X)^G", total, var_by_chars + fix_by_chars),
    ]
    wrong = [f"{n}: trace {a} vs characters {b}" for n, a, b in pairs if a != b]
    checks.append(
        Check(
            "(c) two-route invariants",
            not wrong,
            "; ".join(wrong) if wrong else ", ".join(f"{n}={b}" for n, _, b in pairs),
        )
    )

    # (e) c1^2(Y)
    ok = summary.c1sq_Y.denominator == 1 and summary.c1sq_Y > 0
    checks.append(Check("(e) c1^2(Y) = D^3/|G|", ok, f"{hx.c1sq}/{order} = {summary.c1sq_Y}"))

    # (f) fix + var = X totals
    sums = tuple(a + b for a, b in zip(summary.b2_fix_X, summary.b2_var_X))
    ok = sum(sums) == hx.b2 and summary.b2_var_X[0] == summary.h20var_chars.dim
    checks.append(Check("(f) fix + var = X", ok, f"{summary.b2_fix_X} + {summary.b2_var_X} = {sums}, b2={hx.b2}"))

    # chi0 independence
    seen = {}
    for c0 in scenario.admissible_chi0:
        s = hodge_Y(scenario, c0)
        seen[str(c0)] = (s.b2_var_Y, s.h20var_chars[s.chi_A])
    ok = len(set(seen.values())) == 1
    checks.append(Check("chi0 independence", ok, f"{len(seen)} admissible chi0, values {sorted(set(seen.values()))}"))
    return AuditReport(scenario.name, tuple(checks))
