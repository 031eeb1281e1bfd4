"""Regenerated tables, diffs against print, and their md / csv / json renderings.

Raw cell values always come from the pipeline.  Printed values are read only
here, from :mod:`burniat.baselines`, and only to build :class:`DiffReport`.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Any, Sequence

from . import baselines as bl
from .affine_group import word_to_unicode
from .characters import (
    Character,
    CharMultiset,
    NonRepresentation,
    TraceVector,
    decompose_trace,
    multiplicity,
    parse_multiset_expr,
    trivial,
)
from .forms import chi_A, h11_characters, one_form_characters, type_vector, wedge2_characters
from .hodge import consistency_suite, hodge_X, hodge_Y, trace_H1_A, trace_H2_A, trace_H2_var
from .hypotheses import CheckReport
from .scenarios import BURNIAT_NAMES, Scenario, builtin
from .theta_model import BASIS, LEMMA_COLUMNS, basis_label, lemma_table, worked_sign_table

__all__ = [
    "FORMATS",
    "TABLES",
    "RenderedTable",
    "CellDiff",
    "DiffReport",
    "build_table",
    "diff_table",
    "render",
    "render_diff",
    "checker_table",
]

FORMATS = ("md", "csv", "json")
TABLES = ("1", "2", "3", "theta", "hodge-x")
TABLE3_FAMILIES = ("S5", "S6", "S7", "S8", "S9", "S10", "S13", "S14", "S15")

_SUB = str.maketrans("0123456789", "₀₁₂₃₄₅₆₇₈₉")


def _uni(text: str) -> str:
    """Display form for markdown: true minus signs."""
    return text.replace("-", "−")


def _jsonable(x: Any) -> Any:
    if isinstance(x, Fraction):
        return int(x) if x.denominator == 1 else str(x)
    if isinstance(x, (Character, CharMultiset)):
        return str(x)
    if isinstance(x, TraceVector):
        return list(x.values)
    if isinstance(x, tuple):
        return [_jsonable(v) for v in x]
    if isinstance(x, list):
        return [_jsonable(v) for v in x]
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    return x


@dataclass
class RenderedTable:
    table_id: str
    title: str
    columns: tuple[str, ...]
    keys: list[str] = field(default_factory=list)
    cells: list[tuple[str, ...]] = field(default_factory=list)  # ASCII display strings
    raw: list[dict[str, Any]] = field(default_factory=list)
    md_cells: list[tuple[str, ...]] = field(default_factory=list)

    def add(self, key: str, cells: Sequence[str], raw: dict[str, Any], md: Sequence[str] | None = None) -> None:
        self.keys.append(key)
        self.cells.append(tuple(cells))
        self.raw.append(raw)
        self.md_cells.append(tuple(md) if md is not None else tuple(_uni(c) for c in cells))


# -- tables ------------------------------------------------------------------


def invariant_forms(s: Scenario) -> str:
    chars, _ = one_form_characters(s.forms)
    idx = [i + 1 for i, c in enumerate(chars) if c.is_trivial()]
    if not idx:
        return "none"
    if len(idx) == len(chars):
        return "all"
    return ", ".join(f"dz{i}" for i in idx)


def _signs(ch: Character) -> str:
    return str(ch)[1:-1]


def table1() -> RenderedTable:
    t = RenderedTable("T1", "Burniat hypersurfaces", ("type", "g1", "g2", "g3", "invariant 1-forms", "chi_A"))
    for name in BURNIAT_NAMES:
        s = builtin(name)
        forms = invariant_forms(s)
        ca = chi_A(s.forms)
        cells = (name, *s.generators, forms, str(ca))
        md = (
            "S" + name[1:].translate(_SUB),
            *(word_to_unicode(w) for w in s.generators),
            forms.translate(_SUB),
            _uni(str(ca)),
        )
        t.add(name, cells, {"generators": list(s.generators), "invariant_forms": forms, "chi_A": str(ca)}, md)
    return t


def _h11_display(s: Scenario) -> tuple[str, CharMultiset]:
    h11 = h11_characters(s.forms)
    W = wedge2_characters(s.forms)
    n = s.forms.n_forms
    formula = CharMultiset({trivial(s.rank): n}, s.rank) + W.scale(2)
    return (f"{n}·1 + 2W" if h11 == formula else str(h11)), h11


def table2() -> RenderedTable:
    cols = ("type", "U", "W", "H11(A)", "b2fix(Y)", "b2var(Y)")
    t = RenderedTable("T2", "Action on forms and invariants of Y", cols)
    for name in BURNIAT_NAMES:
        s = builtin(name)
        h = hodge_Y(s)
        U, W = h.U, h.W
        h11_text, h11 = _h11_display(s)
        fix, var = h.b2_fix_Y, h.b2_var_Y
        cells = (name, str(U), str(W), h11_text, str(fix), str(var))
        raw = {"U": str(U), "W": str(W), "H11": str(h11), "b2fix": list(fix), "b2var": list(var)}
        md = ("S" + name[1:].translate(_SUB), _uni(str(U)), _uni(str(W)), h11_text, str(fix), str(var))
        t.add(name, cells, raw, md)
    return t


def _vec(v: TraceVector) -> str:
    return str(v)


def table3(families: Sequence[str] = TABLE3_FAMILIES) -> RenderedTable:
    cols = ("type", "type H0(Omega1)", "trace H2var(X)", "trace H0(Omega3)", "mult chi_A")
    t = RenderedTable("T3", "Trace vectors", cols)
    for name in families:
        s = builtin(name)
        p = type_vector(s.forms)
        h = hodge_Y(s)
        ca = h.chi_A
        chi_tv = TraceVector(ca.values())
        cells = (name, _vec(p), _vec(h.trace_H2var), _vec(chi_tv), str(h.mult_chiA))
        raw = {
            "type": list(p.values),
            "trace_H2var": list(h.trace_H2var.values),
            "trace_chiA": list(chi_tv.values),
            "mult_chiA": _jsonable(h.mult_chiA),
        }
        t.add(name, cells, raw, ("S" + name[1:].translate(_SUB), *(_uni(c) for c in cells[1:])))
    return t


def theta_table() -> RenderedTable:
    t = RenderedTable("theta", "Signs of the basic involutions on the product sections", ("section", *LEMMA_COLUMNS))
    rows = lemma_table()
    for v, row in zip(BASIS, rows):
        key = "".join(map(str, v))
        cells = (key, *("+" if x > 0 else "-" for x in row))
        md = (basis_label(v), *("+" if x > 0 else "−" for x in row))
        t.add(key, cells, {"signs": list(row)}, md)
    t.columns = ("section", *LEMMA_COLUMNS)
    return t


def hodge_x_table() -> RenderedTable:
    hx = hodge_X(builtin("S16"))
    t = RenderedTable("hodge-x", "Invariants of X", ("b1", "b2", "var", "fix", "euler"))
    raw = {"b1": hx.b1, "b2": hx.b2, "var": list(hx.var), "fix": list(hx.fix), "euler": hx.euler}
    t.add("X", (str(hx.b1), str(hx.b2), f"{hx.b2_var}={hx.var}", f"{hx.b2_fix}={hx.fix}", str(hx.euler)), raw)
    return t


def checker_table(reports: Sequence[CheckReport]) -> RenderedTable:
    cols = ("scenario", "route", "condition3", "condition5", "mult chi_A", "chi_A", "motive")
    t = RenderedTable("checker", "Checkable hypotheses", cols)
    for r in reports:
        obj = r.to_json_obj()
        cells = (
            r.scenario,
            r.route,
            obj["condition3"],
            obj["condition5"],
            str(r.mult_chiA),
            obj["evidence"]["chi_A"],
            obj["evidence"]["motive"],
        )
        t.add(r.scenario, cells, obj)
    return t


def build_table(which: str) -> RenderedTable:
    builders = {"1": table1, "2": table2, "3": table3, "theta": theta_table, "hodge-x": hodge_x_table}
    try:
        return builders[which]()
    except KeyError:
        raise ValueError(f"unknown table {which!r}; expected one of {', '.join(TABLES)}") from None


# -- rendering ---------------------------------------------------------------


def render(table: RenderedTable, fmt: str) -> str:
    if fmt == "md":
        head = "| " + " | ".join(table.columns) + " |"
        sep = "|" + "|".join("---" for _ in table.columns) + "|"
        body = ["| " + " | ".join(row) + " |" for row in table.md_cells]
        return "\n".join([f"**{table.title}**", "", head, sep, *body]) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(table.columns)
        w.writerows(table.cells)
        return buf.getvalue()
    if fmt == "json":
        if table.table_id == "hodge-x":
            obj = {"schema": "1", **table.raw[0]}
        else:
            obj = {
                "schema": "1",
                "table": table.table_id,
                "columns": list(table.columns),
                "rows": [{"key": k, **_jsonable(r)} for k, r in zip(table.keys, table.raw)],
            }
        return json.dumps(obj, indent=2, ensure_ascii=False) + "\n"
    raise ValueError(f"unknown format {fmt!r}; expected one of {', '.join(FORMATS)}")


# -- diffs -------------------------------------------------------------------


@dataclass(frozen=True)
class CellDiff:
    row: str
    column: str
    printed: str
    recomputed: str
    match: bool
    evidence: tuple[str, ...] = ()
    printed_refuted: bool = False  # printed value violates a machine check


@dataclass
class DiffReport:
    table_id: str
    cells: list[CellDiff] = field(default_factory=list)
    consistent: bool = True
    audit: list[str] = field(default_factory=list)

    @property
    def mismatches(self) -> list[CellDiff]:
        return [c for c in self.cells if not c.match]

    @property
    def counts(self) -> dict[str, int]:
        return {"cells": len(self.cells), "match": len(self.cells) - len(self.mismatches), "mismatch": len(self.mismatches)}

    def exit_code(self) -> int:
        if not self.consistent:
            return 2
        return 1 if self.mismatches else 0

    def to_json_obj(self) -> dict[str, Any]:
        return {
            "schema": "1",
            "table": self.table_id,
            "consistent": self.consistent,
            "summary": self.counts,
            "mismatches": [
                {
                    "row": c.row,
                    "column": c.column,
                    "printed": c.printed,
                    "recomputed": c.recomputed,
                    "printed_refuted": c.printed_refuted,
                    "evidence": list(c.evidence),
                }
                for c in self.mismatches
            ],
            "audit": self.audit,
        }


def render_diff(d: DiffReport, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(d.to_json_obj(), indent=2, ensure_ascii=False) + "\n"
    c = d.counts
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(("row", "column", "printed", "recomputed", "printed_refuted", "evidence"))
        for m in d.mismatches:
            w.writerow((m.row, m.column, m.printed, m.recomputed, m.printed_refuted, " | ".join(m.evidence)))
        return buf.getvalue()
    if fmt != "md":
        raise ValueError(f"unknown format {fmt!r}")
    lines = [
        f"**Diff against print, table {d.table_id}**: {c['match']}/{c['cells']} cells match, {c['mismatch']} mismatch",
        "",
    ]
    for m in d.mismatches:
        lines.append(f"- {m.row} / {m.column}: printed `{m.printed}`, recomputed `{m.recomputed}`")
        lines += [f"  - {e}" for e in m.evidence]
    if not d.consistent:
        lines.append("")
        lines.append("internal consistency FAILED:")
        lines += [f"- {a}" for a in d.audit]
    return "\n".join(lines) + "\n"


def _audit_all(d: DiffReport, names: Sequence[str]) -> None:
    for n in names:
        a = consistency_suite(builtin(n))
        if not a.passed:
            d.consistent = False
            d.audit += [f"{n}: {f.name}: {f.detail}" for f in a.failures()]


def _cell(d: DiffReport, row: str, col: str, printed: str, recomputed: str, match: bool, evidence=(), refuted=False):
    d.cells.append(CellDiff(row, col, printed, recomputed, match, tuple(evidence), refuted))


def diff_table1() -> DiffReport:
    d = DiffReport("T1")
    for name in BURNIAT_NAMES:
        s = builtin(name)
        words, forms, chi = bl.TABLE1[name]
        ca = _signs(chi_A(s.forms))
        _cell(d, name, "generators", " ; ".join(words), " ; ".join(s.generators), words == s.generators)
        inv = invariant_forms(s)
        _cell(d, name, "invariant 1-forms", forms, inv, forms == inv, ["recomputed from dz signs of the generators"])
        _cell(d, name, "chi_A", chi, ca, chi == ca, [f"product of the dz characters {one_form_characters(s.forms)[0]}"])
    _audit_all(d, BURNIAT_NAMES)
    return d


def _det(m: CharMultiset) -> Character:
    out = trivial(m.rank)
    for c in m.elements():
        out = out * c
    return out


def diff_table2() -> DiffReport:
    d = DiffReport("T2")
    for name in BURNIAT_NAMES:
        s = builtin(name)
        h = hodge_Y(s)
        U, W, H11p, fix_p, var_p = bl.TABLE2[name]
        W_read = bl.TABLE2_NORMALIZED.get((name, "W"), W)
        printed_chi = Character(bl.parse_signs(bl.TABLE1[name][2]))
        pU = parse_multiset_expr(U, 3)
        ev = []
        refuted = False
        if pU != h.U:
            det = _det(pU)
            refuted = det != printed_chi
            ev = [
                f"product of printed U characters is {det}; Table 1 prints chi_A = {printed_chi}",
                f"recomputed U has product {_det(h.U)} = chi_A",
            ]
        _cell(d, name, "U", U, str(h.U), pU == h.U, ev, refuted)

        pW = parse_multiset_expr(W_read, 3)
        ev = []
        refuted = False
        if pW != h.W:
            derived = CharMultiset([a * b for a, b in combinations(pU.elements(), 2)], 3)
            refuted = derived != pW or _det(pU) != printed_chi
            if derived != pW:
                ev.append(f"printed W is not wedge^2 of the printed U, which gives {derived}")
            if _det(pU) != printed_chi:
                ev.append(f"printed W = wedge^2 of a printed U whose product {_det(pU)} contradicts Table 1")
            ev.append(f"recomputed W = wedge^2 of recomputed U = {h.W}")
        _cell(d, name, "W", W, str(h.W), pW == h.W, ev, refuted)

        h11_text, _ = _h11_display(s)
        _cell(d, name, "H11(A)", H11p, h11_text, H11p == h11_text)
        _cell(d, name, "b2fix(Y)", str(fix_p), str(h.b2_fix_Y), tuple(fix_p) == h.b2_fix_Y)
        ev = []
        refuted = False
        if tuple(var_p) != h.b2_var_Y:
            q = h.q_Y
            total = tuple(a + b for a, b in zip(fix_p, var_p))
            refuted = total != (q, 4 + 2 * q, q)
            ev = [
                f"printed fix + var = {total}, but pg = q = {q} with e(Y) = 6 forces (q, 4+2q, q) = {(q, 4 + 2 * q, q)}",
                f"recomputed var {h.b2_var_Y}: invariant part of the trace vector {h.trace_H2var} is "
                f"{multiplicity(h.trace_H2var, trivial(3))} = {sum(h.b2_var_Y)}",
            ]
        _cell(d, name, "b2var(Y)", str(var_p), str(h.b2_var_Y), tuple(var_p) == h.b2_var_Y, ev, refuted)
    _audit_all(d, BURNIAT_NAMES)
    return d


def _trace_checks(tv: TraceVector, var_sum: int) -> tuple[bool, bool, str]:
    """(a) integrality of all multiplicities, (b) invariant part = sum of printed b2var(Y)."""
    try:
        m = decompose_trace(tv)
        a_ok = True
        triv = m[trivial(tv.rank)]
        detail = f"multiplicities {dict((str(k), v) for k, v in m.items())}"
    except NonRepresentation as exc:
        a_ok = False
        triv = exc.multiplicities[trivial(tv.rank)]
        bad = {str(k): str(v) for k, v in exc.multiplicities.items() if v.denominator != 1 or v < 0}
        detail = f"non-integral multiplicities {bad}"
    b_ok = triv == var_sum
    return a_ok, b_ok, f"{detail}; invariant part {triv} vs Table 2 var sum {var_sum}"


def _lefschetz_from_type(p: TraceVector) -> TraceVector:
    vals = [43]
    for x in p.values[1:]:
        signs = (1,) * x + (-1,) * (3 - x)
        vals.append(trace_H2_var(signs))
    return TraceVector(tuple(vals))


def diff_table3() -> DiffReport:
    d = DiffReport("T3")
    for name in TABLE3_FAMILIES:
        s = builtin(name)
        h = hodge_Y(s)
        ptype, ptrace, pchi, pmult = bl.TABLE3[name]
        var_sum = sum(bl.TABLE2[name][4])
        p_rec = type_vector(s.forms)
        p_pr = TraceVector(bl.parse_vector(ptype))
        tv_rec = h.trace_H2var
        tv_pr = TraceVector(bl.parse_vector(ptrace))
        a_rec, b_rec, det_rec = _trace_checks(tv_rec, var_sum)

        # type vector
        ev = []
        refuted = False
        if p_pr != p_rec:
            hol = TraceVector(tuple(2 * x - 3 for x in p_pr.values))
            try:
                Upr = decompose_trace(hol)
                det = _det(Upr)
                ev.append(f"printed type gives U = {Upr} with product {det}; Table 1 chi_A = {bl.TABLE1[name][2]}")
                u_ok = True
            except NonRepresentation as exc:
                bad = {str(k): str(v) for k, v in exc.multiplicities.items() if v.denominator != 1 or v < 0}
                ev.append(f"printed type is not the type of a representation on 1-forms: {bad}")
                u_ok = False
            a_pr, b_pr, det_pr = _trace_checks(_lefschetz_from_type(p_pr), var_sum)
            refuted = not (a_pr and b_pr)
            ev.append(f"printed type -> Lefschetz traces: {det_pr}")
            ev.append(f"recomputed type -> {tv_rec}: {det_rec}")
            if not u_ok:
                ev.append("printed type fails integrality at the level of 1-forms")
        _cell(d, name, "type", ptype, str(p_rec), p_pr == p_rec, ev, refuted)

        # trace vector
        ev = []
        refuted = False
        if tv_pr != tv_rec:
            a_pr, b_pr, det_pr = _trace_checks(tv_pr, var_sum)
            refuted = not (a_pr and b_pr)
            ev = [f"printed: {det_pr}", f"recomputed: {det_rec}"]
            if tv_pr != _lefschetz_from_type(p_pr):
                ev.append(f"printed trace vector is not the Lefschetz image {_lefschetz_from_type(p_pr)} of the printed type")
        _cell(d, name, "trace H2var", ptrace, str(tv_rec), tv_pr == tv_rec, ev, refuted)

        # chi_A trace vector
        chi_tv = TraceVector(h.chi_A.values())
        pchi_tv = TraceVector(bl.parse_vector(pchi))
        _cell(d, name, "trace chi_A", pchi, str(chi_tv), pchi_tv == chi_tv)

        # multiplicity
        ev = []
        refuted = False
        if pmult != h.mult_chiA:
            from_printed = multiplicity(tv_pr, h.chi_A)
            a_pr, b_pr, _ = _trace_checks(tv_pr, var_sum)
            refuted = not (a_pr and b_pr)
            ev = [
                f"multiplicity of {h.chi_A} in the printed trace vector is {from_printed}",
                f"recomputed trace vector {tv_rec} gives {h.mult_chiA}; {det_rec}",
            ]
        _cell(d, name, "mult chi_A", str(pmult), str(h.mult_chiA), pmult == h.mult_chiA, ev, refuted)
    _audit_all(d, TABLE3_FAMILIES)
    return d


def diff_theta() -> DiffReport:
    d = DiffReport("theta")
    rows = lemma_table()
    for v, row in zip(BASIS, rows):
        key = "".join(map(str, v))
        printed = bl.parse_signs(bl.THETA_TABLE[key])
        for k, col in enumerate(LEMMA_COLUMNS):
            _cell(d, basis_label(v), col, "+-"[printed[k] < 0], "+-"[row[k] < 0], printed[k] == row[k])
    groups = [("S2", builtin("S2")), ("S6", builtin("S6"))]
    for gi, (name, s) in enumerate(groups):
        table = worked_sign_table(s.group)
        counts = s.sections
        for v, row in zip(BASIS, table):
            key = "".join(map(str, v))
            printed = bl.parse_signs(bl.WORKED_TABLE[key])[3 * gi : 3 * gi + 3]
            for k in range(3):
                ev = []
                refuted = False
                if printed[k] != row[k]:
                    col = [bl.parse_signs(bl.WORKED_TABLE["".join(map(str, u))])[3 * gi : 3 * gi + 3] for u in BASIS]
                    pm = CharMultiset([Character(tuple(c)) for c in col], 3)
                    refuted = pm != counts
                    ev = [
                        f"printed {name} columns give characters {pm}",
                        f"recomputed (product of per-factor sign rules) give {counts}",
                    ]
                _cell(d, basis_label(v), f"{name} g{k + 1}", "+-"[printed[k] < 0], "+-"[row[k] < 0], printed[k] == row[k], ev, refuted)
    return d


def diff_hodge_x() -> DiffReport:
    d = DiffReport("hodge-x")
    hx = hodge_X(builtin("S16"))
    c = bl.COROLLARY
    for key, val in (("b1", hx.b1), ("b2", hx.b2), ("euler", hx.euler), ("var", hx.var), ("fix", hx.fix)):
        _cell(d, "X", key, str(c[key]), str(val), c[key] == val)
    for p in range(4):
        signs = (1,) * p + (-1,) * (3 - p)
        rec = {"H1A": trace_H1_A(signs), "H2A": trace_H2_A(signs), "H2var": trace_H2_var(signs)}
        for k in ("H1A", "H2A", "H2var"):
            pr = bl.CASE_LISTS[k][p]
            ev = []
            if pr != rec[k]:
                ev = [
                    f"e2 of the doubled eigenvalues {signs + signs} is {rec[k]}",
                    f"closed form 8p(p-3)+15 at p={p} gives {8 * p * (p - 3) + 15}",
                ]
            _cell(d, f"p={p}", k, str(pr), str(rec[k]), pr == rec[k], ev, pr != rec[k])
    return d


def diff_table(which: str) -> DiffReport:
    fn = {"1": diff_table1, "2": diff_table2, "3": diff_table3, "theta": diff_theta, "hodge-x": diff_hodge_x}
    try:
        return fn[which]()
    except KeyError:
        raise ValueError(f"unknown table {which!r}") from None
