"""Published values, transcribed as printed (including suspected misprints).

Nothing in the computation layers (hodge, hypotheses, forms, theta_model)
imports this module; it exists only so that report.py can diff recomputed
values against print.  Cells are stored as the strings that appear in the
tables; the parse helpers turn them into comparable objects.
"""

from __future__ import annotations

from dataclasses import dataclass, field

__all__ = [
    "PrintedBaseline",
    "baseline",
    "TABLE1",
    "TABLE2",
    "TABLE3",
    "ONE_FORM_TABLE",
    "THETA_TABLE",
    "WORKED_TABLE",
    "SECTION_STATEMENTS",
    "COROLLARY",
    "CASE_LISTS",
    "SICILIAN",
    "WORKED_MULT_S5",
    "parse_vector",
    "parse_signs",
]

# name -> (generator words, G-invariant 1-forms, chi_A)
TABLE1: dict[str, tuple[tuple[str, str, str], str, str]] = {
    "S1": (("i1 i2 i3", "i2 i3 i123", "i3 i23"), "none", "---"),
    "S2": (("i1 i3 i23", "i3 i13", "i2 i23"), "none", "+--"),
    "S3": (("i1 i3 i23", "i3 i123", "i2 i3 i12"), "none", "+++"),
    "S4": (("i1 i3 i12", "i2 i123", "i2 i3 i23"), "none", "+++"),
    "S5": (("i1 i3 i13", "i3 i123", "i3 i23"), "dz3", "++-"),
    "S6": (("i2 i3 i123", "i2 i3 i13", "i3 i23"), "dz3", "-+-"),
    "S7": (("i1 i3 i23", "i3 i123", "i2 i12"), "dz3", "++-"),
    "S8": (("i1 i3 i23", "i2 i3 i123", "i2 i3 i13"), "dz3", "+-+"),
    "S9": (("i1 i2 i3 i13", "i3 i123", "i2 i12"), "dz3", "-+-"),
    "S10": (("i1 i2 i3 i13", "i2 i3 i123", "i3 i23"), "dz3", "---"),
    "S11": (("i1 i2 i23", "i2 i123", "i2 i3 i12"), "dz2", "+++"),
    "S12": (("i1 i3 i13", "i3 i123", "i2 i3 i23"), "dz3", "+++"),
    "S13": (("i1 i2 i3 i23", "i2 i3 i123", "i2 i12"), "dz2, dz3", "---"),
    "S14": (("i1 i13", "i12 i123", "i2 i23"), "dz1, dz2", "---"),
    "S15": (("i1 i3 i13", "i12 i123", "i2 i3 i23"), "dz1, dz2", "+-+"),
    "S16": (("i1 i3 i13", "i3 i12 i123", "i2 i3 i23"), "all", "+++"),
}

# name -> (U, W, H^{1,1}(A), b2fix(Y), b2var(Y)); S15's W cell is printed "2·+-+) + 1"
TABLE2: dict[str, tuple[str, str, str, tuple[int, int, int], tuple[int, int, int]]] = {
    "S1": ("(-++)(--+)(-+-)", "(+-+)(++-)(+--)", "3·1 + 2W", (0, 3, 0), (0, 4, 0)),
    "S2": ("(-++)(+-+)(++-)", "(+--)(-+-)(--+)", "3·1 + 2W", (0, 3, 0), (0, 4, 0)),
    "S3": ("(---)(--+)(++-)", "(++-)(--+)(---)", "3·1 + 2W", (0, 3, 0), (0, 4, 0)),
    "S4": ("(+-+)(-++)(--+)", "(--+)(-++)(+-+)", "3·1 + 2W", (0, 3, 0), (0, 4, 0)),
    "S5": ("(+-+)(+--) + 1", "(+-+)(+--)(++-)", "3·1 + 2W", (0, 3, 0), (1, 3, 1)),
    "S6": ("(--+)(+--) + 1", "(--+)(+--)(-+-)", "3·1 + 2W", (0, 3, 0), (1, 3, 1)),
    "S7": ("(---)(-++) + 1", "(---)(-++)(+--)", "3·1 + 2W", (0, 3, 0), (1, 3, 1)),
    "S8": ("(---)(-++) + 1", "(---)(-++)(+--)", "3·1 + 2W", (0, 3, 0), (1, 3, 1)),
    "S9": ("(+--)(--+) + 1", "(+--)(--+)(-++)", "3·1 + 2W", (0, 3, 0), (1, 3, 1)),
    "S10": ("(+-+)(-+-) + 1", "(+-+)(-+-)(---)", "3·1 + 2W", (0, 3, 0), (1, 3, 1)),
    "S11": ("2(---) + 1", "2(---) + 1", "3·1 + 2W", (1, 5, 1), (0, 1, 0)),
    "S12": ("2(+-+) + 1", "2(+-+) + 1", "3·1 + 2W", (1, 5, 1), (0, 1, 0)),
    "S13": ("(+--) + 2·1", "2·(+--) + 1", "3·1 + 2W", (1, 5, 1), (1, 3, 1)),
    "S14": ("(---) + 2·1", "2·(---) + 1", "3·1 + 2W", (1, 5, 1), (1, 3, 1)),
    "S15": ("(+-+) + 2·1", "2·+-+) + 1", "3·1 + 2W", (1, 5, 1), (1, 3, 1)),
    "S16": ("3·1", "3·1", "3·1 + 2W", (3, 9, 3), (0, 1, 0)),
}
TABLE2_NORMALIZED = {("S15", "W"): "2·(+-+) + 1"}

# name -> (type vector, trace vector H2var, trace vector of chi_A, mult chi_A)
TABLE3: dict[str, tuple[str, str, str, int]] = {
    "S5": ("(3|3 1 1|1 2 2|2)", "(43|-5 -5 -5|-5 3 3|3)", "(1|1 1 -1|1 -1 -1|-1)", 3),
    "S6": ("(3|2 1 2|2 1 2|2)", "(43|3 -5 3|-5 3 -5|3)", "(1|-1 1 -1|-1 1 -1|1)", 6),
    "S7": ("(3|1 2 2|2 2 3|1)", "(43|-5 3 3|3 3 -5|-5)", "(1|1 1 -1|1 -1 -1|-1)", 6),
    "S8": ("(3|1 2 2|2 2 3|1)", "(43|-5 3 3|3 3 -5|-5)", "(1|1 -1 1|-1 1 -1|-1)", 6),
    "S9": ("(3|2 1 2|2 1 2|3)", "(43|3 -5 3|-5 3 -5|-5)", "(1|-1 1 -1|-1 1 -1|1)", 5),
    "S10": ("(3|2 2 2|1 3 1|2)", "(43|-5 -5 -5|-5 -5 -5|3)", "(1|-1 -1 -1|1 1 1|-1)", 5),
    "S13": ("(3|3 2 2|2 2 3|3)", "(43|-5 3 3|3 3 -5|-5)", "(1|-1 -1 -1|1 1 1|-1)", 6),
    "S14": ("(3|2 2 2|3 3 3|2)", "(43|3 3 3|-5 -5 -5|3)", "(1|-1 -1 -1|1 1 1|-1)", 2),
    "S15": ("(3|3 2 3|2 3 2|2)", "(43|-5 3 -5|3 -5 3|3)", "(1|1 -1 1|-1 1 -1|-1)", 2),
}

# the worked example in the text following the trace table
WORKED_MULT_S5 = {"trace": (43, -5, -5, -5, -5, 3, 3, 3), "chi_A": "++-", "mult": 3}

ONE_FORM_COLUMNS = ("i1", "i2", "i3", "i12", "i13", "i23", "i123")
ONE_FORM_TABLE: dict[str, str] = {"dz1": "-++--+-", "dz2": "+-+-+--", "dz3": "++-+---"}

THETA_COLUMNS = ONE_FORM_COLUMNS
THETA_TABLE: dict[str, str] = {
    "111": "++++++-",
    "211": "+++--++",
    "121": "+++-+-+",
    "112": "++++--+",
    "122": "+++--+-",
    "212": "+++-+--",
    "221": "++++---",
    "222": "+++++++",
}

# columns: S2 g1 g2 g3, S6 g1 g2 g3
WORKED_TABLE: dict[str, str] = {
    "111": "+++-++",
    "211": "+-++-+",
    "121": "-+-++-",
    "112": "-----+",
    "122": "+-+-+-",
    "212": "-+---+",
    "221": "------",
    "222": "++++++",
}

SECTION_STATEMENTS: dict[str, str] = {
    "S1": "2(+++) + 2(++-) + 2(+-+) + 2(+--)",
    "S2": "2(+++) + 2(+-+) + 2(-+-) + 2(---)",
    "regular": "all 8 characters once",
}

COROLLARY = {"b1": 6, "b2": 58, "euler": 48, "var": (7, 29, 7), "fix": (3, 9, 3), "b2_var": 43, "b2_fix": 15}

# p -> printed trace; the H2(A) list prints 1 at p = 2
CASE_LISTS = {
    "H2var": {0: -29, 1: -5, 2: 3, 3: -5},
    "H1A": {0: -6, 1: -2, 2: 2, 3: 6},
    "H2A": {0: 15, 1: -1, 2: 1, 3: 15},
}

SICILIAN = {
    "pg": 1,
    "q": 1,
    "c1sq": 6,
    "euler_Y": 6,
    "h11_Y": 6,
    "h20_var_trivial": 0,
    "h11_var_trivial": 1,
    "sections": "(++)(+-)(-+)(--)",
    "h20_var": "(+-)(-+)(--)",
}

# evident reading of misprinted cells, with provenance
NORMALIZATIONS = {
    ("S15", "W"): "printed '2·+-+) + 1' has an unbalanced parenthesis; read as '2·(+-+) + 1'",
}


@dataclass(frozen=True)
class PrintedBaseline:
    name: str
    words: tuple[str, str, str]
    invariant_forms: str
    chi_A: str
    U: str
    W: str
    H11: str
    b2_fix_Y: tuple[int, int, int]
    b2_var_Y: tuple[int, int, int]
    type_vector: str | None = None
    trace_H2var: str | None = None
    trace_chiA: str | None = None
    mult_chiA: int | None = None
    sections: str = "all 8 characters once"
    trusted: bool = field(default=False, init=False)
    notes: tuple[str, ...] = ()


def baseline(name: str) -> PrintedBaseline:
    key = name.strip().upper()
    if key not in TABLE1:
        raise KeyError(f"no printed baseline for {name!r}")
    words, forms, chi = TABLE1[key]
    U, W, H11, fix, var = TABLE2[key]
    notes = []
    if (key, "W") in TABLE2_NORMALIZED:
        W = TABLE2_NORMALIZED[(key, "W")]
        notes.append(NORMALIZATIONS[(key, "W")])
    t3 = TABLE3.get(key, (None, None, None, None))
    return PrintedBaseline(
        key,
        words,
        forms,
        chi,
        U,
        W,
        H11,
        fix,
        var,
        *t3,
        sections=SECTION_STATEMENTS.get(key, SECTION_STATEMENTS["regular"]),
        notes=tuple(notes),
    )


def parse_vector(text: str) -> tuple[int, ...]:
    """``"(43|-5 3 3|3 3 -5|-5)"`` -> (43, -5, 3, 3, 3, 3, -5, -5)."""
    body = text.replace("−", "-").strip().strip("()").replace("|", " ")
    return tuple(int(tok) for tok in body.split())


def parse_signs(text: str) -> tuple[int, ...]:
    return tuple(1 if c == "+" else -1 for c in text.replace("−", "-") if c in "+-")
