"""Scenario registry: the sixteen Burniat families, the Sicilian construction, custom files.

A scenario fixes the group (generators acting on the factors of A), the class
D of the invariant surface via D^3, and the character decomposition of the
space of sections cutting out X.  Construction validates everything that can
be checked exactly; :class:`ScenarioError` messages name the offending
generator, element or pair.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from typing import Any, Sequence, Union

from .affine_group import (
    ActionGroup,
    FactorAction,
    GroupElement,
    GroupError,
    HalfPeriod,
    commutation_pairing,
    fixed_locus,
    generate_group,
    parse_word,
)
from .characters import Character, CharMultiset, trivial
from .forms import FormData, form_data
from .theta_model import section_characters

__all__ = [
    "ScenarioError",
    "EllipticFactor",
    "OpaqueFactor",
    "Scenario",
    "FAMILY_GENERATORS",
    "BURNIAT_NAMES",
    "builtin",
    "all_builtins",
    "burniat",
    "sicilian",
    "parse_scenario",
    "render_scenario",
    "load_scenario",
]

N_FORMS = 3
BURNIAT_DIVISOR_SELFINT = 48  # (2L)^3 with L^3 = 6

FAMILY_GENERATORS: dict[str, tuple[str, str, str]] = {
    "S1": ("i1 i2 i3", "i2 i3 i123", "i3 i23"),
    "S2": ("i1 i3 i23", "i3 i13", "i2 i23"),
    "S3": ("i1 i3 i23", "i3 i123", "i2 i3 i12"),
    "S4": ("i1 i3 i12", "i2 i123", "i2 i3 i23"),
    "S5": ("i1 i3 i13", "i3 i123", "i3 i23"),
    "S6": ("i2 i3 i123", "i2 i3 i13", "i3 i23"),
    "S7": ("i1 i3 i23", "i3 i123", "i2 i12"),
    "S8": ("i1 i3 i23", "i2 i3 i123", "i2 i3 i13"),
    "S9": ("i1 i2 i3 i13", "i3 i123", "i2 i12"),
    "S10": ("i1 i2 i3 i13", "i2 i3 i123", "i3 i23"),
    "S11": ("i1 i2 i23", "i2 i123", "i2 i3 i12"),
    "S12": ("i1 i3 i13", "i3 i123", "i2 i3 i23"),
    "S13": ("i1 i2 i3 i23", "i2 i3 i123", "i2 i12"),
    "S14": ("i1 i13", "i12 i123", "i2 i23"),
    "S15": ("i1 i3 i13", "i12 i123", "i2 i3 i23"),
    "S16": ("i1 i3 i13", "i3 i12 i123", "i2 i3 i23"),
}
BURNIAT_NAMES = tuple(FAMILY_GENERATORS)
ALL_NAMES = BURNIAT_NAMES + ("sicilian",)


class ScenarioError(ValueError):
    """Invalid scenario input; the message names the offending field, element or pair."""


@dataclass(frozen=True)
class EllipticFactor:
    actions: tuple[FactorAction, ...]
    degree: int = 2


@dataclass(frozen=True)
class OpaqueFactor:
    """A factor known only through data: dz characters, freeness per element, lift commutators.

    ``free`` lists the nontrivial elements in canonical order; ``pairing`` lists
    the generator pairs whose lifted actions anticommute on this factor.
    """

    name: str
    dz: tuple[Character, ...]
    free: tuple[bool, ...]
    pairing: tuple[tuple[int, int], ...] = ()


Factor = Union[EllipticFactor, OpaqueFactor]


@dataclass(frozen=True)
class FreenessVerdict:
    label: str
    free_on_A: bool
    free_on_X: bool
    reason: str


@dataclass(frozen=True)
class Scenario:
    name: str
    kind: str
    generators: tuple[str, ...]
    factors: tuple[Factor, ...]
    divisor_selfint: int
    supplied_sections: CharMultiset | None = None
    chi0: Character | None = None
    notes: tuple[str, ...] = field(default=(), compare=False)

    def __post_init__(self) -> None:
        self._validate()

    # -- derived data -------------------------------------------------------
    @property
    def rank(self) -> int:
        return len(self.generators)

    @property
    def elliptic(self) -> tuple[EllipticFactor, ...]:
        return tuple(f for f in self.factors if isinstance(f, EllipticFactor))

    @property
    def opaque(self) -> tuple[OpaqueFactor, ...]:
        return tuple(f for f in self.factors if isinstance(f, OpaqueFactor))

    @cached_property
    def generator_elements(self) -> tuple[GroupElement, ...]:
        if self.kind == "burniat":
            return tuple(parse_word(w) for w in self.generators)
        return tuple(
            GroupElement(tuple(f.actions[k] for f in self.elliptic), label)
            for k, label in enumerate(self.generators)
        )

    @cached_property
    def group(self) -> ActionGroup:
        return generate_group(self.generator_elements)

    @cached_property
    def forms(self) -> FormData:
        extra = []
        subsets = self.group.subsets
        for f in self.opaque:
            for ch in f.dz:
                extra.append([ch(s) for s in subsets])
        return form_data(self.group, extra)

    @cached_property
    def sections(self) -> CharMultiset:
        if self.supplied_sections is not None:
            return self.supplied_sections
        return section_characters(self.group)

    @property
    def admissible_chi0(self) -> tuple[Character, ...]:
        return tuple(self.sections)

    @property
    def default_chi0(self) -> Character:
        if self.chi0 is not None:
            return self.chi0
        t = trivial(self.rank)
        if self.sections[t]:
            return t
        raise ScenarioError(f"{self.name}: trivial character absent from sections; give 'chi0' explicitly")

    @cached_property
    def freeness(self) -> tuple[FreenessVerdict, ...]:
        out = []
        for k, g in enumerate(self.group.elements[1:]):
            locus = fixed_locus(g) if self.elliptic else None
            opaque_free = any(f.free[k] for f in self.opaque)
            if (locus is not None and locus.empty) or opaque_free:
                why = "translation on an elliptic factor" if locus is not None and locus.empty else "opaque factor"
                out.append(FreenessVerdict(g.label, True, True, f"free on A ({why})"))
            elif locus is not None and not self.opaque and locus.dimension == 0:
                out.append(
                    FreenessVerdict(
                        g.label,
                        False,
                        True,
                        f"{locus.n_points} isolated fixed points on A, avoided by X (Burniat pair hypothesis)",
                    )
                )
            else:
                out.append(FreenessVerdict(g.label, False, False, f"fixed locus on A: {locus}"))
        return tuple(out)

    @property
    def order(self) -> int:
        return 1 << self.rank

    # -- validation ---------------------------------------------------------
    def _validate(self) -> None:
        if self.kind not in ("burniat", "custom"):
            raise ScenarioError(f"kind: expected 'burniat' or 'custom', got {self.kind!r}")
        if isinstance(self.divisor_selfint, bool) or not isinstance(self.divisor_selfint, int):
            raise ScenarioError(f"divisor_selfint: expected an integer, got {self.divisor_selfint!r}")
        if self.divisor_selfint <= 0:
            raise ScenarioError(f"divisor_selfint: must be positive, got {self.divisor_selfint}")
        if self.rank < 1:
            raise ScenarioError("generators: need at least one generator")
        if not self.elliptic:
            raise ScenarioError("factors: at least one elliptic factor is required to carry the group law")
        for i, f in enumerate(self.factors):
            if isinstance(f, EllipticFactor) and len(f.actions) != self.rank:
                raise ScenarioError(f"factors[{i}]: {len(f.actions)} actions for {self.rank} generators")
            if isinstance(f, OpaqueFactor):
                if any(ch.rank != self.rank for ch in f.dz):
                    raise ScenarioError(f"factors[{i}]: dz characters must have rank {self.rank}")
                if len(f.free) != self.order - 1:
                    raise ScenarioError(f"factors[{i}]: 'free' needs {self.order - 1} entries")
        try:
            group = self.group
        except GroupError as exc:
            raise ScenarioError(f"generators: {exc}") from None
        for v in self.freeness:
            if not v.free_on_X:
                raise ScenarioError(f"element {v.label} has fixed points on A ({v.reason.split(': ', 1)[-1]})")
        degrees = [f.degree for f in self.elliptic]
        for i, j in combinations(range(self.rank), 2):
            try:
                s = commutation_pairing(group.generators[i], group.generators[j], degrees)
            except GroupError as exc:
                raise ScenarioError(f"factors: {exc}") from None
            for f in self.opaque:
                if (i, j) in f.pairing or (j, i) in f.pairing:
                    s = -s
            if s != 1:
                raise ScenarioError(
                    f"lifted actions of {self.generators[i]!r} and {self.generators[j]!r} do not commute "
                    "on sections (commutation pairing -1)"
                )
        if self.forms.n_forms != N_FORMS:
            raise ScenarioError(f"factors: A must be a threefold, got {self.forms.n_forms} holomorphic 1-forms")
        if self.supplied_sections is None and any(f.degree != 2 for f in self.elliptic):
            raise ScenarioError("section_chars: required unless every factor is elliptic of degree 2")
        if self.supplied_sections is None and self.opaque:
            raise ScenarioError("section_chars: required when opaque factors are present")
        if self.supplied_sections is not None and self.supplied_sections.rank != self.rank:
            raise ScenarioError(f"section_chars: characters must have rank {self.rank}")
        if self.sections.dim < 1:
            raise ScenarioError("section_chars: the section space is empty")
        if self.chi0 is not None:
            if self.chi0.rank != self.rank:
                raise ScenarioError(f"chi0: {self.chi0} is not a rank-{self.rank} character")
            if not self.sections[self.chi0]:
                raise ScenarioError(f"chi0: {self.chi0} does not occur among the section characters")


# -- builtins ----------------------------------------------------------------


def burniat(name: str, chi0: Character | None = None) -> Scenario:
    words = FAMILY_GENERATORS[name]
    gens = [parse_word(w) for w in words]
    factors = tuple(EllipticFactor(tuple(g.factors[a] for g in gens)) for a in range(3))
    return Scenario(name, "burniat", words, factors, BURNIAT_DIVISOR_SELFINT, chi0=chi0)


def sicilian() -> Scenario:
    """E x T with K generated by (e,a) -> (e + tau/2, -a + tau1/2) and (e,a) -> (e + 1/2, a + tau2/2)."""
    e_factor = EllipticFactor((FactorAction(1, HalfPeriod(0, 1)), FactorAction(1, HalfPeriod(1, 0))), degree=2)
    t_factor = OpaqueFactor(
        name="T",
        dz=(Character((-1, 1)), Character((-1, 1))),
        free=(False, True, False),
        pairing=((0, 1),),
    )
    sections = CharMultiset([Character(s) for s in ((1, 1), (1, -1), (-1, 1), (-1, -1))], 2)
    return Scenario(
        "sicilian",
        "custom",
        ("k1", "k2"),
        (e_factor, t_factor),
        24,
        supplied_sections=sections,
        notes=(
            "D = 2[E-point] + (1,2)-polarization: D^3 = 3*2*4 = 24, h^0 = 2*2 = 4 sections",
            "T factor: dz signs, freeness and the lift commutator are data, not derived",
        ),
    )


def builtin(name: str) -> Scenario:
    key = name.strip()
    if key.lower() == "sicilian":
        return sicilian()
    key = key.upper()
    if key not in FAMILY_GENERATORS:
        raise ScenarioError(f"unknown scenario {name!r}; expected one of {', '.join(ALL_NAMES)}")
    return burniat(key)


def all_builtins() -> list[Scenario]:
    return [builtin(n) for n in ALL_NAMES]


# -- file format -----------------------------------------------------------

_TOP_FIELDS = {"name", "kind", "generators", "divisor_selfint", "chi0", "factors", "section_chars"}


def _sign(value: Any, where: str) -> int:
    if value in ("+", 1, "+1"):
        return 1
    if value in ("-", "−", -1, "-1"):
        return -1
    raise ScenarioError(f"{where}: expected '+' or '-', got {value!r}")


def _character(value: Any, where: str) -> Character:
    if not isinstance(value, str):
        raise ScenarioError(f"{where}: expected a sign string like '(+-)', got {value!r}")
    try:
        return Character.parse(value)
    except ValueError as exc:
        raise ScenarioError(f"{where}: {exc}") from None


def _parse_factor(obj: Any, where: str, rank: int) -> Factor:
    if not isinstance(obj, dict):
        raise ScenarioError(f"{where}: expected an object")
    kind = obj.get("kind")
    if kind == "elliptic":
        unknown = set(obj) - {"kind", "degree", "actions"}
        if unknown:
            raise ScenarioError(f"{where}: unknown fields {sorted(unknown)}")
        actions = obj.get("actions")
        if not isinstance(actions, list) or len(actions) != rank:
            raise ScenarioError(f"{where}.actions: expected a list of {rank} actions")
        parsed = []
        for k, a in enumerate(actions):
            w = f"{where}.actions[{k}]"
            if not isinstance(a, dict) or set(a) != {"sign", "shift"}:
                raise ScenarioError(f"{w}: expected {{'sign': '+'|'-', 'shift': [b1, b2]}}")
            shift = a["shift"]
            if not (isinstance(shift, list) and len(shift) == 2 and all(b in (0, 1) for b in shift)):
                raise ScenarioError(f"{w}.shift: expected two bits [b1, b2]")
            parsed.append(FactorAction(_sign(a["sign"], f"{w}.sign"), HalfPeriod(int(shift[0]), int(shift[1]))))
        degree = obj.get("degree", 2)
        if not isinstance(degree, int) or degree <= 0:
            raise ScenarioError(f"{where}.degree: expected a positive integer")
        return EllipticFactor(tuple(parsed), degree)
    if kind == "opaque":
        unknown = set(obj) - {"kind", "name", "dz", "free", "pairing"}
        if unknown:
            raise ScenarioError(f"{where}: unknown fields {sorted(unknown)}")
        dz = obj.get("dz")
        if not isinstance(dz, list) or not dz:
            raise ScenarioError(f"{where}.dz: expected a non-empty list of sign strings")
        free = obj.get("free")
        if not isinstance(free, list) or not all(isinstance(b, bool) for b in free):
            raise ScenarioError(f"{where}.free: expected a list of booleans")
        pairing = obj.get("pairing", [])
        if not isinstance(pairing, list) or not all(
            isinstance(p, list) and len(p) == 2 and all(isinstance(i, int) and 0 <= i < rank for i in p)
            for p in pairing
        ):
            raise ScenarioError(f"{where}.pairing: expected a list of generator-index pairs")
        return OpaqueFactor(
            str(obj.get("name", "opaque")),
            tuple(_character(c, f"{where}.dz[{k}]") for k, c in enumerate(dz)),
            tuple(free),
            tuple((int(p[0]), int(p[1])) for p in pairing),
        )
    raise ScenarioError(f"{where}.kind: expected 'elliptic' or 'opaque', got {kind!r}")


def parse_scenario(text: str) -> Scenario:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ScenarioError(f"syntax error at line {exc.lineno} column {exc.colno}: {exc.msg}") from None
    if not isinstance(obj, dict):
        raise ScenarioError("top level: expected a JSON object")
    unknown = set(obj) - _TOP_FIELDS
    if unknown:
        raise ScenarioError(f"unknown fields {sorted(unknown)}")
    for req in ("name", "kind", "generators", "divisor_selfint"):
        if req not in obj:
            raise ScenarioError(f"{req}: missing required field")
    name, kind, gens = obj["name"], obj["kind"], obj["generators"]
    if not isinstance(name, str):
        raise ScenarioError("name: expected a string")
    if not isinstance(gens, list) or not gens or not all(isinstance(g, str) for g in gens):
        raise ScenarioError("generators: expected a non-empty list of strings")
    chi0 = _character(obj["chi0"], "chi0") if "chi0" in obj else None
    if kind == "burniat":
        for f in ("factors", "section_chars"):
            if f in obj:
                raise ScenarioError(f"{f}: only allowed for kind 'custom'")
        if len(gens) != 3:
            raise ScenarioError(f"generators: a Burniat scenario needs 3 words, got {len(gens)}")
        words = []
        for k, w in enumerate(gens):
            try:
                words.append(parse_word(w))
            except GroupError as exc:
                raise ScenarioError(f"generators[{k}]: {exc}") from None
        factors = tuple(EllipticFactor(tuple(g.factors[a] for g in words)) for a in range(3))
        norm = tuple(" ".join(w.lower().split()) for w in gens)
        return Scenario(name, "burniat", norm, factors, obj["divisor_selfint"], chi0=chi0)
    if kind == "custom":
        raw = obj.get("factors")
        if not isinstance(raw, list) or not raw:
            raise ScenarioError("factors: required non-empty list for kind 'custom'")
        factors = tuple(_parse_factor(f, f"factors[{i}]", len(gens)) for i, f in enumerate(raw))
        sections = None
        if "section_chars" in obj:
            sc = obj["section_chars"]
            if not isinstance(sc, list):
                raise ScenarioError("section_chars: expected a list of sign strings")
            chars = [_character(c, f"section_chars[{k}]") for k, c in enumerate(sc)]
            if any(ch.rank != len(gens) for ch in chars):
                raise ScenarioError(f"section_chars: characters must have rank {len(gens)}")
            sections = CharMultiset(chars, len(gens))
        return Scenario(name, "custom", tuple(gens), factors, obj["divisor_selfint"], sections, chi0)
    raise ScenarioError(f"kind: expected 'burniat' or 'custom', got {kind!r}")


def _factor_to_obj(f: Factor) -> dict[str, Any]:
    if isinstance(f, EllipticFactor):
        return {
            "kind": "elliptic",
            "degree": f.degree,
            "actions": [
                {"sign": "+" if a.sign == 1 else "-", "shift": [a.shift.b1, a.shift.b2]} for a in f.actions
            ],
        }
    return {
        "kind": "opaque",
        "name": f.name,
        "dz": [str(c) for c in f.dz],
        "free": list(f.free),
        "pairing": [list(p) for p in f.pairing],
    }


def render_scenario(s: Scenario) -> str:
    obj: dict[str, Any] = {"name": s.name, "kind": s.kind, "generators": list(s.generators)}
    if s.kind == "custom":
        obj["factors"] = [_factor_to_obj(f) for f in s.factors]
        if s.supplied_sections is not None:
            obj["section_chars"] = [str(c) for c in s.supplied_sections.elements()]
    obj["divisor_selfint"] = s.divisor_selfint
    if s.chi0 is not None:
        obj["chi0"] = str(s.chi0)
    return json.dumps(obj, indent=2, ensure_ascii=False) + "\n"


def load_scenario(path: str) -> Scenario:
    with open(path, encoding="utf-8") as fh:
        return parse_scenario(fh.read())
