"""Affine involutions z -> +-z + (half period) on products of elliptic curves.

Everything here is exact: a half period is a pair of bits (b1, b2) standing for
b1/2 + b2*tau/2, and the modulus tau never enters.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Sequence

__all__ = [
    "TOKENS",
    "GroupError",
    "HalfPeriod",
    "FactorAction",
    "GroupElement",
    "ActionGroup",
    "FixedLocus",
    "canonical_subsets",
    "identity",
    "compose",
    "parse_word",
    "generate_group",
    "fixed_locus",
    "is_free_on_A",
    "commutation_pairing",
    "g0_elements",
    "word_to_unicode",
]


class GroupError(ValueError):
    """Raised for malformed words, mismatched factors or degenerate generator sets."""


@dataclass(frozen=True, order=True)
class HalfPeriod:
    b1: int = 0
    b2: int = 0

    def __post_init__(self) -> None:
        if self.b1 not in (0, 1) or self.b2 not in (0, 1):
            raise GroupError(f"half-period bits must be 0/1, got ({self.b1}, {self.b2})")

    def __add__(self, other: HalfPeriod) -> HalfPeriod:
        return HalfPeriod(self.b1 ^ other.b1, self.b2 ^ other.b2)

    def is_zero(self) -> bool:
        return self.b1 == 0 and self.b2 == 0

    def __str__(self) -> str:
        return {(0, 0): "0", (1, 0): "1/2", (0, 1): "tau/2", (1, 1): "(1+tau)/2"}[(self.b1, self.b2)]


ZERO = HalfPeriod()


@dataclass(frozen=True, order=True)
class FactorAction:
    """z -> sign*z + shift on one elliptic factor."""

    sign: int = 1
    shift: HalfPeriod = ZERO

    def __post_init__(self) -> None:
        if self.sign not in (1, -1):
            raise GroupError(f"sign must be +1 or -1, got {self.sign}")

    def __mul__(self, other: FactorAction) -> FactorAction:
        return FactorAction(self.sign * other.sign, self.shift + other.shift)

    def is_identity(self) -> bool:
        return self.sign == 1 and self.shift.is_zero()

    def is_translation(self) -> bool:
        return self.sign == 1 and not self.shift.is_zero()

    def __str__(self) -> str:
        s = "+" if self.sign == 1 else "-"
        return f"({s},{self.shift})"


IDENTITY_ACTION = FactorAction()
FLIP = FactorAction(-1, ZERO)
T_FLIP = FactorAction(-1, HalfPeriod(1, 0))
TAU_FLIP = FactorAction(-1, HalfPeriod(0, 1))

# token -> per-factor action on E1 x E2 x E3
TOKENS: dict[str, tuple[FactorAction, FactorAction, FactorAction]] = {
    "i1": (FLIP, IDENTITY_ACTION, IDENTITY_ACTION),
    "i2": (IDENTITY_ACTION, FLIP, IDENTITY_ACTION),
    "i3": (IDENTITY_ACTION, IDENTITY_ACTION, FLIP),
    "i12": (T_FLIP, T_FLIP, IDENTITY_ACTION),
    "i13": (T_FLIP, IDENTITY_ACTION, T_FLIP),
    "i23": (IDENTITY_ACTION, T_FLIP, T_FLIP),
    "i123": (TAU_FLIP, TAU_FLIP, TAU_FLIP),
}
_TOKEN_ORDER = {tok: k for k, tok in enumerate(TOKENS)}


def _normalize_word(tokens: Iterable[str]) -> str:
    odd: set[str] = set()
    for tok in tokens:
        odd ^= {tok}
    return " ".join(sorted(odd, key=lambda tok: (_TOKEN_ORDER.get(tok, len(_TOKEN_ORDER)), tok)))


@dataclass(frozen=True)
class GroupElement:
    factors: tuple[FactorAction, ...]
    word: str = field(default="", compare=False)

    @property
    def n_factors(self) -> int:
        return len(self.factors)

    def is_identity(self) -> bool:
        return all(f.is_identity() for f in self.factors)

    def __mul__(self, other: GroupElement) -> GroupElement:
        return compose(self, other)

    @property
    def label(self) -> str:
        return self.word or "1"

    def __repr__(self) -> str:
        body = " ".join(str(f) for f in self.factors)
        return f"GroupElement({self.label!r}: {body})"


def identity(n_factors: int = 3) -> GroupElement:
    return GroupElement((IDENTITY_ACTION,) * n_factors, "")


def compose(a: GroupElement, b: GroupElement) -> GroupElement:
    if a.n_factors != b.n_factors:
        raise GroupError(f"factor-count mismatch: {a.n_factors} vs {b.n_factors}")
    factors = tuple(x * y for x, y in zip(a.factors, b.factors))
    return GroupElement(factors, _normalize_word(a.word.split() + b.word.split()))


def parse_word(word: str) -> GroupElement:
    """Parse a whitespace separated word such as ``"i1 i3 i13"`` (case-insensitive)."""
    tokens = word.lower().split()
    elem = identity(3)
    for tok in tokens:
        try:
            factors = TOKENS[tok]
        except KeyError:
            raise GroupError(f"unknown token {tok!r} in word {word!r}") from None
        elem = compose(elem, GroupElement(factors, tok))
    return elem


_SUBSCRIPTS = str.maketrans("0123456789", "₀₁₂₃₄₅₆₇₈₉")


def word_to_unicode(word: str) -> str:
    if not word:
        return "1"
    return "".join("ι" + tok[1:].translate(_SUBSCRIPTS) for tok in word.split())


def canonical_subsets(rank: int) -> tuple[tuple[int, ...], ...]:
    """Generator-index subsets in the order 1, g1, g2, g3, g1g2, g1g3, g2g3, g1g2g3."""
    out: list[tuple[int, ...]] = []
    for size in range(rank + 1):
        out.extend(combinations(range(rank), size))
    return tuple(out)


@dataclass(frozen=True)
class ActionGroup:
    generators: tuple[GroupElement, ...]
    elements: tuple[GroupElement, ...]

    @property
    def rank(self) -> int:
        return len(self.generators)

    @property
    def order(self) -> int:
        return len(self.elements)

    @property
    def subsets(self) -> tuple[tuple[int, ...], ...]:
        return canonical_subsets(self.rank)

    def index(self, g: GroupElement) -> int:
        for k, h in enumerate(self.elements):
            if h == g:
                return k
        raise KeyError(g)

    def __contains__(self, g: object) -> bool:
        return g in self.elements


def generate_group(gens: Sequence[GroupElement]) -> ActionGroup:
    gens = tuple(gens)
    if not gens:
        raise GroupError("need at least one generator")
    n = gens[0].n_factors
    for k, g in enumerate(gens):
        if g.n_factors != n:
            raise GroupError(f"generator {k + 1} has {g.n_factors} factors, expected {n}")
        if g.is_identity():
            raise GroupError(f"generator {k + 1} ({g.label}) is the identity")
        if not compose(g, g).is_identity():
            raise GroupError(f"generator {k + 1} ({g.label}) is not an involution")
    elements = []
    for subset in canonical_subsets(len(gens)):
        e = identity(n)
        for i in subset:
            e = compose(e, gens[i])
        elements.append(e)
    if len(set(elements)) != len(elements):
        raise GroupError(
            f"redundant generators: {', '.join(g.label for g in gens)} generate a group of order "
            f"{len(set(elements))} < {len(elements)}"
        )
    return ActionGroup(gens, tuple(elements))


@dataclass(frozen=True)
class FixedLocus:
    """Per-factor fixed sets: 'curve' (whole factor), an int point count, or 0 for empty."""

    per_factor: tuple[str | int, ...]

    @property
    def empty(self) -> bool:
        return any(p == 0 for p in self.per_factor)

    @property
    def dimension(self) -> int:
        if self.empty:
            return -1
        return sum(1 for p in self.per_factor if p == "curve")

    @property
    def n_points(self) -> int | None:
        """Number of isolated fixed points, or None if the locus is positive dimensional."""
        if self.empty:
            return 0
        if self.dimension > 0:
            return None
        n = 1
        for p in self.per_factor:
            n *= int(p)
        return n

    def __str__(self) -> str:
        if self.empty:
            return "empty"
        return " x ".join("E" if p == "curve" else f"{p} pts" for p in self.per_factor)


def fixed_locus(g: GroupElement) -> FixedLocus:
    if g.is_identity():
        raise GroupError("fixed locus of the identity is all of A")
    parts: list[str | int] = []
    for f in g.factors:
        if f.sign == -1:
            parts.append(4)  # 2z = c has four solutions mod the lattice
        elif f.shift.is_zero():
            parts.append("curve")
        else:
            parts.append(0)
    return FixedLocus(tuple(parts))


def is_free_on_A(group: ActionGroup) -> dict[str, bool]:
    """Verdict per nontrivial element (keyed by label) plus the conjunction under ``"all"``."""
    verdict = {g.label: fixed_locus(g).empty for g in group.elements[1:]}
    verdict["all"] = all(verdict.values())
    return verdict


def _symplectic_bits(c: HalfPeriod, d: HalfPeriod) -> int:
    # 4*E(c, d) for E(1/2, tau/2) = 1/4, reduced mod 2 (sign is irrelevant mod 2)
    return (c.b1 * d.b2 + c.b2 * d.b1) % 2


def commutation_pairing(g: GroupElement, h: GroupElement, degrees: Sequence[int] | None = None) -> int:
    """Commutator sign of the lifts of g and h to sections of a bundle of the given per-factor degrees.

    The default is degree 2 on every factor, i.e. the square of the product polarization.
    """
    if g.n_factors != h.n_factors:
        raise GroupError(f"factor-count mismatch: {g.n_factors} vs {h.n_factors}")
    degrees = tuple(degrees) if degrees is not None else (2,) * g.n_factors
    exponent = 0
    for f1, f2, deg in zip(g.factors, h.factors, degrees):
        if deg % 2:
            raise GroupError(f"half-period lifts need an even degree, got {deg}")
        exponent += (deg // 2) * _symplectic_bits(f1.shift, f2.shift)
    return -1 if exponent % 2 else 1


G0_GENERATOR_WORDS = ("i1", "i2", "i3", "i12", "i13", "i123")


def g0_elements() -> tuple[GroupElement, ...]:
    """All 64 elements of the group generated by i1, i2, i3, i12, i13, i123."""
    return generate_group([parse_word(w) for w in G0_GENERATOR_WORDS]).elements
