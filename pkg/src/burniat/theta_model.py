"""Symbolic character model of the sections of the square of the product polarization.

Each elliptic factor carries two basis sections theta^1, theta^2.  Flips act
trivially (all sections are symmetric); a shift by 1/2 acts with signs (+, -)
and a shift by tau/2 with (-, +).  Product sections theta_{j1 j2 j3} pick up
the product of the factor signs.
"""

from __future__ import annotations

from itertools import product
from typing import Sequence

from .affine_group import ActionGroup, FactorAction, GroupElement, parse_word
from .characters import Character, CharMultiset

__all__ = [
    "BASIS",
    "LEMMA_COLUMNS",
    "factor_sign",
    "theta_sign",
    "sign_table",
    "section_characters",
    "worked_sign_table",
    "lemma_table",
    "basis_label",
]

# theta_111, theta_211, theta_121, theta_112, theta_122, theta_212, theta_221, theta_222
BASIS: tuple[tuple[int, int, int], ...] = (
    (1, 1, 1),
    (2, 1, 1),
    (1, 2, 1),
    (1, 1, 2),
    (1, 2, 2),
    (2, 1, 2),
    (2, 2, 1),
    (2, 2, 2),
)
LEMMA_COLUMNS = ("i1", "i2", "i3", "i12", "i13", "i23", "i123")


def basis_label(v: Sequence[int]) -> str:
    return "θ" + "".join(str(j) for j in v)


def factor_sign(action: FactorAction, j: int) -> int:
    b1, b2 = action.shift.b1, action.shift.b2
    if j == 1:
        return -1 if b2 else 1
    if j == 2:
        return -1 if b1 else 1
    raise ValueError(f"factor basis index must be 1 or 2, got {j}")


def theta_sign(g: GroupElement, v: Sequence[int]) -> int:
    if len(v) != g.n_factors:
        raise ValueError(f"basis vector {tuple(v)} does not match {g.n_factors} factors")
    s = 1
    for action, j in zip(g.factors, v):
        s *= factor_sign(action, j)
    return s


def sign_table(columns: Sequence[GroupElement], basis: Sequence[Sequence[int]] = BASIS) -> list[list[int]]:
    """Rows indexed by basis vectors, columns by ``columns``."""
    return [[theta_sign(g, v) for g in columns] for v in basis]


def worked_sign_table(group: ActionGroup) -> list[list[int]]:
    return sign_table(group.generators)


def lemma_table() -> list[list[int]]:
    return sign_table([parse_word(w) for w in LEMMA_COLUMNS])


def section_characters(group: ActionGroup) -> CharMultiset:
    n = group.generators[0].n_factors
    chars = [Character(tuple(theta_sign(g, v) for g in group.generators)) for v in product((1, 2), repeat=n)]
    return CharMultiset(chars, group.rank)
