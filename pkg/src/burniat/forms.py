"""Group actions on holomorphic forms of A: dz characters, chi_A, type vectors.

The input everywhere is a :class:`FormData`, i.e. the sign of every dz on every
group element.  For products of elliptic curves the sign of dz_alpha under g is
the linear part of g on factor alpha; other factors supply their rows directly.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import prod
from typing import Sequence

from .affine_group import ActionGroup, GroupElement
from .characters import Character, CharMultiset, TraceVector, trivial

__all__ = [
    "FormData",
    "dz_signs",
    "form_data",
    "one_form_characters",
    "chi_A",
    "type_vector",
    "holomorphic_trace",
    "wedge2_characters",
    "h11_characters",
]


def dz_signs(g: GroupElement) -> tuple[int, ...]:
    return tuple(f.sign for f in g.factors)


@dataclass(frozen=True)
class FormData:
    """dz signs of a rank-r group: ``signs[k]`` is the signature of the k-th element in canonical order."""

    signs: tuple[tuple[int, ...], ...]
    labels: tuple[str, ...] = ()

    @property
    def rank(self) -> int:
        return len(self.signs).bit_length() - 1

    @property
    def n_forms(self) -> int:
        return len(self.signs[0])

    def characters(self) -> tuple[Character, ...]:
        """Character of each dz, read off on the generators (elements 1..r)."""
        r = self.rank
        return tuple(Character(tuple(self.signs[1 + i][a] for i in range(r))) for a in range(self.n_forms))


def form_data(group: ActionGroup, extra: Sequence[Sequence[int]] = ()) -> FormData:
    """dz signatures of the elliptic factors, followed by ``extra`` rows given per element."""
    rows = []
    for k, g in enumerate(group.elements):
        rows.append(dz_signs(g) + tuple(row[k] for row in extra))
    return FormData(tuple(rows), tuple(g.label for g in group.elements))


def one_form_characters(data: FormData) -> tuple[tuple[Character, ...], int]:
    """The characters of dz_1..dz_n and the number q of invariant forms."""
    chars = data.characters()
    q = sum(1 for ch in chars if ch.is_trivial())
    return chars, q


def chi_A(data: FormData) -> Character:
    """Character on the top holomorphic forms: product of the dz characters."""
    chars = data.characters()
    return Character(tuple(prod(ch.signs[i] for ch in chars) for i in range(data.rank)))


def type_vector(data: FormData) -> TraceVector:
    """Dimension of the +1 eigenspace on holomorphic 1-forms, per element."""
    return TraceVector(tuple(sum(1 for s in sig if s == 1) for sig in data.signs))


def holomorphic_trace(data: FormData) -> TraceVector:
    return TraceVector(tuple(sum(sig) for sig in data.signs))


def wedge2_characters(data: FormData) -> CharMultiset:
    chars = data.characters()
    return CharMultiset([a * b for a, b in combinations(chars, 2)], data.rank)


def h11_characters(data: FormData) -> CharMultiset:
    """U tensor conj(U) = n*1 + 2*wedge^2 U, valid since all characters are real."""
    n = data.n_forms
    w = wedge2_characters(data)
    return CharMultiset({trivial(data.rank): n}, data.rank) + w.scale(2)
