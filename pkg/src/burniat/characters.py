"""Characters of elementary abelian 2-groups, trace vectors and multiplicities.

A group of rank r is presented by r generators; elements are indexed by
generator subsets in the canonical order of :func:`canonical_subsets`.  A
character is stored by its values on the generators, a trace vector by its
values on all 2**r elements.
"""

from __future__ import annotations

import re
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from math import prod
from typing import Iterable, Iterator, Mapping

from .affine_group import canonical_subsets

__all__ = [
    "NonRepresentation",
    "Character",
    "TraceVector",
    "CharMultiset",
    "all_characters",
    "trivial",
    "multiplicity",
    "decompose_trace",
    "trace_of_multiset",
    "char_product",
    "parse_multiset_expr",
]


class NonRepresentation(ValueError):
    """A trace vector whose character multiplicities are not non-negative integers."""

    def __init__(self, message: str, multiplicities: Mapping["Character", Fraction] | None = None):
        super().__init__(message)
        self.multiplicities = dict(multiplicities or {})


@dataclass(frozen=True, order=True)
class Character:
    signs: tuple[int, ...]

    def __post_init__(self) -> None:
        if any(s not in (1, -1) for s in self.signs):
            raise ValueError(f"character values must be +-1, got {self.signs}")

    @property
    def rank(self) -> int:
        return len(self.signs)

    @classmethod
    def parse(cls, text: str) -> Character:
        body = text.strip().replace("−", "-")
        if body.startswith("(") and body.endswith(")"):
            body = body[1:-1]
        if not body or any(c not in "+-" for c in body):
            raise ValueError(f"bad character string {text!r}")
        return cls(tuple(1 if c == "+" else -1 for c in body))

    def __call__(self, subset: Iterable[int]) -> int:
        return prod((self.signs[i] for i in subset), start=1)

    def values(self) -> tuple[int, ...]:
        return tuple(self(s) for s in canonical_subsets(self.rank))

    def is_trivial(self) -> bool:
        return all(s == 1 for s in self.signs)

    def __mul__(self, other: Character) -> Character:
        return char_product(self, other)

    def __str__(self) -> str:
        return "(" + "".join("+" if s == 1 else "-" for s in self.signs) + ")"

    __repr__ = __str__


def trivial(rank: int) -> Character:
    return Character((1,) * rank)


def all_characters(rank: int) -> tuple[Character, ...]:
    """All 2**rank characters, starting with the trivial one."""
    return tuple(Character(s) for s in product((1, -1), repeat=rank))


def char_product(a: Character, b: Character) -> Character:
    if a.rank != b.rank:
        raise ValueError(f"characters of different ranks: {a} and {b}")
    return Character(tuple(x * y for x, y in zip(a.signs, b.signs)))


@dataclass(frozen=True)
class TraceVector:
    values: tuple[int, ...]

    def __post_init__(self) -> None:
        n = len(self.values)
        if n == 0 or n & (n - 1):
            raise ValueError(f"trace vector length must be a power of two, got {n}")

    @property
    def rank(self) -> int:
        return len(self.values).bit_length() - 1

    @property
    def dim(self) -> int:
        return self.values[0]

    def __add__(self, other: TraceVector) -> TraceVector:
        _check_rank(self.rank, other.rank)
        return TraceVector(tuple(a + b for a, b in zip(self.values, other.values)))

    def __sub__(self, other: TraceVector) -> TraceVector:
        _check_rank(self.rank, other.rank)
        return TraceVector(tuple(a - b for a, b in zip(self.values, other.values)))

    def scale(self, k: int) -> TraceVector:
        return TraceVector(tuple(k * a for a in self.values))

    def __iter__(self) -> Iterator[int]:
        return iter(self.values)

    def __str__(self) -> str:
        v = [str(x) for x in self.values]
        if len(v) == 8:
            return f"({v[0]}|{' '.join(v[1:4])}|{' '.join(v[4:7])}|{v[7]})"
        return "(" + " ".join(v) + ")"


def _check_rank(r1: int, r2: int) -> None:
    if r1 != r2:
        raise ValueError(f"index mismatch: rank {r1} vs rank {r2}")


class CharMultiset(Mapping[Character, int]):
    """An immutable multiset of characters of a fixed rank."""

    __slots__ = ("_counts", "_rank")

    def __init__(self, counts: Mapping[Character, int] | Iterable[Character], rank: int | None = None):
        c = Counter(counts)
        for ch, m in c.items():
            if m < 0:
                raise ValueError(f"negative multiplicity {m} for {ch}")
        ranks = {ch.rank for ch in c}
        if rank is None:
            if len(ranks) != 1:
                raise ValueError("cannot infer rank of an empty or mixed multiset")
            rank = ranks.pop()
        elif ranks - {rank}:
            raise ValueError(f"characters of rank {ranks} in a rank-{rank} multiset")
        self._counts = {ch: m for ch, m in sorted(c.items(), key=lambda kv: _display_key(kv[0])) if m}
        self._rank = rank

    @property
    def rank(self) -> int:
        return self._rank

    @property
    def dim(self) -> int:
        return sum(self._counts.values())

    def __getitem__(self, ch: Character) -> int:
        return self._counts.get(ch, 0)

    def __iter__(self) -> Iterator[Character]:
        return iter(self._counts)

    def __len__(self) -> int:
        return len(self._counts)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, CharMultiset):
            return self._rank == other._rank and self._counts == other._counts
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self._rank, tuple(self._counts.items())))

    def __add__(self, other: CharMultiset) -> CharMultiset:
        _check_rank(self.rank, other.rank)
        return CharMultiset(Counter(self._counts) + Counter(other._counts), self._rank)

    def remove(self, ch: Character, k: int = 1) -> CharMultiset:
        if self[ch] < k:
            raise ValueError(f"cannot remove {k} x {ch} from multiset with {self[ch]}")
        c = dict(self._counts)
        c[ch] -= k
        return CharMultiset(c, self._rank)

    def twist(self, ch: Character) -> CharMultiset:
        """Multiply every member by ``ch``."""
        return CharMultiset(Counter({x * ch: m for x, m in self._counts.items()}), self._rank)

    def scale(self, k: int) -> CharMultiset:
        return CharMultiset({ch: k * m for ch, m in self._counts.items()}, self._rank)

    def elements(self) -> list[Character]:
        return [ch for ch, m in self._counts.items() for _ in range(m)]

    def __repr__(self) -> str:
        return f"CharMultiset({self})"

    def __str__(self) -> str:
        if not self._counts:
            return "0"
        parts = []
        nontriv = [(ch, m) for ch, m in self._counts.items() if not ch.is_trivial()]
        word = "".join(f"{m}{ch}" if m > 1 else str(ch) for ch, m in nontriv)
        if word:
            parts.append(word)
        m1 = self[trivial(self._rank)]
        if m1:
            parts.append("1" if m1 == 1 else f"{m1}·1")
        return " + ".join(parts)


def _display_key(ch: Character) -> tuple[int, ...]:
    # trivial first, then the order of itertools.product over (+, -)
    return tuple(0 if s == 1 else 1 for s in ch.signs)


def multiplicity(t: TraceVector, chi: Character) -> Fraction:
    """(1/|G|) sum_g chi(g) t(g); exact, possibly non-integral."""
    _check_rank(t.rank, chi.rank)
    total = sum(c * v for c, v in zip(chi.values(), t.values))
    return Fraction(total, len(t.values))


def decompose_trace(t: TraceVector) -> CharMultiset:
    mults = {chi: multiplicity(t, chi) for chi in all_characters(t.rank)}
    bad = {chi: m for chi, m in mults.items() if m.denominator != 1 or m < 0}
    if bad:
        detail = ", ".join(f"{chi}: {m}" for chi, m in bad.items())
        raise NonRepresentation(f"trace vector {t} is not a representation ({detail})", mults)
    return CharMultiset({chi: int(m) for chi, m in mults.items()}, t.rank)


def trace_of_multiset(m: CharMultiset) -> TraceVector:
    vals = [0] * (1 << m.rank)
    for chi, k in m.items():
        for i, v in enumerate(chi.values()):
            vals[i] += k * v
    return TraceVector(tuple(vals))


_TERM = re.compile(r"\s*(?:\+\s*)?(?:(\d+)\s*(?:·|\*)?\s*)?(\([+\-]+\)|1)\s*")


def parse_multiset_expr(text: str, rank: int) -> CharMultiset:
    """Parse table notation such as ``"(+-+)(+--) + 1"``, ``"2(---) + 1"`` or ``"3·1"``."""
    s = text.replace("−", "-").replace("\\cdot", "·").replace("\\mathbf 1", "1").strip()
    counts: Counter[Character] = Counter()
    pos = 0
    while pos < len(s):
        mt = _TERM.match(s, pos)
        if not mt or mt.end() == pos:
            raise ValueError(f"cannot parse {text!r} at position {pos}")
        k = int(mt.group(1)) if mt.group(1) else 1
        ch = trivial(rank) if mt.group(2) == "1" else Character.parse(mt.group(2))
        if ch.rank != rank:
            raise ValueError(f"{ch} in {text!r} is not a rank-{rank} character")
        counts[ch] += k
        pos = mt.end()
    return CharMultiset(counts, rank)
