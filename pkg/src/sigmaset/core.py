"""Atoms, sigma-sets and the fusion operator family.

A :class:`SigmaSet` is stored as three 64-bit masks, one per atom kind.
Bit ``i - 1`` of ``pos`` marks the natural ``i``, of ``neg`` the antinatural
``i*`` and of ``zero`` the zero-natural ``i_0``.  Exclusion of inverses is
then simply ``pos & neg == 0``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable, Iterator, NamedTuple, Optional

from .errors import DomainError, ProperClassError, SizeLimitError

MAX_INDEX = 64


class Kind(enum.IntEnum):
    # value doubles as the tie-break rank in canonical order
    ZERO = 0
    NATURAL = 1
    ANTI = 2


@dataclass(frozen=True, order=True)
class Atom:
    """A signed ground element: ``n``, ``n*`` or ``n_0``."""

    index: int
    kind: Kind = Kind.NATURAL

    def __post_init__(self):
        if not isinstance(self.index, int) or self.index < 1:
            raise DomainError(f"atom index must be a positive integer, got {self.index!r}")
        if self.index > MAX_INDEX:
            raise SizeLimitError(f"atom index {self.index} exceeds the maximum of {MAX_INDEX}")
        object.__setattr__(self, "kind", Kind(self.kind))

    def __str__(self):
        suffix = {Kind.NATURAL: "", Kind.ANTI: "*", Kind.ZERO: "_0"}[self.kind]
        return f"{self.index}{suffix}"

    def __repr__(self):
        return f"Atom({self})"


def anti_atom(a: Atom) -> Optional[Atom]:
    """Return the antielement of `a`, or None for zero-naturals."""
    if a.kind is Kind.NATURAL:
        return Atom(a.index, Kind.ANTI)
    if a.kind is Kind.ANTI:
        return Atom(a.index, Kind.NATURAL)
    return None


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length()
        mask ^= low


class SigmaSet:
    """Finite, immutable, canonically ordered collection of atoms.

    Construction from atoms that contain some ``x`` together with ``x*``
    raises :class:`ProperClassError`; annihilation only happens in
    :func:`fuse`.
    """

    __slots__ = ("pos", "neg", "zero")

    def __init__(self, atoms: Iterable[Atom] = ()):
        pos = neg = zero = 0
        for a in atoms:
            bit = 1 << (a.index - 1)
            if a.kind is Kind.NATURAL:
                pos |= bit
            elif a.kind is Kind.ANTI:
                neg |= bit
            else:
                zero |= bit
        if pos & neg:
            clash = next(_bits(pos & neg))
            raise ProperClassError(
                f"{{{clash}, {clash}*}} is a proper sigma-class, not a sigma-set"
            )
        object.__setattr__(self, "pos", pos)
        object.__setattr__(self, "neg", neg)
        object.__setattr__(self, "zero", zero)

    @classmethod
    def from_masks(cls, pos: int, neg: int, zero: int = 0) -> "SigmaSet":
        if pos & neg:
            raise ProperClassError("natural and antinatural masks overlap")
        if (pos | neg | zero) >> MAX_INDEX:
            raise SizeLimitError(f"atom index exceeds the maximum of {MAX_INDEX}")
        self = object.__new__(cls)
        object.__setattr__(self, "pos", pos)
        object.__setattr__(self, "neg", neg)
        object.__setattr__(self, "zero", zero)
        return self

    def __setattr__(self, name, value):
        raise AttributeError("SigmaSet is immutable")

    @property
    def masks(self) -> tuple[int, int, int]:
        return (self.pos, self.neg, self.zero)

    @property
    def support(self) -> int:
        """Mask of every index that carries some atom."""
        return self.pos | self.neg | self.zero

    @property
    def atoms(self) -> tuple[Atom, ...]:
        return tuple(self)

    def __iter__(self) -> Iterator[Atom]:
        for i in _bits(self.support):
            bit = 1 << (i - 1)
            if self.zero & bit:
                yield Atom(i, Kind.ZERO)
            if self.pos & bit:
                yield Atom(i, Kind.NATURAL)
            if self.neg & bit:
                yield Atom(i, Kind.ANTI)

    def __len__(self):
        return self.pos.bit_count() + self.neg.bit_count() + self.zero.bit_count()

    def __bool__(self):
        return bool(self.pos | self.neg | self.zero)

    def __contains__(self, a):
        if not isinstance(a, Atom):
            return False
        bit = 1 << (a.index - 1)
        mask = {Kind.NATURAL: self.pos, Kind.ANTI: self.neg, Kind.ZERO: self.zero}[a.kind]
        return bool(mask & bit)

    def __eq__(self, other):
        if not isinstance(other, SigmaSet):
            return NotImplemented
        return self.masks == other.masks

    def __hash__(self):
        return hash(self.masks)

    def sort_key(self) -> tuple:
        """Order by size, then lexicographically on canonical atoms."""
        return (len(self), tuple((a.index, a.kind) for a in self))

    def __str__(self):
        return "{" + ", ".join(str(a) for a in self) + "}"

    def __repr__(self):
        return f"SigmaSet({self})"

    def __reduce__(self):
        return (SigmaSet.from_masks, self.masks)


EMPTY = SigmaSet()


class FusionOutcome(NamedTuple):
    result: SigmaSet
    annihilation_count: int


def anti_set(a: SigmaSet) -> Optional[SigmaSet]:
    """Return the antiset of `a`, or None when `a` has zero-natural atoms."""
    if a.zero:
        return None
    return SigmaSet.from_masks(a.neg, a.pos)


def is_entire(a: SigmaSet) -> bool:
    return not a.zero


def star_intersection(a: SigmaSet, b: SigmaSet) -> SigmaSet:
    """Atoms of `a` whose antielement lies in `b`.  Not commutative."""
    return SigmaSet.from_masks(a.pos & b.neg, a.neg & b.pos)


def star_difference(a: SigmaSet, b: SigmaSet) -> SigmaSet:
    """Atoms of `a` that survive contact with `b`."""
    return SigmaSet.from_masks(a.pos & ~b.neg, a.neg & ~b.pos, a.zero)


def fuse(a: SigmaSet, b: SigmaSet) -> FusionOutcome:
    """Fusion of two sigma-sets, with the number of annihilated pairs.

    The result is the union of both star-differences; every atom of
    ``a ^ b`` is cancelled together with its partner in ``b``.
    """
    left = a.pos & b.neg
    right = a.neg & b.pos
    gone = left | right
    result = SigmaSet.from_masks(
        (a.pos | b.pos) & ~gone, (a.neg | b.neg) & ~gone, a.zero | b.zero
    )
    return FusionOutcome(result, left.bit_count() + right.bit_count())


def union(a: SigmaSet, b: SigmaSet) -> SigmaSet:
    """Plain element union; raises ProperClassError on an inverse pair."""
    pos = a.pos | b.pos
    neg = a.neg | b.neg
    if pos & neg:
        clash = next(_bits(pos & neg))
        raise ProperClassError(
            f"union contains {clash} and {clash}*: a proper sigma-class, not a sigma-set"
        )
    return SigmaSet.from_masks(pos, neg, a.zero | b.zero)


def is_subset(a: SigmaSet, b: SigmaSet) -> bool:
    return not (a.pos & ~b.pos or a.neg & ~b.neg or a.zero & ~b.zero)


def intersection(a: SigmaSet, b: SigmaSet) -> SigmaSet:
    """Plain element intersection (no annihilation involved)."""
    return SigmaSet.from_masks(a.pos & b.pos, a.neg & b.neg, a.zero & b.zero)
