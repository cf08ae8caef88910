"""Power sets, generated spaces, integer spaces and meta-spaces.

Also the two cardinality conjecture checkers: ``|3^A| = 3^n`` and
``|<2^(A+B), 2^(A+~B)>| = 2^|A| * 3^|B|``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Dict, List, Optional, Tuple

import numpy as np

from . import kernels
from .core import Atom, Kind, SigmaSet, anti_set, fuse, is_entire
from .errors import DomainError, NotEntireError, SizeLimitError

MAX_POWER_SET = 20
MAX_GRID_BITS = 20
MAX_CARDINALITY_N = 8
MAX_META_TOTAL = 10

_CHUNK_CELLS = 1 << 16


def power_set(a: SigmaSet) -> List[SigmaSet]:
    """All subsets of `a` in binary-counter order.

    Bit ``i`` of the counter selects the ``i``-th atom in canonical order,
    so the empty set comes first and `a` itself last.
    """
    atoms = a.atoms
    if len(atoms) > MAX_POWER_SET:
        raise SizeLimitError(
            f"power set of {len(atoms)} atoms exceeds the limit of {MAX_POWER_SET}"
        )
    subsets = [(0, 0, 0)]
    for atom in atoms:
        bit = 1 << (atom.index - 1)
        slot = {Kind.NATURAL: 0, Kind.ANTI: 1, Kind.ZERO: 2}[atom.kind]
        extended = []
        for masks in subsets:
            m = list(masks)
            m[slot] |= bit
            extended.append(tuple(m))
        subsets += extended
    return [SigmaSet.from_masks(*m) for m in subsets]


@dataclass(frozen=True)
class GeneratedSpace:
    """``{x + y : x in 2^left_base, y in 2^right_base}``, deduplicated.

    Members are ordered by size, then lexicographically on canonical atoms.
    """

    members: Tuple[SigmaSet, ...]
    left_base: SigmaSet
    right_base: SigmaSet

    @property
    def cardinality(self) -> int:
        return len(self.members)

    def __len__(self):
        return len(self.members)

    def __iter__(self):
        return iter(self.members)

    def __contains__(self, s):
        return s in self._index

    @cached_property
    def _index(self) -> Dict[SigmaSet, int]:
        return {s: i for i, s in enumerate(self.members)}

    def index(self, s: SigmaSet) -> int:
        return self._index[s]

    @cached_property
    def mask_array(self) -> np.ndarray:
        return kernels.to_array(self.members)


def _unique_fusions(left: np.ndarray, right: np.ndarray) -> np.ndarray:
    step = max(1, _CHUNK_CELLS // max(1, len(right)))
    seen = []
    for start in range(0, len(left), step):
        out, _ = kernels.fuse_grid(np.ascontiguousarray(left[start:start + step]), right)
        seen.append(np.unique(out.reshape(-1, 3), axis=0))
    if not seen:
        return np.zeros((0, 3), dtype=np.uint64)
    return np.unique(np.concatenate(seen), axis=0)


def generated_space(a: SigmaSet, b: SigmaSet) -> GeneratedSpace:
    if len(a) + len(b) > MAX_GRID_BITS:
        raise SizeLimitError(
            f"generated space grid 2^{len(a)} x 2^{len(b)} exceeds 2^{MAX_GRID_BITS} cells"
        )
    left = kernels.to_array(power_set(a))
    right = kernels.to_array(power_set(b))
    uniq = _unique_fusions(left, right)
    members = sorted(
        (SigmaSet.from_masks(int(p), int(n), int(z)) for p, n, z in uniq.tolist()),
        key=SigmaSet.sort_key,
    )
    return GeneratedSpace(tuple(members), a, b)


def integer_space(a: SigmaSet) -> GeneratedSpace:
    """The integer space ``<2^A, 2^(A-)>``."""
    inv = anti_set(a)
    if inv is None:
        raise NotEntireError(f"{a} is not entire: zero-natural atoms have no antielement")
    return generated_space(a, inv)


def meta_space(zero_part: SigmaSet, entire_part: SigmaSet) -> GeneratedSpace:
    """``<2^(A+B), 2^(A+B-)>`` for zero-natural `zero_part` A and entire B."""
    if zero_part.pos or zero_part.neg:
        raise DomainError(f"zero part {zero_part} must contain only zero-natural atoms")
    if not is_entire(entire_part):
        raise DomainError(f"{entire_part} must be entire (no zero-natural atoms)")
    return generated_space(
        fuse(zero_part, entire_part).result,
        fuse(zero_part, anti_set(entire_part)).result,
    )


def naturals(n: int) -> SigmaSet:
    return SigmaSet(Atom(i) for i in range(1, n + 1))


def zero_naturals(n: int) -> SigmaSet:
    return SigmaSet(Atom(i, Kind.ZERO) for i in range(1, n + 1))


@dataclass(frozen=True)
class CardinalityRow:
    params: Dict[str, int]
    observed: int
    predicted: int

    @property
    def match(self) -> bool:
        return self.observed == self.predicted


@dataclass(frozen=True)
class CardinalityReport:
    rows: Tuple[CardinalityRow, ...] = field(default_factory=tuple)

    @property
    def all_match(self) -> bool:
        return all(r.match for r in self.rows)


def check_cardinality_conjecture(max_n: int) -> CardinalityReport:
    """Compare ``|3^{1..n}|`` against ``3^n`` for ``n = 0..max_n``."""
    if max_n < 0:
        raise DomainError("max_n must be non-negative")
    if max_n > MAX_CARDINALITY_N:
        raise SizeLimitError(f"max_n={max_n} exceeds the limit of {MAX_CARDINALITY_N}")
    rows = []
    for n in range(max_n + 1):
        observed = integer_space(naturals(n)).cardinality
        rows.append(CardinalityRow({"n": n}, observed, 3**n))
    return CardinalityReport(tuple(rows))


def check_meta_conjecture(
    max_a: int, max_b: int, max_total: Optional[int] = None
) -> CardinalityReport:
    """Compare meta-space sizes against ``2^a * 3^b`` over a grid of (a, b).

    With `max_total`, only cells with ``a + b <= max_total`` are built.
    """
    if max_a < 0 or max_b < 0:
        raise DomainError("bounds must be non-negative")
    largest = max_a + max_b if max_total is None else min(max_a + max_b, max_total)
    if largest > MAX_META_TOTAL:
        raise SizeLimitError(
            f"largest cell a+b={largest} exceeds the limit of {MAX_META_TOTAL}"
        )
    rows = []
    for a in range(max_a + 1):
        for b in range(max_b + 1):
            if max_total is not None and a + b > max_total:
                continue
            observed = meta_space(zero_naturals(a), naturals(b)).cardinality
            rows.append(CardinalityRow({"a": a, "b": b}, observed, 2**a * 3**b))
    return CardinalityReport(tuple(rows))
