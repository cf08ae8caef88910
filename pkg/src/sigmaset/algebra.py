"""Fusion tables and loop-axiom scans over generated spaces."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from . import kernels
from .core import FusionOutcome, SigmaSet, fuse
from .errors import SizeLimitError
from .spaces import GeneratedSpace

MAX_TABLE_AXIS = 1024
MAX_LOOP_CARDINALITY = 3**8
MAX_TRIPLE_SCAN_CARDINALITY = 3**6
# 81**3: every triple of 3^{1..4} is scanned, larger spaces are sampled
DEFAULT_TRIPLE_BUDGET = 3**12

Triple = Tuple[SigmaSet, SigmaSet, SigmaSet]


@dataclass(frozen=True)
class FusionTable:
    row_labels: Tuple[SigmaSet, ...]
    column_labels: Tuple[SigmaSet, ...]
    cells: Tuple[Tuple[FusionOutcome, ...], ...]
    # (row, col) -> (position i, annihilation count j) for every empty cell
    empty_cell_decorations: Dict[Tuple[int, int], Tuple[int, int]]

    def cell(self, r: int, c: int) -> FusionOutcome:
        return self.cells[r][c]


def fusion_table(rows: Sequence[SigmaSet], cols: Sequence[SigmaSet]) -> FusionTable:
    """Fuse every row label with every column label.

    Empty cells are numbered in row-major order; cell ``(r, c)`` gets the
    decoration ``(i, j)`` with ``j = |row ^ col|``.
    """
    rows, cols = tuple(rows), tuple(cols)
    if len(rows) > MAX_TABLE_AXIS or len(cols) > MAX_TABLE_AXIS:
        raise SizeLimitError(f"table axes are limited to {MAX_TABLE_AXIS} labels")
    out, counts = kernels.fuse_grid(kernels.to_array(rows), kernels.to_array(cols))
    out = out.tolist()
    counts = counts.tolist()
    cells = []
    decorations = {}
    for r in range(len(rows)):
        line = []
        for c in range(len(cols)):
            result = SigmaSet.from_masks(*out[r][c])
            line.append(FusionOutcome(result, counts[r][c]))
            if not result:
                decorations[(r, c)] = (len(decorations), counts[r][c])
        cells.append(tuple(line))
    return FusionTable(rows, cols, tuple(cells), decorations)


def _nonassociative(x: SigmaSet, y: SigmaSet, z: SigmaSet) -> bool:
    return fuse(fuse(x, y).result, z).result != fuse(x, fuse(y, z).result).result


def _witness_triples(space: GeneratedSpace, found: np.ndarray) -> List[Triple]:
    members = space.members
    triples = []
    for x, y, z in found.tolist():
        t = (members[x], members[y], members[z])
        # recheck with the reference operator, not the kernel
        if not _nonassociative(*t):
            raise RuntimeError(f"kernel reported a false associativity witness {t}")
        triples.append(t)
    return triples


@dataclass(frozen=True)
class LoopReport:
    """Outcome of exhaustive scans over one space.

    `inverses` maps each member to its unique two-sided inverse; it is
    None when the identity is missing or some inverse is not unique.
    When `sampled` is set, `associative` only reflects the sampled triples.
    """

    cardinality: int
    closure_holds: bool
    identity: Optional[SigmaSet]
    identity_unique: bool
    inverses_unique: bool
    inverses: Optional[Dict[SigmaSet, SigmaSet]]
    commutative: bool
    associative: bool
    nonassociative_witnesses: Tuple[Triple, ...]
    triples_checked: int
    sampled: bool

    @property
    def is_loop(self) -> bool:
        """Closure, unique identity, unique inverses and commutativity."""
        return (
            self.closure_holds
            and self.identity is not None
            and self.identity_unique
            and self.inverses_unique
            and self.commutative
        )


def verify_loop_axioms(
    space: GeneratedSpace,
    witness_limit: int = 1,
    triple_budget: int = DEFAULT_TRIPLE_BUDGET,
    seed: int = 0,
) -> LoopReport:
    k = space.cardinality
    if k > MAX_LOOP_CARDINALITY:
        raise SizeLimitError(f"space of {k} members exceeds the limit of {MAX_LOOP_CARDINALITY}")
    elems = space.mask_array
    missing, noncommuting, ident_flags = kernels.pair_scan(elems)

    candidates = np.flatnonzero(ident_flags).tolist()
    identity = space.members[candidates[0]] if candidates else None
    identity_unique = len(candidates) == 1

    inverses = None
    inverses_unique = False
    if identity is not None:
        counts, first = kernels.inverse_scan(elems, candidates[0])
        inverses_unique = bool(np.all(counts == 1))
        if inverses_unique:
            inverses = {space.members[i]: space.members[j] for i, j in enumerate(first.tolist())}

    sampled = k**3 > triple_budget
    if not sampled:
        found, checked = kernels.assoc_scan(elems, witness_limit, triple_budget)
    else:
        rng = np.random.default_rng(seed)
        triples = rng.integers(0, k, size=(triple_budget, 3), dtype=np.int64)
        found, checked = kernels.assoc_check(elems, triples, witness_limit)
    witnesses = _witness_triples(space, found)
    return LoopReport(
        cardinality=k,
        closure_holds=missing == 0,
        identity=identity,
        identity_unique=identity_unique,
        inverses_unique=inverses_unique,
        inverses=inverses,
        commutative=noncommuting == 0,
        associative=not witnesses,
        nonassociative_witnesses=tuple(witnesses),
        triples_checked=int(checked),
        sampled=sampled,
    )


def find_nonassociative_triples(space: GeneratedSpace, limit: int) -> List[Triple]:
    """Up to `limit` triples with ``(X+Y)+Z != X+(Y+Z)``.

    Triples are scanned with Z slowest and X fastest over member order.
    """
    k = space.cardinality
    if k > MAX_TRIPLE_SCAN_CARDINALITY:
        raise SizeLimitError(
            f"space of {k} members exceeds the triple-scan limit of {MAX_TRIPLE_SCAN_CARDINALITY}"
        )
    found, _ = kernels.assoc_scan(space.mask_array, limit, k**3)
    return _witness_triples(space, found)
