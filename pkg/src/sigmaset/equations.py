"""Equations ``X + M = N`` over an integer space.

Solutions are searched concretely over the members of ``3^A``; the
closed-form pair ``S1 = N + R-``, ``S2 = R-`` with ``R = M + N-`` is always
re-verified before it is returned.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Optional, Tuple

from .core import SigmaSet, anti_set, fuse, intersection, is_entire, star_intersection
from .errors import DomainError, NotEntireError, NotFusionableError, SizeLimitError
from .spaces import GeneratedSpace, integer_space

log = logging.getLogger(__name__)

MAX_EXHAUSTIVE_UNIVERSE = 8
MAX_CHARACTERIZE_CARDINALITY = 3**5


def in_integer_space(s: SigmaSet, universe: SigmaSet) -> bool:
    """Membership in ``3^universe`` without enumerating it.

    Members are exactly the sets with no zero-naturals whose indices all
    occur in `universe`; the test suite checks this against enumeration.
    """
    return not s.zero and not ((s.pos | s.neg) & ~universe.support)


@dataclass(frozen=True)
class Equation:
    universe: SigmaSet
    m: SigmaSet
    n: SigmaSet

    def __post_init__(self):
        if not is_entire(self.universe):
            raise NotEntireError(f"universe {self.universe} is not entire")
        for name in ("m", "n"):
            s = getattr(self, name)
            if not in_integer_space(s, self.universe):
                raise DomainError(f"{name.upper()}={s} is not a member of 3^{self.universe}")

    def holds_for(self, x: SigmaSet) -> bool:
        return fuse(x, self.m).result == self.n


def is_fusionable(m: SigmaSet, n: SigmaSet) -> bool:
    return not star_intersection(m, n)


def solve_closed_form(eq: Equation) -> Optional[Tuple[SigmaSet, SigmaSet]]:
    """Return ``(S1, S2)`` or None if either fails to solve `eq`."""
    if not is_fusionable(eq.m, eq.n):
        raise NotFusionableError(
            f"M ^ N = {star_intersection(eq.m, eq.n)} is not empty"
        )
    r = fuse(eq.m, anti_set(eq.n)).result
    r_inv = anti_set(r)
    s1 = fuse(eq.n, r_inv).result
    s2 = r_inv
    bad = [name for name, s in (("S1", s1), ("S2", s2)) if not eq.holds_for(s)]
    if bad:
        log.warning("closed-form %s failed verification for %s", ", ".join(bad), eq)
        return None
    return s1, s2


@dataclass(frozen=True)
class SolutionSet:
    equation: Equation
    solutions: Tuple[SigmaSet, ...]
    closed_form: Optional[Tuple[SigmaSet, SigmaSet]]
    fusionable: bool

    def __post_init__(self):
        for s in self.solutions:
            if not self.equation.holds_for(s):
                raise ValueError(f"{s} does not solve {self.equation}")


def solve_exhaustive(eq: Equation) -> SolutionSet:
    if len(eq.universe) > MAX_EXHAUSTIVE_UNIVERSE:
        raise SizeLimitError(
            f"exhaustive search is limited to universes of {MAX_EXHAUSTIVE_UNIVERSE} atoms"
        )
    space = integer_space(eq.universe)
    found = tuple(x for x in space.members if eq.holds_for(x))
    fusionable = is_fusionable(eq.m, eq.n)
    closed = solve_closed_form(eq) if fusionable else None
    return SolutionSet(eq, found, closed, fusionable)


def verify_cancellation(x: SigmaSet, m: SigmaSet) -> bool:
    """Whether ``(X + M) + M- == X``."""
    m_inv = anti_set(m)
    if m_inv is None:
        raise NotEntireError(f"{m} has no antiset")
    return fuse(fuse(x, m).result, m_inv).result == x


@dataclass(frozen=True)
class CancellationReport:
    """Confusion counts between plain disjointness and cancellation."""

    pairs: int
    disjoint_holds: int
    disjoint_fails: int
    overlap_holds: int
    overlap_fails: int
    skipped: int
    counterexamples: Tuple[Tuple[SigmaSet, SigmaSet], ...]

    @property
    def implication_holds(self) -> bool:
        """``X & M == {}  =>  (X + M) + M- == X`` over the scanned pairs."""
        return self.disjoint_fails == 0

    @property
    def converse_holds(self) -> bool:
        return self.overlap_holds == 0


def characterize_cancellation(space: GeneratedSpace, keep: int = 10) -> CancellationReport:
    """Scan every ordered pair ``(X, M)`` of `space`.

    Pairs whose M has no antiset are counted as skipped.  Up to `keep`
    counterexamples to the disjointness implication are retained.
    """
    if space.cardinality > MAX_CHARACTERIZE_CARDINALITY:
        raise SizeLimitError(
            f"space of {space.cardinality} members exceeds the limit of "
            f"{MAX_CHARACTERIZE_CARDINALITY}"
        )
    counts = {(True, True): 0, (True, False): 0, (False, True): 0, (False, False): 0}
    skipped = 0
    counterexamples = []
    for x in space.members:
        for m in space.members:
            if not is_entire(m):
                skipped += 1
                continue
            disjoint = not intersection(x, m)
            holds = verify_cancellation(x, m)
            counts[(disjoint, holds)] += 1
            if disjoint and not holds and len(counterexamples) < keep:
                counterexamples.append((x, m))
    return CancellationReport(
        pairs=space.cardinality**2,
        disjoint_holds=counts[(True, True)],
        disjoint_fails=counts[(True, False)],
        overlap_holds=counts[(False, True)],
        overlap_fails=counts[(False, False)],
        skipped=skipped,
        counterexamples=tuple(counterexamples),
    )
