"""Sigma-set algebra with antielements."""

from .core import (
    EMPTY,
    Atom,
    FusionOutcome,
    Kind,
    SigmaSet,
    anti_atom,
    anti_set,
    fuse,
    intersection,
    is_entire,
    is_subset,
    star_difference,
    star_intersection,
    union,
)
from .errors import (
    DomainError,
    NotEntireError,
    NotFusionableError,
    ParseError,
    ProperClassError,
    SigmaSetError,
    SizeLimitError,
)

__version__ = "0.1.0"
