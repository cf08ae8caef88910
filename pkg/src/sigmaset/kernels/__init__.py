"""Hot loops over mask arrays, compiled when possible.

The Cython extension ``_ckernels`` is used if it was built; otherwise the
pure-Python ``_pykernels`` module is loaded.  Setting the environment
variable ``SIGMASET_PURE_PYTHON=1`` forces the fallback.
"""

import os

import numpy as np

from . import _pykernels

BACKEND = "python"
_impl = _pykernels

if os.environ.get("SIGMASET_PURE_PYTHON", "") in ("", "0"):
    try:
        from . import _ckernels
    except ImportError:
        pass
    else:
        _impl = _ckernels
        BACKEND = "cython"


def to_array(sets):
    """Pack an iterable of SigmaSets into a ``(k, 3)`` uint64 mask array."""
    return np.array([s.masks for s in sets], dtype=np.uint64).reshape(-1, 3)


def sorted_keys(arr):
    order = np.lexsort((arr[:, 2], arr[:, 1], arr[:, 0]))
    return np.ascontiguousarray(arr[order])


def fuse_grid(rows, cols, impl=None):
    return (impl or _impl).fuse_grid(rows, cols)


def pair_scan(elems, impl=None):
    return (impl or _impl).pair_scan(elems, sorted_keys(elems))


def inverse_scan(elems, e, impl=None):
    return (impl or _impl).inverse_scan(elems, e)


def assoc_scan(elems, limit, budget, impl=None):
    return (impl or _impl).assoc_scan(elems, limit, budget)


def assoc_check(elems, triples, limit, impl=None):
    triples = np.ascontiguousarray(triples, dtype=np.int64).reshape(-1, 3)
    return (impl or _impl).assoc_check(elems, triples, limit)


def available():
    """Kernel implementations importable in this environment, by name."""
    impls = {"python": _pykernels}
    try:
        from . import _ckernels
    except ImportError:
        pass
    else:
        impls["cython"] = _ckernels
    return impls
