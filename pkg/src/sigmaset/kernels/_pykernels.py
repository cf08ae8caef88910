"""Pure-Python kernels.  Same contract as the compiled ``_ckernels``.

Every array argument is a C-contiguous ``uint64`` array of shape ``(k, 3)``
holding ``(pos, neg, zero)`` masks.
"""

import numpy as np


def _fuse(a, b):
    ap, an, az = a
    bp, bn, bz = b
    left = ap & bn
    right = an & bp
    gone = left | right
    return ((ap | bp) & ~gone, (an | bn) & ~gone, az | bz), (left.bit_count() + right.bit_count())


def _rows(arr):
    return [tuple(row) for row in np.asarray(arr, dtype=np.uint64).tolist()]


def fuse_grid(rows, cols):
    r_items = _rows(rows)
    c_items = _rows(cols)
    out = np.zeros((len(r_items), len(c_items), 3), dtype=np.uint64)
    counts = np.zeros((len(r_items), len(c_items)), dtype=np.int64)
    for i, a in enumerate(r_items):
        line = []
        cline = []
        for b in c_items:
            res, cnt = _fuse(a, b)
            line.append(res)
            cline.append(cnt)
        if line:
            out[i] = line
            counts[i] = cline
    return out, counts


def pair_scan(elems, sorted_keys=None):
    items = _rows(elems)
    members = set(items)
    k = len(items)
    missing = 0
    noncommuting = 0
    identity = [1] * k
    for i, a in enumerate(items):
        for j, b in enumerate(items):
            res, _ = _fuse(a, b)
            if res not in members:
                missing += 1
            if res != _fuse(b, a)[0]:
                noncommuting += 1
            if res != b:
                identity[i] = 0
            if res != a:
                identity[j] = 0
    return missing, noncommuting, np.array(identity, dtype=np.uint8)


def inverse_scan(elems, e):
    items = _rows(elems)
    target = items[e]
    counts = np.zeros(len(items), dtype=np.int64)
    first = np.full(len(items), -1, dtype=np.int64)
    for i, a in enumerate(items):
        for j, b in enumerate(items):
            if _fuse(a, b)[0] == target and _fuse(b, a)[0] == target:
                if counts[i] == 0:
                    first[i] = j
                counts[i] += 1
    return counts, first


def _witnesses(found):
    return np.array(found, dtype=np.int64).reshape(-1, 3)


def assoc_scan(elems, limit, budget):
    items = _rows(elems)
    k = len(items)
    found = []
    checked = 0
    if limit <= 0 or budget <= 0:
        return _witnesses(found), checked
    for z in range(k):
        c = items[z]
        for y in range(k):
            yz = _fuse(items[y], c)[0]
            for x in range(k):
                a = items[x]
                checked += 1
                if _fuse(_fuse(a, items[y])[0], c)[0] != _fuse(a, yz)[0]:
                    found.append((x, y, z))
                    if len(found) >= limit:
                        return _witnesses(found), checked
                if checked >= budget:
                    return _witnesses(found), checked
    return _witnesses(found), checked


def assoc_check(elems, triples, limit):
    items = _rows(elems)
    found = []
    checked = 0
    if limit <= 0:
        return _witnesses(found), checked
    for x, y, z in np.asarray(triples, dtype=np.int64).tolist():
        checked += 1
        a, b, c = items[x], items[y], items[z]
        if _fuse(_fuse(a, b)[0], c)[0] != _fuse(a, _fuse(b, c)[0])[0]:
            found.append((x, y, z))
            if len(found) >= limit:
                break
    return _witnesses(found), checked
