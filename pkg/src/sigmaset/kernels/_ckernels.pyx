# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels.  Same contract as ``_pykernels``."""

import numpy as np
cimport numpy as cnp
from libc.stdint cimport uint64_t, int64_t

cnp.import_array()


cdef extern from *:
    int popcount64 "__builtin_popcountll"(unsigned long long) nogil


cdef struct Masks:
    uint64_t p
    uint64_t n
    uint64_t z


cdef inline Masks _fuse(uint64_t ap, uint64_t an, uint64_t az,
                        uint64_t bp, uint64_t bn, uint64_t bz) noexcept nogil:
    cdef uint64_t gone = (ap & bn) | (an & bp)
    cdef Masks r
    r.p = (ap | bp) & ~gone
    r.n = (an | bn) & ~gone
    r.z = az | bz
    return r


cdef inline bint _same(Masks a, Masks b) noexcept nogil:
    return a.p == b.p and a.n == b.n and a.z == b.z


cdef inline int _cmp(const uint64_t[:, ::1] keys, Py_ssize_t i, Masks m) noexcept nogil:
    if keys[i, 0] != m.p:
        return -1 if keys[i, 0] < m.p else 1
    if keys[i, 1] != m.n:
        return -1 if keys[i, 1] < m.n else 1
    if keys[i, 2] != m.z:
        return -1 if keys[i, 2] < m.z else 1
    return 0


cdef inline bint _member(const uint64_t[:, ::1] keys, Masks m) noexcept nogil:
    cdef Py_ssize_t lo = 0, hi = keys.shape[0] - 1, mid
    cdef int c
    while lo <= hi:
        mid = (lo + hi) // 2
        c = _cmp(keys, mid, m)
        if c == 0:
            return True
        if c < 0:
            lo = mid + 1
        else:
            hi = mid - 1
    return False


def fuse_grid(const uint64_t[:, ::1] rows, const uint64_t[:, ::1] cols):
    cdef Py_ssize_t r = rows.shape[0], c = cols.shape[0], i, j
    out = np.zeros((r, c, 3), dtype=np.uint64)
    counts = np.zeros((r, c), dtype=np.int64)
    cdef uint64_t[:, :, ::1] o = out
    cdef int64_t[:, ::1] cnt = counts
    cdef Masks m
    with nogil:
        for i in range(r):
            for j in range(c):
                m = _fuse(rows[i, 0], rows[i, 1], rows[i, 2], cols[j, 0], cols[j, 1], cols[j, 2])
                o[i, j, 0] = m.p
                o[i, j, 1] = m.n
                o[i, j, 2] = m.z
                cnt[i, j] = popcount64(rows[i, 0] & cols[j, 1]) + popcount64(rows[i, 1] & cols[j, 0])
    return out, counts


def pair_scan(const uint64_t[:, ::1] elems, const uint64_t[:, ::1] sorted_keys):
    """``sorted_keys`` must be ``elems`` sorted lexicographically by row."""
    cdef Py_ssize_t k = elems.shape[0], i, j
    cdef long long missing = 0, noncommuting = 0
    identity = np.ones(k, dtype=np.uint8)
    cdef cnp.uint8_t[::1] ident = identity
    cdef Masks ab, ba, a, b
    with nogil:
        for i in range(k):
            a.p = elems[i, 0]; a.n = elems[i, 1]; a.z = elems[i, 2]
            for j in range(k):
                b.p = elems[j, 0]; b.n = elems[j, 1]; b.z = elems[j, 2]
                ab = _fuse(a.p, a.n, a.z, b.p, b.n, b.z)
                ba = _fuse(b.p, b.n, b.z, a.p, a.n, a.z)
                if not _member(sorted_keys, ab):
                    missing += 1
                if not _same(ab, ba):
                    noncommuting += 1
                if not _same(ab, b):
                    ident[i] = 0
                if not _same(ab, a):
                    ident[j] = 0
    return missing, noncommuting, identity


def inverse_scan(const uint64_t[:, ::1] elems, Py_ssize_t e):
    cdef Py_ssize_t k = elems.shape[0], i, j
    counts = np.zeros(k, dtype=np.int64)
    first = np.full(k, -1, dtype=np.int64)
    cdef int64_t[::1] cnt = counts
    cdef int64_t[::1] fst = first
    cdef Masks t, ab, ba
    t.p = elems[e, 0]; t.n = elems[e, 1]; t.z = elems[e, 2]
    with nogil:
        for i in range(k):
            for j in range(k):
                ab = _fuse(elems[i, 0], elems[i, 1], elems[i, 2], elems[j, 0], elems[j, 1], elems[j, 2])
                ba = _fuse(elems[j, 0], elems[j, 1], elems[j, 2], elems[i, 0], elems[i, 1], elems[i, 2])
                if _same(ab, t) and _same(ba, t):
                    if cnt[i] == 0:
                        fst[i] = j
                    cnt[i] += 1
    return counts, first


cdef inline bint _nonassoc(const uint64_t[:, ::1] el, Py_ssize_t x, Py_ssize_t y,
                           Py_ssize_t z) noexcept nogil:
    cdef Masks xy = _fuse(el[x, 0], el[x, 1], el[x, 2], el[y, 0], el[y, 1], el[y, 2])
    cdef Masks left = _fuse(xy.p, xy.n, xy.z, el[z, 0], el[z, 1], el[z, 2])
    cdef Masks yz = _fuse(el[y, 0], el[y, 1], el[y, 2], el[z, 0], el[z, 1], el[z, 2])
    cdef Masks right = _fuse(el[x, 0], el[x, 1], el[x, 2], yz.p, yz.n, yz.z)
    return not _same(left, right)


def assoc_scan(const uint64_t[:, ::1] elems, long long limit, long long budget):
    cdef Py_ssize_t k = elems.shape[0], x, y, z
    cdef long long checked = 0
    found = []
    if limit <= 0 or budget <= 0:
        return np.zeros((0, 3), dtype=np.int64), 0
    for z in range(k):
        for y in range(k):
            for x in range(k):
                checked += 1
                if _nonassoc(elems, x, y, z):
                    found.append((x, y, z))
                    if len(found) >= limit:
                        return np.array(found, dtype=np.int64).reshape(-1, 3), checked
                if checked >= budget:
                    return np.array(found, dtype=np.int64).reshape(-1, 3), checked
    return np.array(found, dtype=np.int64).reshape(-1, 3), checked


def assoc_check(const uint64_t[:, ::1] elems, const int64_t[:, ::1] triples, long long limit):
    cdef Py_ssize_t t = triples.shape[0], i
    cdef long long checked = 0
    found = []
    if limit <= 0:
        return np.zeros((0, 3), dtype=np.int64), 0
    for i in range(t):
        checked += 1
        if _nonassoc(elems, triples[i, 0], triples[i, 1], triples[i, 2]):
            found.append((triples[i, 0], triples[i, 1], triples[i, 2]))
            if len(found) >= limit:
                break
    return np.array(found, dtype=np.int64).reshape(-1, 3), checked
