# cython: language_level=3
# distutils: language = c++
"""Compiled enumeration kernels for integer-coordinate point sets.

Mirrors _kernels_pure chunk for chunk: same tuples, same keys, same counts
(dictionary order is unspecified; every consumer sorts before rendering).
Keys are accumulated in C++ hash maps, so the enumeration loops run without
the GIL and chunks can execute on real threads.

Callers guarantee that coordinates fit the per-dimension bounds that keep
every squared distance and every d x d prefix determinant inside a signed
64-bit integer; there is no overflow checking here.
"""

from cython.operator cimport dereference as deref, preincrement as inc
from libcpp.pair cimport pair
from libcpp.unordered_map cimport unordered_map
from libcpp.vector cimport vector


cdef extern from "_census_map.hpp" namespace "rigidcensus" nogil:
    cdef cppclass CensusCounter:
        CensusCounter() except +
        void add(const long long* key, size_t length)
        size_t size() const
        vector[pair[vector[long long], long long]] items() const


cdef enum:
    MAX_POINTS_PER_TUPLE = 32
    MAX_EDGES = 128


cdef dict _export(CensusCounter& counter):
    cdef vector[pair[vector[long long], long long]] snapshot = counter.items()
    cdef dict out = {}
    cdef size_t i, j, length
    for i in range(snapshot.size()):
        length = snapshot[i].first.size()
        key = tuple([snapshot[i].first[j] for j in range(length)])
        out[key] = snapshot[i].second
    return out


def pair_counts_chunk(object coords_arr, Py_ssize_t lo, Py_ssize_t hi):
    """Squared-distance multiplicities over unordered pairs, i in [lo, hi)."""
    cdef long long[:, ::1] coords = coords_arr
    cdef Py_ssize_t n = coords.shape[0]
    cdef Py_ssize_t d = coords.shape[1]
    cdef Py_ssize_t i, j, a
    cdef long long s, diff
    cdef unordered_map[long long, long long] counts
    with nogil:
        for i in range(lo, hi):
            for j in range(i + 1, n):
                s = 0
                for a in range(d):
                    diff = coords[i, a] - coords[j, a]
                    s += diff * diff
                inc(counts[s])
    cdef dict out = {}
    cdef unordered_map[long long, long long].iterator it = counts.begin()
    while it != counts.end():
        out[deref(it).first] = deref(it).second
        inc(it)
    return out


cdef inline bint _has_repeat(Py_ssize_t* idx, Py_ssize_t k1) nogil:
    cdef Py_ssize_t a, b
    for a in range(k1):
        for b in range(a + 1, k1):
            if idx[a] == idx[b]:
                return True
    return False


cdef inline long long _dist2(long long[:, ::1] coords, Py_ssize_t i, Py_ssize_t j, Py_ssize_t d) nogil:
    cdef long long s = 0, diff
    cdef Py_ssize_t a
    for a in range(d):
        diff = coords[i, a] - coords[j, a]
        s += diff * diff
    return s


def graph_census_chunk(
    object coords_arr,
    Py_ssize_t k1,
    list edge_idx,
    bint include_degenerate,
    Py_ssize_t lo,
    Py_ssize_t hi,
):
    """Distance-vector multiplicities over tuples with leading index in [lo, hi)."""
    cdef long long[:, ::1] coords = coords_arr
    cdef Py_ssize_t n = coords.shape[0]
    cdef Py_ssize_t d = coords.shape[1]
    cdef Py_ssize_t m = len(edge_idx)
    if k1 > MAX_POINTS_PER_TUPLE or m > MAX_EDGES:
        raise ValueError("tuple size or edge count beyond compiled kernel limits")
    cdef Py_ssize_t[MAX_EDGES] ea, eb
    cdef Py_ssize_t x
    for x in range(m):
        ea[x] = edge_idx[x][0]
        eb[x] = edge_idx[x][1]
    cdef Py_ssize_t[MAX_POINTS_PER_TUPLE] idx
    cdef long long[MAX_EDGES] buf
    cdef Py_ssize_t i0, t
    cdef CensusCounter counter
    with nogil:
        for i0 in range(lo, hi):
            idx[0] = i0
            for t in range(1, k1):
                idx[t] = 0
            while True:
                if include_degenerate or not _has_repeat(idx, k1):
                    for x in range(m):
                        buf[x] = _dist2(coords, idx[ea[x]], idx[eb[x]], d)
                    counter.add(buf, m)
                t = k1 - 1
                while t >= 1:
                    idx[t] += 1
                    if idx[t] < n:
                        break
                    idx[t] = 0
                    t -= 1
                if t == 0:
                    break
    return _export(counter)


cdef long long _prefix_det(long long[:, ::1] coords, Py_ssize_t* idx, Py_ssize_t d) nogil:
    """Determinant of the d x d difference matrix of the first d+1 points."""
    cdef long long u[4][4]
    cdef Py_ssize_t t, a, base
    base = idx[0]
    for t in range(d):
        for a in range(d):
            u[t][a] = coords[idx[t + 1], a] - coords[base, a]
    if d == 1:
        return u[0][0]
    if d == 2:
        return u[0][0] * u[1][1] - u[0][1] * u[1][0]
    if d == 3:
        return (
            u[0][0] * (u[1][1] * u[2][2] - u[1][2] * u[2][1])
            - u[0][1] * (u[1][0] * u[2][2] - u[1][2] * u[2][0])
            + u[0][2] * (u[1][0] * u[2][1] - u[1][1] * u[2][0])
        )
    # d == 4: Laplace expansion along the first row
    cdef long long det = 0, minor
    cdef long long sub[3][3]
    cdef Py_ssize_t col, rr, cc, cpos
    for col in range(4):
        for rr in range(3):
            cpos = 0
            for cc in range(4):
                if cc == col:
                    continue
                sub[rr][cpos] = u[rr + 1][cc]
                cpos += 1
        minor = (
            sub[0][0] * (sub[1][1] * sub[2][2] - sub[1][2] * sub[2][1])
            - sub[0][1] * (sub[1][0] * sub[2][2] - sub[1][2] * sub[2][0])
            + sub[0][2] * (sub[1][0] * sub[2][1] - sub[1][1] * sub[2][0])
        )
        if col % 2 == 0:
            det += u[0][col] * minor
        else:
            det -= u[0][col] * minor
    return det


def congruence_chunk(
    object coords_arr,
    Py_ssize_t k1,
    Py_ssize_t d,
    bint want_sign,
    Py_ssize_t lo,
    Py_ssize_t hi,
):
    """Congruence-class sizes over tuples with leading index in [lo, hi).

    Returns (nonsingular, nonsingular, counts); the any-order variant is
    handled by the pure backend only.
    """
    cdef long long[:, ::1] coords = coords_arr
    cdef Py_ssize_t n = coords.shape[0]
    cdef Py_ssize_t m = k1 * (k1 - 1) // 2
    if k1 > MAX_POINTS_PER_TUPLE or m + 1 > MAX_EDGES or d > 4:
        raise ValueError("tuple size or dimension beyond compiled kernel limits")
    cdef Py_ssize_t[MAX_EDGES] pa, pb
    cdef Py_ssize_t x = 0, a, b
    for a in range(k1):
        for b in range(a + 1, k1):
            pa[x] = a
            pb[x] = b
            x += 1
    cdef Py_ssize_t key_len = m + 1 if want_sign else m
    cdef Py_ssize_t[MAX_POINTS_PER_TUPLE] idx
    cdef long long[MAX_EDGES] buf
    cdef Py_ssize_t i0, t
    cdef long long det, nonsingular = 0
    cdef CensusCounter counter
    with nogil:
        for i0 in range(lo, hi):
            idx[0] = i0
            for t in range(1, k1):
                idx[t] = 0
            while True:
                det = _prefix_det(coords, idx, d)
                if det != 0:
                    nonsingular += 1
                    for x in range(m):
                        buf[x] = _dist2(coords, idx[pa[x]], idx[pb[x]], d)
                    if want_sign:
                        buf[m] = 1 if det > 0 else -1
                    counter.add(buf, key_len)
                t = k1 - 1
                while t >= 1:
                    idx[t] += 1
                    if idx[t] < n:
                        break
                    idx[t] = 0
                    t -= 1
                if t == 0:
                    break
    return nonsingular, nonsingular, _export(counter)
