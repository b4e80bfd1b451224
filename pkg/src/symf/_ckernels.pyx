# distutils: language = c++
# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels: sparse integer RREF, packed polynomial products and
commutator systems for the Schur-Weyl oracle.

Arithmetic is done in 64-bit machine integers with explicit overflow
checks. Any overflow raises ``OverflowError`` and the caller reruns the
computation on the pure-Python backend, which uses unbounded integers.
"""
from libcpp.vector cimport vector
from libcpp.unordered_map cimport unordered_map
from libcpp.utility cimport pair
from cython.operator cimport dereference as deref, preincrement as inc

BACKEND = "cython"

cdef extern from *:
    """
    static inline int symf_mul_ovf(long long a, long long b, long long* r) {
        return __builtin_mul_overflow(a, b, r);
    }
    static inline int symf_sub_ovf(long long a, long long b, long long* r) {
        return __builtin_sub_overflow(a, b, r);
    }
    static inline int symf_add_ovf(long long a, long long b, long long* r) {
        return __builtin_add_overflow(a, b, r);
    }
    """
    bint symf_mul_ovf(long long a, long long b, long long* r) nogil
    bint symf_sub_ovf(long long a, long long b, long long* r) nogil
    bint symf_add_ovf(long long a, long long b, long long* r) nogil


cdef struct Entry:
    int col
    long long val

ctypedef vector[Entry] Row


cdef inline long long _gcd(long long a, long long b) nogil:
    if a < 0:
        a = -a
    if b < 0:
        b = -b
    while b:
        a, b = b, a % b
    return a


cdef int _primitive(Row& row) nogil:
    cdef long long g = 0
    cdef size_t i
    for i in range(row.size()):
        g = _gcd(g, row[i].val)
        if g == 1:
            return 0
    if g > 1:
        for i in range(row.size()):
            row[i].val = row[i].val // g
    return 0


cdef inline void _negate(Row& row) nogil:
    cdef size_t i
    for i in range(row.size()):
        row[i].val = -row[i].val


cdef int _combine(const Row& row, const Row& piv, int col, Row& out) except -1 nogil:
    # out <- a*row - b*piv with a = piv[col], b = row[col]; both rows sorted by column
    cdef long long a = 0, b = 0, x, y, w
    cdef size_t i = 0, j = 0
    cdef Entry e
    for i in range(piv.size()):
        if piv[i].col == col:
            a = piv[i].val
            break
    for i in range(row.size()):
        if row[i].col == col:
            b = row[i].val
            break
    out.clear()
    i = 0
    j = 0
    while i < row.size() or j < piv.size():
        if j >= piv.size() or (i < row.size() and row[i].col < piv[j].col):
            if symf_mul_ovf(a, row[i].val, &w):
                with gil:
                    raise OverflowError("rref entry overflow")
            e.col = row[i].col
            i += 1
        elif i >= row.size() or piv[j].col < row[i].col:
            if symf_mul_ovf(b, piv[j].val, &y):
                with gil:
                    raise OverflowError("rref entry overflow")
            w = -y
            e.col = piv[j].col
            j += 1
        else:
            if symf_mul_ovf(a, row[i].val, &x) or symf_mul_ovf(b, piv[j].val, &y) \
                    or symf_sub_ovf(x, y, &w):
                with gil:
                    raise OverflowError("rref entry overflow")
            e.col = row[i].col
            i += 1
            j += 1
        if w != 0:
            e.val = w
            out.push_back(e)
    _primitive(out)
    return 0


cdef long long _entry(const Row& row, int col) nogil:
    cdef size_t i
    for i in range(row.size()):
        if row[i].col == col:
            return row[i].val
        if row[i].col > col:
            return 0
    return 0


def rref(rows, int ncols):
    """Integer reduced row echelon form; see ``_kernels_py.rref``."""
    cdef vector[Row] piv = vector[Row](ncols)
    cdef vector[char] has = vector[char](ncols, 0)
    cdef Row row, tmp
    cdef Entry e
    cdef int npiv = 0, c, c2
    cdef size_t i
    cdef vector[int] order
    cdef list items
    for raw in rows:
        items = sorted((<int>k, v) for k, v in raw.items() if v)
        row.clear()
        for k, v in items:
            e.col = k
            e.val = v
            row.push_back(e)
        while row.size() > 0:
            c = row[0].col
            if not has[c]:
                _primitive(row)
                if row[0].val < 0:
                    _negate(row)
                piv[c] = row
                has[c] = 1
                npiv += 1
                break
            _combine(row, piv[c], c, tmp)
            row.swap(tmp)
        if npiv == ncols:
            break
    for c in range(ncols - 1, -1, -1):
        if not has[c]:
            continue
        order.clear()
        for i in range(piv[c].size()):
            c2 = piv[c][i].col
            if c2 != c and has[c2]:
                order.push_back(c2)
        for i in range(order.size()):
            c2 = order[i]
            if _entry(piv[c], c2) != 0:
                _combine(piv[c], piv[c2], c2, tmp)
                piv[c].swap(tmp)
        if _entry(piv[c], c) < 0:
            _negate(piv[c])
    out = []
    for c in range(ncols):
        if has[c]:
            d = {}
            for i in range(piv[c].size()):
                d[piv[c][i].col] = piv[c][i].val
            out.append((c, d))
    return out


def mul_packed(keys_a, coeffs_a, keys_b, coeffs_b):
    """Product of packed-exponent polynomials; see ``_kernels_py.mul_packed``."""
    cdef vector[long long] ka = keys_a
    cdef vector[long long] ca = coeffs_a
    cdef vector[long long] kb = keys_b
    cdef vector[long long] cb = coeffs_b
    cdef unordered_map[long long, long long] acc
    cdef unordered_map[long long, long long].iterator it
    cdef size_t i, j
    cdef long long prod, key, cur
    acc.reserve(min(ka.size() * kb.size(), <size_t>(1 << 16)))
    with nogil:
        for i in range(ka.size()):
            for j in range(kb.size()):
                if symf_mul_ovf(ca[i], cb[j], &prod):
                    with gil:
                        raise OverflowError("coefficient overflow")
                key = ka[i] + kb[j]
                it = acc.find(key)
                if it == acc.end():
                    acc[key] = prod
                else:
                    if symf_add_ovf(deref(it).second, prod, &cur):
                        with gil:
                            raise OverflowError("coefficient overflow")
                    deref(it).second = cur
    keys = []
    coeffs = []
    it = acc.begin()
    while it != acc.end():
        if deref(it).second != 0:
            keys.append(deref(it).first)
            coeffs.append(deref(it).second)
        inc(it)
    return keys, coeffs


ctypedef pair[long long, long long] Link


def commutator_system(basis, op_items, long long D):
    """Entries of [psi_j, G] for every basis vector; see ``_kernels_py.commutator_system``."""
    cdef vector[vector[Link]] rows = vector[vector[Link]](D)
    cdef vector[vector[Link]] cols = vector[vector[Link]](D)
    cdef unordered_map[long long, long long] acc
    cdef unordered_map[long long, long long].iterator it
    cdef long long a, b, g, m, u, x, k, t, cur
    cdef size_t i
    for a, b, g in op_items:
        rows[a].push_back(Link(b, g))
        cols[b].push_back(Link(a, g))
    system = {}
    for j, psi in enumerate(basis):
        acc.clear()
        for u, x in psi.items():
            a = u // D
            m = u % D
            for i in range(rows[m].size()):
                k = a * D + rows[m][i].first
                if symf_mul_ovf(x, rows[m][i].second, &t) or symf_add_ovf(acc[k], t, &cur):
                    raise OverflowError("commutator entry overflow")
                acc[k] = cur
            for i in range(cols[a].size()):
                k = cols[a][i].first * D + m
                if symf_mul_ovf(x, cols[a][i].second, &t) or symf_sub_ovf(acc[k], t, &cur):
                    raise OverflowError("commutator entry overflow")
                acc[k] = cur
        it = acc.begin()
        while it != acc.end():
            if deref(it).second != 0:
                key = deref(it).first
                entry = system.get(key)
                if entry is None:
                    system[key] = entry = {}
                entry[j] = deref(it).second
            inc(it)
    return system
