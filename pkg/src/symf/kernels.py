"""Kernel backend selection.

The compiled ``_ckernels`` extension is used when it imports; otherwise, or
when ``SYMF_PURE_PYTHON`` is set, the pure-Python ``_kernels_py`` module is
used. The compiled path works in 64-bit integers and falls back to the
pure-Python path for any call that overflows.
"""
import os
from math import gcd

from . import _kernels_py

_compiled = None
if not os.environ.get("SYMF_PURE_PYTHON"):
    try:
        from . import _ckernels as _compiled
    except ImportError:  # extension not built
        _compiled = None

_impl = _compiled if _compiled is not None else _kernels_py


def backend():
    return _impl.BACKEND


def use_backend(name):
    """Switch backend to ``"cython"`` or ``"python"``; returns the previous name."""
    global _impl
    old = _impl.BACKEND
    if name == "python":
        _impl = _kernels_py
    elif name == "cython":
        if _compiled is None:
            raise RuntimeError("compiled kernels are not available")
        _impl = _compiled
    else:
        raise ValueError("unknown backend %r" % (name,))
    return old


def compiled_available():
    return _compiled is not None


def rref(rows, ncols):
    rows = list(rows)
    if _impl is not _kernels_py:
        try:
            return _impl.rref(rows, ncols)
        except OverflowError:
            pass
    return _kernels_py.rref(rows, ncols)


def nullspace(rows, ncols):
    """Canonical integer basis of ``{x : row . x = 0 for every row}``.

    One primitive vector per free column ``f`` (ascending), with a positive
    entry at ``f`` and zeros at the other free columns.
    """
    reduced = rref(rows, ncols)
    pivot_cols = {c for c, _ in reduced}
    hits = {}
    for c, row in reduced:
        pc = row[c]
        for f, v in row.items():
            if f != c:
                hits.setdefault(f, []).append((c, pc, v))
    basis = []
    for f in range(ncols):
        if f in pivot_cols:
            continue
        col = hits.get(f, ())
        scale = 1
        for _, pc, _ in col:
            scale = scale * pc // gcd(scale, pc)
        vec = {f: scale}
        for c, pc, v in col:
            vec[c] = -v * (scale // pc)
        g = 0
        for x in vec.values():
            g = gcd(g, x)
        basis.append({k: x // g for k, x in vec.items()})
    return basis


def commutator_system(basis, op_items, D):
    """``{position: {j: value}}`` for the commutators of each basis vector with G."""
    op_items = list(op_items)
    if _impl is not _kernels_py:
        try:
            return _impl.commutator_system(basis, op_items, D)
        except OverflowError:
            pass
    return _kernels_py.commutator_system(basis, op_items, D)


def rank(rows, ncols):
    return len(rref(rows, ncols))


def _pack(terms, nvars, bits):
    keys = []
    coeffs = []
    for e, c in terms.items():
        k = 0
        for i in range(nvars):
            k |= e[i] << (bits * i)
        keys.append(k)
        coeffs.append(c)
    return keys, coeffs


def poly_mul(a, b, nvars):
    """Multiply sparse polynomials given as ``{exponent tuple: int}`` dicts."""
    if not a or not b:
        return {}
    if nvars == 0:
        c = a[()] * b[()]
        return {(): c} if c else {}
    da = max(max(e) for e in a)
    db = max(max(e) for e in b)
    neg = min(min(e) for e in a) < 0 or min(min(e) for e in b) < 0
    bits = max(1, (da + db).bit_length())
    if neg or nvars * bits > 62:
        return _generic_mul(a, b)
    ka, ca = _pack(a, nvars, bits)
    kb, cb = _pack(b, nvars, bits)
    if _impl is not _kernels_py:
        try:
            keys, coeffs = _impl.mul_packed(ka, ca, kb, cb)
        except OverflowError:
            keys, coeffs = _kernels_py.mul_packed(ka, ca, kb, cb)
    else:
        keys, coeffs = _kernels_py.mul_packed(ka, ca, kb, cb)
    mask = (1 << bits) - 1
    shifts = [bits * i for i in range(nvars)]
    return {tuple((k >> s) & mask for s in shifts): c for k, c in zip(keys, coeffs)}


def _generic_mul(a, b):
    acc = {}
    for ea, ca in a.items():
        for eb, cb in b.items():
            e = tuple(x + y for x, y in zip(ea, eb))
            acc[e] = acc.get(e, 0) + ca * cb
    return {e: c for e, c in acc.items() if c}
