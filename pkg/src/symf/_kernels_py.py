"""Pure-Python reference kernels.

Same signatures and outputs as the compiled ``_ckernels`` module. Results
are canonical, so the two backends must agree bit for bit.
"""
from math import gcd

BACKEND = "python"


def _primitive(row):
    g = 0
    for v in row.values():
        g = gcd(g, v)
        if g == 1:
            break
    if g > 1:
        for k in row:
            row[k] //= g
    return row


def _combine(row, piv, col):
    # row <- a*row - b*piv, cancelling entry ``col``
    a = piv[col]
    b = row[col]
    if a != 1:
        out = {k: a * v for k, v in row.items()}
    else:
        out = dict(row)
    for k, v in piv.items():
        w = out.get(k, 0) - b * v
        if w:
            out[k] = w
        else:
            out.pop(k, None)
    return _primitive(out)


def rref(rows, ncols):
    """Integer reduced row echelon form of sparse rows.

    ``rows`` is an iterable of ``{column: int}`` dicts. Returns a list of
    ``(pivot_column, row)`` pairs in ascending pivot order; every row is a
    primitive integer vector with a positive pivot entry and zeros in all
    other pivot columns.
    """
    pivots = {}
    for raw in rows:
        row = {k: v for k, v in raw.items() if v}
        while row:
            c = min(row)
            p = pivots.get(c)
            if p is None:
                _primitive(row)
                if row[c] < 0:
                    row = {k: -v for k, v in row.items()}
                pivots[c] = row
                break
            row = _combine(row, p, c)
        if len(pivots) == ncols:
            break
    cols = sorted(pivots)
    for c in reversed(cols):
        row = pivots[c]
        for c2 in sorted(k for k in row if k != c and k in pivots):
            if c2 in row:
                row = _combine(row, pivots[c2], c2)
        if row[c] < 0:
            row = {k: -v for k, v in row.items()}
        pivots[c] = row
    return [(c, pivots[c]) for c in cols]


def mul_packed(keys_a, coeffs_a, keys_b, coeffs_b):
    """Product of two polynomials whose exponent vectors are packed into ints."""
    acc = {}
    get = acc.get
    for ka, ca in zip(keys_a, coeffs_a):
        for kb, cb in zip(keys_b, coeffs_b):
            k = ka + kb
            acc[k] = get(k, 0) + ca * cb
    keys = []
    coeffs = []
    for k, v in acc.items():
        if v:
            keys.append(k)
            coeffs.append(v)
    return keys, coeffs


def commutator_system(basis, op_items, D):
    """Nonzero entries of [psi_j, G] for each flat vector psi_j in ``basis``.

    ``op_items`` lists G as ``(row, col, value)`` triples on a D x D matrix;
    flat index ``u`` stands for entry ``(u // D, u % D)``. Returns
    ``{position: {j: value}}``.
    """
    rows = {}
    cols = {}
    for a, b, g in op_items:
        rows.setdefault(a, []).append((b, g))
        cols.setdefault(b, []).append((a, g))
    system = {}
    for j, psi in enumerate(basis):
        acc = {}
        for u, x in psi.items():
            a, m = divmod(u, D)
            for b, g in rows.get(m, ()):
                k = a * D + b
                acc[k] = acc.get(k, 0) + x * g
            for a2, g in cols.get(a, ()):
                k = a2 * D + m
                acc[k] = acc.get(k, 0) - g * x
        for k, v in acc.items():
            if v:
                system.setdefault(k, {})[j] = v
    return system
