import random
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from symf import kernels
from symf import _kernels_py
from symf.schur_weyl import polarized_generators

from .conftest import BACKENDS

sparse_rows = st.integers(1, 8).flatmap(lambda ncols: st.tuples(
    st.just(ncols),
    st.lists(st.dictionaries(st.integers(0, ncols - 1), st.integers(-4, 4), max_size=ncols), max_size=8)))


def fraction_rref(rows, ncols):
    """Textbook Gauss-Jordan over Fractions, normalized to leading 1."""
    m = [[Fraction(r.get(c, 0)) for c in range(ncols)] for r in rows]
    pivots = []
    r = 0
    for c in range(ncols):
        p = next((i for i in range(r, len(m)) if m[i][c]), None)
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        lead = m[r][c]
        m[r] = [x / lead for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c]:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
    return [(c, m[i]) for i, c in enumerate(pivots)]


def normalized(reduced, ncols):
    out = []
    for c, row in reduced:
        lead = Fraction(row[c])
        out.append((c, [Fraction(row.get(k, 0)) / lead for k in range(ncols)]))
    return out


@given(sparse_rows)
def test_rref_matches_fraction_elimination(data):
    ncols, rows = data
    for b in BACKENDS:
        old = kernels.use_backend(b)
        try:
            reduced = kernels.rref(rows, ncols)
        finally:
            kernels.use_backend(old)
        assert normalized(reduced, ncols) == fraction_rref(rows, ncols)
        for c, row in reduced:
            assert row[c] > 0


@given(sparse_rows)
def test_nullspace_annihilated(data):
    ncols, rows = data
    basis = kernels.nullspace(rows, ncols)
    assert len(basis) + kernels.rank(rows, ncols) == ncols
    for vec in basis:
        for row in rows:
            assert sum(v * vec.get(k, 0) for k, v in row.items()) == 0


def test_backends_agree_on_rref(backend):
    rng = random.Random(7)
    rows = [{c: rng.randint(-3, 3) for c in range(30) if rng.random() < 0.2} for _ in range(40)]
    assert kernels.rref(rows, 30) == _kernels_py.rref(rows, 30)


def test_backends_agree_on_poly_mul(backend):
    rng = random.Random(3)
    a = {tuple(rng.randint(0, 4) for _ in range(3)): rng.randint(-9, 9) for _ in range(20)}
    b = {tuple(rng.randint(0, 4) for _ in range(3)): rng.randint(-9, 9) for _ in range(20)}
    expected = {}
    for ea, ca in a.items():
        for eb, cb in b.items():
            e = tuple(x + y for x, y in zip(ea, eb))
            expected[e] = expected.get(e, 0) + ca * cb
    expected = {e: c for e, c in expected.items() if c}
    assert kernels.poly_mul(a, b, 3) == expected


def test_poly_mul_negative_exponents(backend):
    a = {(-1, 2): 3}
    b = {(1, -2): 2, (0, 0): 1}
    assert kernels.poly_mul(a, b, 2) == {(0, 0): 6, (-1, 2): 3}


def test_backends_agree_on_commutator_system(backend):
    N, n = 2, 2
    D = N ** n
    basis = [{u: 1} for u in range(D * D)]
    for op in polarized_generators(N, n):
        items = [(a, b, g) for (a, b), g in op.matrix.items()]
        assert kernels.commutator_system(basis, items, D) == _kernels_py.commutator_system(basis, items, D)


def test_overflow_falls_back(backend):
    big = 1 << 70
    rows = [{0: big, 1: 3}, {0: 5, 1: big + 1}]
    assert kernels.rref(rows, 2) == _kernels_py.rref(rows, 2)
    assert kernels.poly_mul({(1,): big}, {(2,): big}, 1) == {(3,): big * big}
    near = (1 << 62) + 1
    assert kernels.poly_mul({(1,): near}, {(1,): 4}, 1) == {(2,): 4 * near}
    items = [(0, 1, big)]
    basis = [{1: big}]
    assert kernels.commutator_system(basis, items, 2) == _kernels_py.commutator_system(basis, items, 2)


def test_use_backend_rejects_unknown():
    with pytest.raises(ValueError):
        kernels.use_backend("fortran")
