import pytest
from hypothesis import given, strategies as st

from symf import (
    LaurentPolyN, PolyN, SymFunc, collect, convert, expand, generator, is_symmetric,
    laurent_include, splitting_injectivity_report, truncate_var,
)
from symf.errors import BadArity, DegreeExceedsVariables, NonIntegralInput, NotSymmetric
from symf.partition import partitions_of, partitions_up_to

from .strategies import symfuncs


def poly(nvars, terms):
    return PolyN(nvars, {tuple(e): c for e, c in terms})


def test_expand_examples():
    assert expand(generator("e", [2]), 2) == poly(2, [((1, 1), 1)])
    assert expand(generator("e", [3]), 2) == PolyN(2)
    assert expand(generator("p", [2]), 3) == poly(3, [((2, 0, 0), 1), ((0, 2, 0), 1), ((0, 0, 2), 1)])
    assert expand(generator("s", [3, 1]), 2) == poly(2, [((3, 1), 1), ((2, 2), 1), ((1, 3), 1)])


def test_expand_rejects_non_integral():
    with pytest.raises(NonIntegralInput):
        expand(generator("p", [2]).scale(SymFunc.one().terms[()] / 2), 2)
    # p2/2 + p11/2 = h2 has integral expansion
    h2 = SymFunc("p", {(2,): "1/2", (1, 1): "1/2"})
    assert expand(h2, 2) == expand(generator("h", [2]), 2)


def test_truncate_examples():
    assert truncate_var(poly(2, [((1, 1), 1)]), 1) == PolyN(1)
    assert truncate_var(poly(2, [((2, 0), 1), ((0, 1), 1)]), 1) == poly(1, [((2,), 1)])
    h3 = generator("h", [3])
    assert truncate_var(expand(h3, 3), 2) == expand(h3, 2)
    with pytest.raises(BadArity):
        truncate_var(poly(2, [((1, 1), 1)]), 2)


def test_is_symmetric_examples():
    assert is_symmetric(poly(2, [((1, 1), 1)]))
    assert not is_symmetric(poly(2, [((2, 1), 1)]))
    assert is_symmetric(expand(generator("s", [2, 1]), 3))


def test_collect_examples():
    p = poly(2, [((2, 0), 1), ((0, 2), 1), ((1, 1), 1)])
    assert collect(p).terms == {(2,): 1, (1, 1): 1}
    assert collect(PolyN(2)) == SymFunc.zero("m")
    assert convert(collect(expand(generator("s", [2, 1]), 3)), "s").terms == {(2, 1): 1}


def test_collect_refuses():
    with pytest.raises(NotSymmetric):
        collect(poly(2, [((2, 1), 1)]))
    with pytest.raises(DegreeExceedsVariables):
        collect(expand(generator("h", [3]), 2))


def test_laurent_examples():
    p = poly(2, [((1, 1), 1)])
    q = laurent_include(p)
    assert isinstance(q, LaurentPolyN) and q.terms == p.terms
    assert laurent_include(PolyN(2)) == LaurentPolyN(2)
    a, b = poly(2, [((2, 0), 1)]), poly(2, [((0, 1), 1)])
    assert laurent_include(a * b) == laurent_include(a) * laurent_include(b)
    inv = LaurentPolyN(2, {(-1, 0): 1})
    assert (inv * laurent_include(poly(2, [((1, 0), 1)]))).terms == {(0, 0): 1}


def test_json_round_trip():
    p = expand(generator("s", [2, 1]), 2)
    assert p.to_json() == {"nvars": 2, "terms": [{"exps": [2, 1], "coeff": "1"},
                                                   {"exps": [1, 2], "coeff": "1"}]}
    assert PolyN.from_json(p.to_json()) == p


def test_splitting_report_examples():
    r3 = splitting_injectivity_report(3)
    assert r3.passed and r3.checked == 7
    r = splitting_injectivity_report(2, N=1)
    assert not r.passed
    assert ((1, 1), None) in [(tuple(a), b) for a, b in r.collisions]
    assert splitting_injectivity_report(1).passed


@pytest.mark.parametrize("N", range(1, 6))
def test_collect_inverts_expand(N):
    for lam in partitions_up_to(N):
        for b in "mehs":
            f = generator(b, lam)
            assert convert(collect(expand(f, N)), b).terms == f.terms


@pytest.mark.parametrize("m, N", [(m, N) for m in range(1, 9) for N in range(1, 9)])
def test_elementary_vanishing(m, N):
    assert (not expand(generator("e", [m]), N)) == (m > N)


def test_schur_polynomials_distinct():
    for N in range(1, 6):
        seen = {}
        for lam in partitions_up_to(5):
            if len(lam) <= N:
                key = expand(generator("s", lam), N).key()
                assert key not in seen
                seen[key] = lam


@given(symfuncs(basis="s", max_degree=2, integral=True), symfuncs(basis="s", max_degree=2, integral=True),
       st.integers(1, 5))
def test_expand_is_ring_map(f, g, N):
    assert expand(f * g, N) == expand(f, N) * expand(g, N)
    assert expand(f + g, N) == expand(f, N) + expand(g, N)


polys = st.builds(
    lambda terms: PolyN(3, {e: c for e, c in terms}),
    st.lists(st.tuples(st.tuples(*[st.integers(0, 3)] * 3), st.integers(-3, 3)), max_size=5))


@given(polys, st.integers(0, 2))
def test_truncation_commutes_with_laurent_inclusion(p, M):
    assert truncate_var(laurent_include(p), M) == laurent_include(truncate_var(p, M))


@given(polys, polys, polys)
def test_additive_cancellation(p, q, r):
    if p + r == q + r:
        assert p == q
    assert (p + r) - r == p


@given(polys, polys, st.integers(0, 2))
def test_truncation_is_ring_map(p, q, M):
    assert truncate_var(p * q, M) == truncate_var(p, M) * truncate_var(q, M)


def test_expand_degree_three_exhaustive():
    for lam in partitions_of(3):
        assert expand(generator("m", lam), 3).terms
