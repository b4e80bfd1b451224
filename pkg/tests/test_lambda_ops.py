from fractions import Fraction
from itertools import product

import pytest
from hypothesis import given, strategies as st

from symf import SymFunc, convert, generator
from symf.errors import DegreeCapExceeded
from symf.config import degree_cap_set
from symf.lambda_ops import (
    adams, lambda_power, omega, omega_routes, plethysm, plethysm_by_substitution, sigma_power,
)
from symf.partition import partitions_of, partitions_up_to

from .strategies import homogeneous, symfuncs

h1 = generator("h", [1])


def test_plethysm_examples():
    assert plethysm(generator("p", [2]), generator("p", [3])) == generator("p", [6])
    f = generator("s", [2, 1])
    assert plethysm(f, generator("p", [1])) == f
    assert plethysm(generator("p", [1]), f) == f
    assert convert(plethysm(generator("e", [2]), generator("h", [2])), "s").terms == {(3, 1): 1}


def test_plethysm_oracle_example():
    oracle = plethysm_by_substitution(generator("e", [2]), generator("h", [2]))
    assert convert(oracle, "s").terms == {(3, 1): 1}


def test_known_plethysms():
    # h2[h2] = s4 + s22 and h2[h3] = s6 + s42
    assert convert(plethysm(generator("h", [2]), generator("h", [2])), "s").terms == {(4,): 1, (2, 2): 1}
    assert convert(plethysm(generator("h", [2]), generator("h", [3])), "s").terms == {(6,): 1, (4, 2): 1}


def test_plethysm_degree_cap():
    with degree_cap_set(5):
        with pytest.raises(DegreeCapExceeded):
            plethysm(generator("h", [2]), generator("h", [3]))


def test_adams_examples():
    assert adams(2, generator("p", [3])) == generator("p", [6])
    f = generator("s", [2, 1])
    assert adams(1, f) == f
    assert adams(2, h1) == generator("p", [2])


@pytest.mark.parametrize("n", range(9))
def test_lambda_of_h1_is_e(n):
    assert convert(lambda_power(n, h1), "e").terms == generator("e", [n] if n else []).terms
    assert convert(sigma_power(n, h1), "h").terms == generator("h", [n] if n else []).terms


def test_power_zero_is_one():
    f = generator("s", [2, 1])
    assert lambda_power(0, f) == SymFunc.one("p")
    assert sigma_power(0, f) == SymFunc.one("p")


def test_square_splits_into_symmetric_and_exterior():
    assert sigma_power(2, h1) + lambda_power(2, h1) == convert(h1 * h1, "p")


def test_lambda_two_of_doubled_generator():
    f = generator("p", [1]) + generator("p", [1])
    expected = convert(generator("e", [2]) * 2 + generator("e", [1, 1]), "p")
    assert lambda_power(2, f) == expected


def test_omega_examples():
    assert omega(generator("e", [2, 1])) == generator("h", [2, 1])
    assert omega(generator("s", [3, 1])) == generator("s", [2, 1, 1])
    f = generator("s", [2, 1])
    assert omega(omega(f)) == f


@pytest.mark.parametrize("d", range(6))
def test_omega_routes_agree(d):
    for lam in partitions_of(d):
        for b in "mehps":
            routes = omega_routes(generator(b, lam))
            assert routes["e"] == routes["p"] == routes["s"]
            assert omega(generator(b, lam)) == routes["e"]


@pytest.mark.parametrize("m, n", list(product(range(1, 5), repeat=2)))
def test_adams_composition(m, n):
    for lam in partitions_up_to(4):
        if m * n * lam.degree > 20:
            continue
        for b in "sp":
            f = generator(b, lam)
            assert adams(m, adams(n, f)) == adams(m * n, f)


@given(st.integers(1, 3), symfuncs(basis="s", max_degree=2, max_terms=2),
       symfuncs(basis="s", max_degree=2, max_terms=2))
def test_adams_is_ring_map(n, f, g):
    fp, gp = convert(f, "p"), convert(g, "p")
    assert adams(n, fp * gp) == adams(n, fp) * adams(n, gp)
    assert adams(n, fp + gp) == adams(n, fp) + adams(n, gp)


@given(st.integers(0, 4), homogeneous(basis="s", degree=1, integral=True),
       homogeneous(basis="s", degree=2, integral=True))
def test_lambda_coproduct(k, f, g):
    fp, gp = convert(f, "p"), convert(g, "p")
    rhs = SymFunc.zero("p")
    for i in range(k + 1):
        rhs = rhs + lambda_power(i, fp) * lambda_power(k - i, gp)
    assert lambda_power(k, fp + gp) == rhs


@given(st.integers(0, 4), st.sampled_from([1, 3]), st.data())
def test_omega_swaps_lambda_and_sigma_in_odd_degree(n, d, data):
    f = data.draw(homogeneous(basis="s", degree=d, max_terms=2))
    assert omega(lambda_power(n, f)) == sigma_power(n, omega(f))


@given(st.integers(0, 4), homogeneous(basis="s", degree=2, max_terms=2))
def test_omega_commutes_with_lambda_in_even_degree(n, f):
    assert omega(lambda_power(n, f)) == lambda_power(n, omega(f))


def test_omega_duality_fails_on_constants():
    one = SymFunc.one("p")
    assert omega(lambda_power(2, one)) != sigma_power(2, omega(one))


@pytest.mark.parametrize("f, g, u", [
    (generator("h", [2]), generator("e", [2]), generator("p", [2])),
    (generator("e", [2]), generator("h", [1, 1]), generator("s", [2])),
    (generator("s", [2]), generator("p", [1]) + generator("p", [2]), generator("h", [2])),
])
def test_plethysm_associative(f, g, u):
    assert plethysm(f, plethysm(g, u)) == plethysm(plethysm(f, g), u)


def test_e_h_generating_functions_invert():
    for n in range(1, 9):
        total = SymFunc.zero("e")
        for i in range(n + 1):
            e = generator("e", [i] if i else [])
            h = convert(generator("h", [n - i] if n - i else []), "e")
            total = total + (e * h).scale((-1) ** (n - i))
        assert total == SymFunc.zero("e")


def test_substitution_oracle_needs_nonnegative_g():
    from symf.errors import SymfError
    with pytest.raises(SymfError):
        plethysm_by_substitution(generator("e", [2]), generator("p", [2]).scale(-1))


def test_substitution_with_rational_f():
    f = generator("p", [2])
    g = generator("h", [2])
    assert plethysm_by_substitution(f, g) == plethysm(f, g)
    f2 = SymFunc("p", {(1, 1): Fraction(1, 2), (2,): Fraction(1, 2)})  # h2
    assert plethysm_by_substitution(f2, g) == plethysm(f2, g)
