from fractions import Fraction
from itertools import product

import pytest
from hypothesis import given, strategies as st

from symf import convert, generator, jacobi_trudi, omega
from symf.errors import DegreeMismatch, NonIntegralMultiplicity, NotHomogeneous
from symf.partition import conjugate, hook_dimension, partitions_of, z_factor
from symf.repsn import (
    ClassFunction, VirtualRep, character_table, character_value, decompose, frobenius,
    inner_product, inverse_frobenius, irreducible_character, k_of_F, regular_character,
    sign_character, sign_twist, tensor_power_character, trivial_character,
)

from .strategies import homogeneous


def test_character_examples():
    chi = irreducible_character([2, 1])
    assert [chi[[1, 1, 1]], chi[[2, 1]], chi[[3]]] == [2, 0, -1]
    for n in range(1, 7):
        assert irreducible_character([n]) == trivial_character(n)
        sgn = irreducible_character([1] * n)
        for mu in partitions_of(n):
            assert sgn[mu] == (-1) ** (n - len(mu))


def test_inner_product_examples():
    chi = irreducible_character([2, 1])
    assert inner_product(chi, chi) == 1
    assert inner_product(trivial_character(3), sign_character(3)) == 0
    xi = trivial_character(3)
    assert inner_product(chi, chi + xi) == inner_product(chi, chi) + inner_product(chi, xi)
    with pytest.raises(DegreeMismatch):
        inner_product(chi, trivial_character(2))


def test_decompose_examples():
    assert decompose(regular_character(3)) == VirtualRep({(3,): 1, (2, 1): 2, (1, 1, 1): 1})
    assert decompose(irreducible_character([2, 1])) == VirtualRep({(2, 1): 1})
    assert str(decompose(trivial_character(2) + sign_character(2))) == "[2] + [1,1]"
    half = ClassFunction(2, {(1, 1): Fraction(1), (2,): Fraction(0)})
    with pytest.raises(NonIntegralMultiplicity):
        decompose(half)


def test_frobenius_examples():
    for n in range(1, 7):
        assert frobenius(trivial_character(n)) == generator("h", [n])
        assert frobenius(sign_character(n)) == generator("e", [n])
    assert frobenius(irreducible_character([2, 1])) == jacobi_trudi([2, 1])


def test_inverse_frobenius_examples():
    assert inverse_frobenius(generator("h", [3])) == trivial_character(3)
    assert inverse_frobenius(generator("e", [3])) == sign_character(3)
    assert inverse_frobenius(generator("p", [1, 1, 1])) == regular_character(3)
    with pytest.raises(NotHomogeneous):
        inverse_frobenius(generator("h", [3]) + generator("h", [1]))


def test_sign_twist_examples():
    for n in range(1, 6):
        assert sign_twist(trivial_character(n)) == sign_character(n)
    chi = irreducible_character([3, 1])
    assert sign_twist(sign_twist(chi)) == chi
    assert frobenius(sign_twist(chi)) == generator("s", [2, 1, 1]) == omega(generator("s", [3, 1]))


def test_k_of_F_examples():
    assert k_of_F(VirtualRep({(2, 1): 1})) == generator("s", [2, 1])
    v = VirtualRep({(3,): 1, (1, 1, 1): -1})
    assert k_of_F(v) == convert(generator("h", [3]) - convert(generator("e", [3]), "h"), "s")
    assert not k_of_F(VirtualRep()).terms


@pytest.mark.parametrize("n", range(1, 7))
def test_character_table_orthogonality(n):
    table = character_table(n)
    for i, a in enumerate(table):
        for j, b in enumerate(table):
            assert inner_product(a, b) == (1 if i == j else 0)
    classes = list(partitions_of(n))
    for mu in classes:
        for nu in classes:
            col = sum(chi[mu] * chi[nu] for chi in table)
            assert col == (z_factor(mu) if mu == nu else 0)


@pytest.mark.parametrize("n", range(1, 6))
def test_frobenius_matches_jacobi_trudi(n):
    for lam in partitions_of(n):
        chi = irreducible_character(lam)
        assert frobenius(chi) == jacobi_trudi(lam)
        assert frobenius(sign_twist(chi)) == omega(frobenius(chi))
        assert chi[[1] * n] == hook_dimension(lam)


def test_conjugate_character_is_sign_twist():
    for n in range(1, 7):
        for lam in partitions_of(n):
            assert irreducible_character(conjugate(lam)) == sign_twist(irreducible_character(lam))


@given(st.integers(1, 5), st.sampled_from("mehps"), st.data())
def test_frobenius_round_trip(d, basis, data):
    f = data.draw(homogeneous(basis=basis, degree=d))
    if not f.terms:
        return
    assert frobenius(inverse_frobenius(f)) == convert(f, "p")
    chi = inverse_frobenius(f)
    assert inverse_frobenius(frobenius(chi)) == chi


def test_k_of_F_injective_on_small_degrees():
    # basis images are independent, so distinct VirtualReps of bounded
    # multiplicity have distinct images
    seen = {}
    lams = [lam for d in range(1, 4) for lam in partitions_of(d)]
    for mults in product(range(-1, 2), repeat=len(lams)):
        v = VirtualRep({lam: m for lam, m in zip(lams, mults)})
        key = tuple(sorted(k_of_F(v).terms.items()))
        assert key not in seen
        seen[key] = v
    for lam in partitions_of(4):
        image = k_of_F(VirtualRep({lam: 1}))
        assert image.terms == {lam: 1}


def test_tensor_square_splits():
    # (Q^2)^{tensor 2}: trace 4 at the identity, 2 on the swap; Sym^2 is 3-dim, Alt^2 is 1-dim
    chi = tensor_power_character(2, 2)
    assert decompose(chi) == VirtualRep({(2,): 3, (1, 1): 1})
    assert decompose(regular_character(2)) == VirtualRep({(2,): 1, (1, 1): 1})


def test_tensor_power_multiplicities_are_dimensions():
    # the multiplicity of [lam] in (k^N)^{tensor n} is the number of SSYT, i.e. s_lam(1^N)
    from symf import expand
    for N in range(1, 4):
        for n in range(1, 5):
            v = decompose(tensor_power_character(N, n))
            for lam in partitions_of(n):
                expected = sum(expand(generator("s", lam), N).terms.values())
                assert dict(v.items()).get(lam, 0) == expected


def test_json_round_trips():
    chi = irreducible_character([2, 1])
    assert ClassFunction.from_json(chi.to_json()) == chi
    v = VirtualRep({(2,): 3, (1, 1): -1})
    assert VirtualRep.from_json(v.to_json()) == v
    assert v.to_json() == {"terms": [{"partition": [2], "mult": "3"}, {"partition": [1, 1], "mult": "-1"}]}


def test_character_values_cached_consistently():
    assert character_value((3, 2), (5,)) == 0
    assert character_value((4, 1), (5,)) == -1
    assert character_value((2, 2), (3, 1)) == -1
