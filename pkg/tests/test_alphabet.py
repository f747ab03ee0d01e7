import itertools

import pytest
from hypothesis import given, strategies as st

from oracles import gf_add, gf_mul, reducible_monics
from pairsym.alphabet import (AbelianGroup, Alphabet, field_of_order, is_irreducible, is_prime,
                              make_field, make_product, make_ring, prime_power,
                              smallest_irreducible)
from pairsym.errors import InvalidParameter, NonInvertible

FIELDS = [(2, 1), (2, 2), (2, 3), (3, 1), (3, 2), (5, 1), (2, 4), (7, 1)]


def test_ring_examples():
    z2, z6 = make_ring(2), make_ring(6)
    assert z2.add(1, 1) == 0
    assert z6.add(4, 5) == 3
    assert z6.mul(4, 5) == 2
    assert z6.inv(5) == 5


def test_ring_rejects_small_order():
    with pytest.raises(InvalidParameter):
        make_ring(1)


def test_field_rejects_composite_characteristic():
    with pytest.raises(InvalidParameter):
        make_field(4, 1)


def test_gf4_modulus_and_product():
    gf4 = make_field(2, 2)
    assert gf4.modulus == (1, 1, 1)
    assert gf4.mul(2, 2) == 3  # x * x = x + 1


@pytest.mark.parametrize("p,m", [(2, 2), (2, 3), (2, 4), (3, 2), (3, 3), (5, 2)])
def test_modulus_is_smallest_irreducible(p, m):
    reducible = reducible_monics(p, m)
    candidates = [tuple(lo) + (1,) for lo in itertools.product(range(p), repeat=m)]
    expected = next(c for c in candidates if c not in reducible)
    assert smallest_irreducible(p, m) == expected
    assert make_field(p, m).modulus == expected


def test_gf9_modulus():
    assert make_field(3, 2).modulus == (1, 0, 1)  # x^2 + 1


@pytest.mark.parametrize("p,m", [(2, 3), (3, 2), (2, 4)])
def test_irreducibility_matches_factor_enumeration(p, m):
    reducible = reducible_monics(p, m)
    for lo in itertools.product(range(p), repeat=m):
        poly = tuple(lo) + (1,)
        assert is_irreducible(poly, p) == (poly not in reducible)


@pytest.mark.parametrize("p,m", FIELDS)
def test_field_tables_match_polynomial_oracle(p, m):
    f = make_field(p, m)
    for a in range(f.q):
        for b in range(f.q):
            assert f.mul(a, b) == gf_mul(a, b, p, m, f.modulus)
            assert f.add(a, b) == gf_add(a, b, p, m)


@pytest.mark.parametrize("p,m", FIELDS)
def test_nonzero_elements_form_a_group(p, m):
    f = make_field(p, m)
    nonzero = set(range(1, f.q))
    for a in nonzero:
        assert {f.mul(a, b) for b in nonzero} == nonzero
        assert f.mul(a, f.inv(a)) == 1


@pytest.mark.parametrize("alphabet", [make_ring(6), make_ring(4), make_field(2, 2),
                                      make_field(3, 2), make_product([make_ring(3), make_ring(2)])],
                         ids=repr)
def test_ring_axioms_exhaustive(alphabet):
    s = range(alphabet.q)
    add, mul = alphabet.add, alphabet.mul
    for a, b, c in itertools.product(s, repeat=3):
        assert add(add(a, b), c) == add(a, add(b, c))
        assert mul(mul(a, b), c) == mul(a, mul(b, c))
        assert mul(a, add(b, c)) == add(mul(a, b), mul(a, c))
    for a, b in itertools.product(s, repeat=2):
        assert add(a, b) == add(b, a) and mul(a, b) == mul(b, a)
    for a in s:
        assert add(a, alphabet.neg(a)) == 0
        assert mul(a, alphabet.one()) == a


def test_inverse_errors():
    with pytest.raises(ZeroDivisionError):
        make_field(2, 2).inv(0)
    with pytest.raises(ZeroDivisionError):
        make_ring(5).inv(0)
    with pytest.raises(NonInvertible):
        make_ring(6).inv(2)


def test_field_encoding_roundtrip():
    f = make_field(3, 2)
    for s in range(f.q):
        coeffs = f.decode(s)
        assert f.encode(coeffs) == s
        assert s == sum(c * 3**i for i, c in enumerate(coeffs))


def test_product_encoding():
    a = make_product([make_ring(3), make_ring(4)])
    assert a.q == 12
    assert a.encode((2, 3)) == 2 * 4 + 3
    assert a.decode(11) == (2, 3)
    assert a.add(a.encode((2, 3)), a.encode((2, 1))) == a.encode((1, 0))


@pytest.mark.parametrize("a", [make_ring(7), make_field(2, 3),
                               make_product([make_ring(2), make_field(2, 2)])], ids=repr)
def test_json_roundtrip(a):
    assert Alphabet.from_json(a.to_json()) == a


def test_prime_helpers():
    assert [x for x in range(30) if is_prime(x)] == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]
    assert prime_power(8) == (2, 3) and prime_power(9) == (3, 2) and prime_power(12) is None
    assert field_of_order(8).q == 8
    with pytest.raises(InvalidParameter):
        field_of_order(6)


def test_abelian_group_mixed_radix():
    g = AbelianGroup([5, 2])
    assert g.order == 10
    assert g.encode((3, 1)) == 7 and g.decode(7) == (3, 1)
    assert g.add(g.encode((3, 1)), g.encode((4, 1))) == g.encode((2, 0))
    assert g.as_alphabet() == make_product([make_ring(5), make_ring(2)])
    assert AbelianGroup([6]).as_alphabet() == make_ring(6)


@given(st.integers(0, 9), st.integers(0, 9), st.integers(0, 9))
def test_group_add_matches_alphabet_add(a, b, c):
    g = AbelianGroup([5, 2])
    alpha = g.as_alphabet()
    assert g.add(a, b) == alpha.add(a, b)
    assert g.sub(g.add(a, c), c) == a
