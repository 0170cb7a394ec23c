import pytest
from hypothesis import given
from hypothesis import strategies as st

from ru4.errors import BothZero, EvenLength, NonMonicDivisor, NotADivisor
from ru4.poly import (
    NEG_INF,
    coprime_f2,
    crt_idempotents,
    degree,
    f2_divmod,
    f2_gcd,
    f2_mod,
    f2_mul,
    f2_mulmod,
    f2_xn1,
    factor_xn_minus_1_f2,
    factorize,
    format_generators,
    graeffe_hensel_lift,
    parse_generators,
    parse_z4_poly,
    r_poly,
    r_poly_mod_xn1,
    r_poly_mul,
    z4_divmod,
    z4_mod2,
    z4_mod_xn1,
    z4_mul,
    z4_poly,
    z4_prod,
    z4_xn1,
)
from ru4.ring import ONE, RElem

ODD = [n for n in range(1, 32, 2)]


def z4_polys(max_len=8):
    return st.lists(st.integers(0, 3), max_size=max_len).map(z4_poly)


def test_degree_of_zero_is_sentinel():
    assert degree(()) == NEG_INF
    assert degree((3, 1)) == 1


def test_z4_product_and_division():
    assert z4_mul((3, 1), (1, 1, 1)) == (3, 0, 0, 1)
    q, r = z4_divmod((3, 0, 0, 1), (3, 1))
    assert (q, r) == ((1, 1, 1), ())


def test_divide_by_non_monic():
    with pytest.raises(NonMonicDivisor):
        z4_divmod((1, 1), (0, 2))


@given(z4_polys(), z4_polys(5).filter(bool))
def test_divmod_identity(f, g):
    g = g[:-1] + (1,)
    q, r = z4_divmod(f, g)
    assert z4_poly(a + b for a, b in zip(*_pad(z4_mul(q, g), r))) == f
    assert degree(r) < degree(g)


def _pad(a, b):
    size = max(len(a), len(b))
    return a + (0,) * (size - len(a)), b + (0,) * (size - len(b))


def test_reduce_mod_xn_minus_1():
    x3 = r_poly([0, 0, 0, 1])
    assert r_poly_mod_xn1(x3, 3) == (ONE,)
    assert z4_mod_xn1((0, 0, 0, 0, 2), 3) == (0, 2)


def test_gcd_examples():
    assert f2_gcd(0b11, 0b111) == 1
    assert f2_gcd(0b1011, 0b1011) == 0b1011
    assert coprime_f2(0b1011, 0b1101)
    with pytest.raises(BothZero):
        f2_gcd(0, 0)


def test_factor_small_lengths():
    assert factor_xn_minus_1_f2(1) == [0b11]
    assert factor_xn_minus_1_f2(3) == [0b11, 0b111]
    assert factor_xn_minus_1_f2(7) == [0b11, 0b1011, 0b1101]
    with pytest.raises(EvenLength):
        factor_xn_minus_1_f2(2)


def _is_irreducible(f):
    d = f.bit_length() - 1
    power = 2
    for _ in range(1, d // 2 + 1):
        power = f2_mulmod(power, power, f)
        if f2_gcd(f, power ^ 2) != 1:
            return False
    return True


@pytest.mark.parametrize("n", ODD)
def test_factorization_postconditions(n):
    factors = factor_xn_minus_1_f2(n)
    prod = 1
    for f in factors:
        prod = f2_mul(prod, f)
        assert _is_irreducible(f)
    assert prod == f2_xn1(n)
    assert len(set(factors)) == len(factors)
    assert factors == sorted(factors, key=lambda f: (f.bit_length(), f))


def test_lifts_of_length_seven():
    assert graeffe_hensel_lift(0b11, 7) == (3, 1)
    assert graeffe_hensel_lift(0b1011, 7) == (3, 1, 2, 1)
    assert graeffe_hensel_lift(0b1101, 7) == (3, 2, 3, 1)


def test_lift_rejects_non_divisor():
    with pytest.raises(NotADivisor):
        graeffe_hensel_lift(0b111, 7)


@pytest.mark.parametrize("n", ODD)
def test_lift_postconditions(n):
    fact = factorize(n)
    for f2, lift in zip(fact.f2_factors, fact.z4_lifts):
        assert z4_mod2(lift) == f2
        assert lift[-1] == 1
        assert z4_divmod(z4_xn1(n), lift)[1] == ()
    assert z4_prod(fact.z4_lifts) == z4_xn1(n)


@pytest.mark.parametrize("n", [1, 3, 7, 9, 15])
def test_idempotent_identities(n):
    fact = factorize(n)
    es = fact.idempotents
    total = ()
    for i, e in enumerate(es):
        assert z4_mod_xn1(z4_mul(e, e), n) == e
        for j, g in enumerate(fact.z4_lifts):
            rem = z4_divmod(e, g)[1]
            assert rem == ((1,) if i == j else ())
        total = z4_mod_xn1(z4_poly(a + b for a, b in zip(*_pad(total, e))), n)
    assert total == (1,)


def test_idempotents_of_length_three():
    assert factorize(3).idempotents == ((3, 3, 3), (2, 1, 1))
    assert factorize(1).idempotents == ((1,),)
    assert crt_idempotents([(3, 1)], 1) == [(1,)]


def test_generator_text_round_trip():
    gens = parse_generators("2 ; 0:3")
    assert gens == [r_poly([2]), (RElem(0, 3),)]
    assert parse_generators(format_generators(gens)) == gens
    assert parse_z4_poly("3,1,2,1") == (3, 1, 2, 1)
    with pytest.raises(ValueError):
        parse_z4_poly("3,7")


@given(st.lists(st.integers(0, 15), max_size=6), st.lists(st.integers(0, 15), max_size=6))
def test_r_multiplication_commutes(a, b):
    f = r_poly(RElem.from_packed(v) for v in a)
    g = r_poly(RElem.from_packed(v) for v in b)
    assert r_poly_mul(f, g) == r_poly_mul(g, f)


@given(st.integers(1, 1 << 12), st.integers(1, 1 << 6))
def test_f2_divmod_identity(f, g):
    q, r = f2_divmod(f, g)
    assert f2_mul(q, g) ^ r == f
    assert r == f2_mod(f, g)
    assert r.bit_length() < g.bit_length()
