import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from ru4.errors import NotAUnit
from ru4.ring import (
    ELEMENTS,
    MAXIMAL_IDEAL,
    ONE,
    U,
    ZERO,
    IdealLabel,
    RElem,
    ideal_contains,
    ideal_elements,
    is_unit,
    lee_weight_r,
    lee_weight_z4,
    r_add,
    r_mul,
    r_neg,
    try_inverse,
    units,
)

elems = st.sampled_from(ELEMENTS)


def el(a, b=0):
    return RElem.of(a, b)


def test_sixteen_elements():
    assert len(set(ELEMENTS)) == 16
    assert all(ELEMENTS[x.packed] is x for x in ELEMENTS)


def test_u_squared_is_zero():
    assert r_mul(U, U) == ZERO


def test_product_of_inverse_pair():
    assert r_mul(el(1, 1), el(1, 3)) == ONE


@given(elems)
def test_additive_inverse(x):
    assert r_add(x, r_neg(x)) == ZERO


@given(elems, elems, elems)
def test_ring_axioms(x, y, z):
    assert (x + y) + z == x + (y + z)
    assert (x * y) * z == x * (y * z)
    assert x * (y + z) == x * y + x * z
    assert x * y == y * x


def test_characteristic_four():
    for x in ELEMENTS:
        assert x + x + x + x == ZERO
    assert ONE + ONE + ONE != ZERO


def test_unit_examples():
    assert is_unit(el(3, 2))
    assert not is_unit(el(2, 3))
    assert try_inverse(el(1, 1)) == el(1, 3)


def test_inverse_of_non_unit_raises():
    with pytest.raises(NotAUnit):
        try_inverse(el(2, 1))


@pytest.mark.parametrize("x", units())
def test_inverse_times_unit_is_one(x):
    assert x * try_inverse(x) == ONE


def test_ideal_sizes():
    sizes = {label: len(ideal_elements(label)) for label in IdealLabel}
    assert sizes == {
        IdealLabel.ZERO: 1,
        IdealLabel.ONE: 16,
        IdealLabel.TWO: 4,
        IdealLabel.U: 4,
        IdealLabel.TWO_U: 2,
        IdealLabel.TWO_PLUS_U: 4,
        IdealLabel.TWO_AND_U: 8,
    }


def test_ideal_examples():
    assert ideal_elements(IdealLabel.ZERO) == {ZERO}
    assert ideal_contains(IdealLabel.U, el(0, 2))
    # (2+u)R = {0, 2u, 2+u, 2+3u}
    assert ideal_elements(IdealLabel.TWO_PLUS_U) == {el(0), el(0, 2), el(2, 1), el(2, 3)}


@pytest.mark.parametrize("label", list(IdealLabel))
def test_ideals_are_closed(label):
    s = ideal_elements(label)
    for x, y in itertools.product(s, s):
        assert x + y in s
    for r, x in itertools.product(ELEMENTS, s):
        assert r * x in s


def test_maximal_ideal_is_the_non_units():
    assert ideal_elements(MAXIMAL_IDEAL) == {x for x in ELEMENTS if not is_unit(x)}


def test_tags_round_trip():
    for label in IdealLabel:
        assert IdealLabel.from_tag(label.tag.lower()) is label
    with pytest.raises(ValueError):
        IdealLabel.from_tag("THREE")


def test_lee_weights():
    assert [lee_weight_z4(c) for c in range(4)] == [0, 1, 2, 1]
    assert lee_weight_r(ZERO) == 0
    assert lee_weight_r(U) == 2
    assert lee_weight_r(el(0, 2)) == 4


@given(elems)
def test_lee_weight_symmetric_and_definite(x):
    assert lee_weight_r(-x) == lee_weight_r(x)
    assert (lee_weight_r(x) == 0) == (x == ZERO)
    assert 0 <= lee_weight_r(x) <= 4


def test_text_form():
    assert str(el(3, 2)) == "3:2"
    assert RElem.parse("3:2") == el(3, 2)
    assert RElem.parse("2") == el(2)
    for bad in ("4:0", "x", "1:9"):
        with pytest.raises(ValueError):
            RElem.parse(bad)
