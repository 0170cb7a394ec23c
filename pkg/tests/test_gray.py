import itertools
import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from ru4.errors import BadLength, LengthMismatch
from ru4.gray import (
    GRAY_TABLE,
    cyclic_shift,
    gray_map,
    gray_map_vec,
    gray_map_vec_inverse,
    hamming_distance,
    hamming_weight,
    lee_distance,
    pack_word,
    phi_r_to_z4pair,
    psi,
    quasi_cyclic_shift,
    unpack_word,
    word_from_str,
    word_to_str,
)
from ru4.ring import ELEMENTS, RElem, lee_weight_r

vectors = st.lists(st.sampled_from(ELEMENTS), min_size=1, max_size=9)


def test_table_rows():
    assert GRAY_TABLE == {0: (0, 0, 0), 1: (1, 0, 1), 2: (0, 1, 1), 3: (1, 1, 0)}


def test_psi():
    assert [psi(c) for c in range(4)] == [(0, 0), (0, 1), (1, 1), (1, 0)]


def test_phi_pair():
    assert phi_r_to_z4pair(RElem(0, 0)) == (0, 0)
    assert phi_r_to_z4pair(RElem(1, 1)) == (1, 2)
    assert phi_r_to_z4pair(RElem(2, 0)) == (0, 2)


def test_block_examples():
    assert gray_map(RElem(0, 0)) == (0, 0, 0, 0)
    assert gray_map(RElem(0, 1)) == (0, 1, 0, 1)
    assert gray_map(RElem(2, 0)) == (0, 0, 1, 1)


def test_bijection():
    assert len({gray_map(x) for x in ELEMENTS}) == 16


def test_isometry_on_all_pairs():
    for x, y in itertools.product(ELEMENTS, ELEMENTS):
        assert hamming_distance(gray_map(x), gray_map(y)) == lee_weight_r(x - y)


def test_not_additive():
    one, two = RElem(1, 0), RElem(2, 0)
    summed = tuple(a ^ b for a, b in zip(gray_map(one), gray_map(one)))
    assert summed == (0, 0, 0, 0)
    assert gray_map(two) == (0, 0, 1, 1)
    assert summed != gray_map(two)


def test_vector_examples():
    assert gray_map_vec([RElem()] * 3) == (0,) * 12
    assert gray_map_vec([RElem(0, 1)] + [RElem()] * 2) == (0, 1, 0, 1) + (0,) * 8


def test_round_trip_length_two():
    for v in itertools.product(ELEMENTS, repeat=2):
        assert gray_map_vec_inverse(gray_map_vec(v)) == v


def test_inverse_rejects_bad_length():
    with pytest.raises(BadLength):
        gray_map_vec_inverse((0, 1, 1))


@given(vectors)
def test_shift_commutes_with_gray(v):
    assert gray_map_vec(cyclic_shift(v)) == quasi_cyclic_shift(gray_map_vec(v))


def test_shift_direction():
    assert cyclic_shift((1, 2, 3)) == (3, 1, 2)
    assert quasi_cyclic_shift(tuple(range(8))) == (4, 5, 6, 7, 0, 1, 2, 3)
    with pytest.raises(BadLength):
        quasi_cyclic_shift((0, 1))


@given(vectors)
def test_weight_preserved(v):
    assert hamming_weight(gray_map_vec(v)) == sum(lee_weight_r(x) for x in v)


def test_distance_length_check():
    with pytest.raises(LengthMismatch):
        hamming_distance((0, 1), (0,))
    with pytest.raises(LengthMismatch):
        lee_distance([RElem()], [RElem(), RElem()])


def test_word_text_and_packing():
    w = word_from_str("0101")
    assert word_to_str(w) == "0101"
    assert pack_word(w) == 0b1010
    assert unpack_word(0b1010, 4) == w
    with pytest.raises(ValueError):
        word_from_str("012")


def test_random_lee_distance_matches_hamming():
    rng = random.Random(1)
    for _ in range(200):
        v = [rng.choice(ELEMENTS) for _ in range(7)]
        w = [rng.choice(ELEMENTS) for _ in range(7)]
        assert lee_distance(v, w) == hamming_distance(gray_map_vec(v), gray_map_vec(w))
