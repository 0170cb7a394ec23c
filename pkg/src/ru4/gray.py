"""Gray maps R -> Z4^2 -> F2^4, the cyclic and 4-quasi-cyclic shifts, weights.

A binary word is a tuple of 0/1 ints; position 0 is the leftmost bit of its
text form.  The 4-bit block of a + ub is (beta(b), gamma(b), beta(a+b),
gamma(a+b)), blocks concatenated in coordinate order, so rotating a vector
over R by one place rotates its image by four bits.
"""

from __future__ import annotations

from typing import Sequence

from .errors import BadLength, LengthMismatch
from .ring import ELEMENTS, RElem, lee_weight_r, r_neg

Bits = tuple[int, ...]

# c -> (alpha, beta, gamma) with c = alpha + 2 beta and alpha + beta + gamma = 0 mod 2
GRAY_TABLE: dict[int, tuple[int, int, int]] = {
    0: (0, 0, 0),
    1: (1, 0, 1),
    2: (0, 1, 1),
    3: (1, 1, 0),
}


def z4_gray(c: int) -> tuple[int, int]:
    """Classical Z4 Gray map: 0->00, 1->01, 2->11, 3->10."""
    _, beta, gamma = GRAY_TABLE[c % 4]
    return beta, gamma


psi = z4_gray


def phi_r_to_z4pair(x: RElem) -> tuple[int, int]:
    return x.b, (x.a + x.b) % 4


def gray_map(x: RElem) -> Bits:
    b, s = phi_r_to_z4pair(x)
    return z4_gray(b) + z4_gray(s)


GRAY_BLOCKS: tuple[Bits, ...] = tuple(gray_map(x) for x in ELEMENTS)
_BLOCK_TO_ELEM: dict[Bits, RElem] = {blk: x for x, blk in zip(ELEMENTS, GRAY_BLOCKS)}


def _self_test() -> None:
    for c, (alpha, beta, gamma) in GRAY_TABLE.items():
        if c != alpha + 2 * beta or (alpha + beta + gamma) % 2:
            raise AssertionError(f"Gray table row {c} is inconsistent")
    if len(_BLOCK_TO_ELEM) != 16:
        raise AssertionError("Gray map R -> F2^4 is not a bijection")


_self_test()


def gray_map_vec(v: Sequence[RElem]) -> Bits:
    return tuple(bit for x in v for bit in GRAY_BLOCKS[x.packed])


def gray_map_vec_inverse(w: Sequence[int]) -> tuple[RElem, ...]:
    if len(w) % 4:
        raise BadLength(f"binary word length {len(w)} is not a multiple of 4")
    return tuple(_BLOCK_TO_ELEM[tuple(w[i:i + 4])] for i in range(0, len(w), 4))


def cyclic_shift(v: Sequence) -> tuple:
    """(c0, ..., c_{n-1}) -> (c_{n-1}, c0, ..., c_{n-2})."""
    v = tuple(v)
    return v[-1:] + v[:-1]


sigma = cyclic_shift


def quasi_cyclic_shift(w: Sequence[int]) -> Bits:
    """Rotate a binary word right by one 4-bit block."""
    w = tuple(w)
    if len(w) < 4 or len(w) % 4:
        raise BadLength(f"4-quasi-cyclic shift needs a positive multiple of 4 bits, got {len(w)}")
    return w[-4:] + w[:-4]


nu = quasi_cyclic_shift


def lee_weight_vec(v: Sequence[RElem]) -> int:
    return sum(lee_weight_r(x) for x in v)


def lee_distance(v: Sequence[RElem], w: Sequence[RElem]) -> int:
    if len(v) != len(w):
        raise LengthMismatch(f"lengths differ: {len(v)} vs {len(w)}")
    return sum(lee_weight_r(x + r_neg(y)) for x, y in zip(v, w))


def hamming_weight(w: Sequence[int]) -> int:
    return sum(1 for bit in w if bit)


def hamming_distance(w1: Sequence[int], w2: Sequence[int]) -> int:
    if len(w1) != len(w2):
        raise LengthMismatch(f"lengths differ: {len(w1)} vs {len(w2)}")
    return sum(1 for a, b in zip(w1, w2) if a != b)


def word_to_str(w: Sequence[int]) -> str:
    return "".join("1" if bit else "0" for bit in w)


def word_from_str(text: str) -> Bits:
    text = text.strip()
    if set(text) - {"0", "1"}:
        raise ValueError(f"binary word may only contain 0 and 1: {text!r}")
    return tuple(int(ch) for ch in text)


def pack_word(w: Sequence[int]) -> int:
    """Pack bits into an int, position j at bit j."""
    return sum(1 << j for j, bit in enumerate(w) if bit)


def unpack_word(x: int, length: int) -> Bits:
    return tuple((x >> j) & 1 for j in range(length))
