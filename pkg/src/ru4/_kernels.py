"""Bit-sliced exhaustive scans over Z4-submodules of Z4^(2n).

A code over R of length n is carried as the Z4-module of its images under
a + ub -> (b, a + b), coordinate i going to positions 2i, 2i+1.  In that
layout the Lee weight over R is the plain Z4 Lee weight, and the Gray
image is the classical Z4 Gray map applied position by position.

Vectors are stored as two uint64 bit planes (low bit, high bit), position j
at bit j, so 2n <= 64.  Addition mod 4 on planes: lo = l1 ^ l2,
hi = h1 ^ h2 ^ (l1 & l2).
"""

from __future__ import annotations

from typing import Iterator

import numpy as np

U64 = np.uint64
MAX_POSITIONS = 64
DEFAULT_BLOCK_BITS = 18


def to_gray_layout(v: np.ndarray, n: int) -> np.ndarray:
    """Map rows (a_0..a_{n-1} | b_0..b_{n-1}) to (b_0, a_0+b_0, b_1, a_1+b_1, ...)."""
    v = np.asarray(v, dtype=np.int64)
    a, b = v[:, :n], v[:, n:]
    out = np.empty_like(v)
    out[:, 0::2] = b
    out[:, 1::2] = (a + b) % 4
    return out


def from_gray_layout(w: np.ndarray, n: int) -> np.ndarray:
    w = np.asarray(w, dtype=np.int64)
    b, s = w[:, 0::2], w[:, 1::2]
    return np.hstack([(s - b) % 4, b])


def bitslice(w: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Rows of Z4 entries -> (low plane, high plane) as uint64 arrays."""
    w = np.asarray(w, dtype=np.int64)
    if w.shape[1] > MAX_POSITIONS:
        raise ValueError(f"bit planes hold at most {MAX_POSITIONS} positions, got {w.shape[1]}")
    weights = np.left_shift(np.ones(w.shape[1], dtype=U64), np.arange(w.shape[1], dtype=U64))
    lo = ((w & 1).astype(U64) * weights).sum(axis=1, dtype=U64)
    hi = (((w >> 1) & 1).astype(U64) * weights).sum(axis=1, dtype=U64)
    return lo, hi


def unslice(lo: np.ndarray, hi: np.ndarray, positions: int) -> np.ndarray:
    shifts = np.arange(positions, dtype=U64)
    lo_bits = (np.asarray(lo, dtype=U64)[:, None] >> shifts) & U64(1)
    hi_bits = (np.asarray(hi, dtype=U64)[:, None] >> shifts) & U64(1)
    return (lo_bits + 2 * hi_bits).astype(np.uint8)


def add_sliced(l1, h1, l2, h2):
    return l1 ^ l2, h1 ^ h2 ^ (l1 & l2)


def lee_weights(lo: np.ndarray, hi: np.ndarray) -> np.ndarray:
    # weights 0,1,2,1 for 0,1,2,3: one per odd entry, two per entry equal to 2
    return np.bitwise_count(lo).astype(np.int64) + 2 * np.bitwise_count(hi & ~lo).astype(np.int64)


_SPREAD_MASKS = (
    (16, U64(0x0000FFFF0000FFFF)),
    (8, U64(0x00FF00FF00FF00FF)),
    (4, U64(0x0F0F0F0F0F0F0F0F)),
    (2, U64(0x3333333333333333)),
    (1, U64(0x5555555555555555)),
)


def spread_bits(x: np.ndarray) -> np.ndarray:
    """Move bit j of a 32-bit value to bit 2j."""
    x = np.asarray(x, dtype=U64) & U64(0xFFFFFFFF)
    for shift, mask in _SPREAD_MASKS:
        x = (x | (x << U64(shift))) & mask
    return x


def gray_words(lo: np.ndarray, hi: np.ndarray) -> np.ndarray:
    """Binary images, Z4 position j -> bits 2j (beta) and 2j+1 (gamma = alpha ^ beta).

    Only valid for at most 32 positions (binary length <= 64).
    """
    return spread_bits(hi) | (spread_bits(lo ^ hi) << U64(1))


class SlicedModule:
    """Enumerates sum b_j g_j (b_j in {0,1}) over bit-sliced Z4 generators.

    The last ``low_bits`` generators are tabulated once; the remaining ones
    select an offset per block, so block ``i`` holds the elements whose high
    counter equals ``i``.  Block 0 starts with the zero vector.
    """

    def __init__(self, lo: np.ndarray, hi: np.ndarray, block_bits: int = DEFAULT_BLOCK_BITS):
        self.k = len(lo)
        low = min(self.k, block_bits)
        self.high_lo = [int(x) for x in lo[: self.k - low]]
        self.high_hi = [int(x) for x in hi[: self.k - low]]
        tl = np.zeros(1, dtype=U64)
        th = np.zeros(1, dtype=U64)
        for gl, gh in zip(lo[self.k - low:], hi[self.k - low:]):
            nl, nh = add_sliced(tl, th, U64(gl), U64(gh))
            tl, th = np.concatenate([tl, nl]), np.concatenate([th, nh])
        self.table_lo, self.table_hi = tl, th

    @property
    def n_blocks(self) -> int:
        return 1 << len(self.high_lo)

    def offset(self, index: int) -> tuple[int, int]:
        ol = oh = 0
        for j, (gl, gh) in enumerate(zip(self.high_lo, self.high_hi)):
            if (index >> (len(self.high_lo) - 1 - j)) & 1:
                ol, oh = ol ^ gl, oh ^ gh ^ (ol & gl)
        return ol, oh

    def block(self, index: int) -> tuple[np.ndarray, np.ndarray]:
        ol, oh = self.offset(index)
        if ol == 0 and oh == 0:
            return self.table_lo, self.table_hi
        return add_sliced(self.table_lo, self.table_hi, U64(ol), U64(oh))

    def blocks(self, start: int = 0, stop: int | None = None) -> Iterator[tuple[int, np.ndarray, np.ndarray]]:
        stop = self.n_blocks if stop is None else min(stop, self.n_blocks)
        for i in range(start, stop):
            lo, hi = self.block(i)
            yield i, lo, hi


def min_nonzero_lee_weight(module: SlicedModule, start: int = 0, stop: int | None = None,
                           floor: int = 1) -> int | None:
    """Smallest Lee weight over nonzero elements in blocks [start, stop); None if none.

    Stops early once ``floor`` is reached.
    """
    best = None
    for i, lo, hi in module.blocks(start, stop):
        w = lee_weights(lo, hi)
        if i == 0:
            w = w[1:]
        if len(w):
            m = int(w.min())
            best = m if best is None else min(best, m)
            if best <= floor:
                break
    return best
