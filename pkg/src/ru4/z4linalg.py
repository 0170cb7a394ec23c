"""Row reduction of Z4 matrices and enumeration of Z4-submodules.

:func:`standard_form` produces the reduced (Howell) generator matrix of a
row space: every row has a pivot entry 1 (an order-4 row) or 2, entries
above a pivot are reduced modulo it, and for every column c the rows whose
pivot lies right of c span exactly the module elements vanishing on
columns 0..c.  That last property is what makes

    sum_i c_i r_i,   c_i in Z4 for unit-pivot rows, c_i in {0, 1} for 2-pivot rows

a bijection onto the module, so the size is 4^k1 * 2^k2 and the reduced
matrix is a canonical fingerprint of the module.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from typing import Callable, Iterator, Sequence

import numpy as np

from .errors import NotClosed, TooLarge
from .limits import enum_bits_cap

_UNIT_INVERSE = {1: 1, 3: 3}


@dataclass(frozen=True, eq=False)
class StandardForm:
    """Reduced generator matrix: k1 unit-pivot rows, then k2 rows with pivot 2."""

    k1: int
    k2: int
    reduced: np.ndarray
    pivot_cols: tuple[int, ...]
    ncols: int

    @property
    def log2_size(self) -> int:
        return 2 * self.k1 + self.k2

    @property
    def size(self) -> int:
        return 1 << self.log2_size

    @property
    def unit_rows(self) -> np.ndarray:
        return self.reduced[: self.k1]

    @property
    def two_rows(self) -> np.ndarray:
        return self.reduced[self.k1:]

    def by_column(self) -> list[tuple[int, np.ndarray, bool]]:
        """(pivot column, row, unit pivot?) in ascending pivot-column order."""
        items = [(c, self.reduced[i], i < self.k1) for i, c in enumerate(self.pivot_cols)]
        return sorted(items, key=lambda t: t[0])

    def fingerprint(self) -> bytes:
        order = np.argsort(self.pivot_cols, kind="stable")
        return self.ncols.to_bytes(2, "little") + self.reduced[order].astype(np.uint8).tobytes()

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, StandardForm):
            return NotImplemented
        return self.fingerprint() == other.fingerprint()

    def __hash__(self) -> int:
        return hash(self.fingerprint())

    def contains(self, v: Sequence[int]) -> bool:
        residual, _ = decompose(self, np.asarray(v)[None, :])
        return not residual.any()

    def to_json(self) -> str:
        return json.dumps(self.reduced.astype(int).tolist())


def standard_form(m, ncols: int | None = None) -> StandardForm:
    """Reduce the rows of ``m`` (entries taken mod 4) to canonical form.

    Columns are processed left to right; a column takes a unit pivot when
    one is available, otherwise a pivot 2.  After a 2-pivot row p is used,
    2p (which vanishes on the pivot column) goes back into the pool.
    """
    pool = np.asarray(m, dtype=np.int64)
    if pool.ndim == 1:
        pool = pool[None, :] if pool.size else pool.reshape(0, ncols or 0)
    if ncols is None:
        ncols = pool.shape[1]
    if pool.size == 0:
        pool = np.zeros((0, ncols), dtype=np.int64)
    pool = pool % 4
    pool = np.unique(pool[pool.any(axis=1)], axis=0)

    pivots: list[tuple[int, np.ndarray, bool]] = []
    for c in range(ncols):
        if len(pool) == 0:
            break
        col = pool[:, c]
        odd = np.flatnonzero(col & 1)
        if len(odd):
            i = odd[0]
            p = pool[i] * _UNIT_INVERSE[int(col[i])] % 4
            pool = np.delete(pool, i, axis=0)
            pool = (pool - np.outer(pool[:, c], p)) % 4
            pivots.append((c, p, True))
        else:
            twos = np.flatnonzero(col)
            if not len(twos):
                continue
            i = twos[0]
            p = pool[i].copy()
            pool = np.delete(pool, i, axis=0)
            pool = (pool - np.outer(pool[:, c] // 2, p)) % 4
            pool = np.vstack([pool, (2 * p % 4)[None, :]])
            pivots.append((c, p, False))
        pool = pool[pool.any(axis=1)]
        if len(pool) > 1:
            pool = np.unique(pool, axis=0)

    # reduce entries above each pivot
    for j, (c, p, unit) in enumerate(pivots):
        for i in range(j):
            row = pivots[i][1]
            factor = row[c] if unit else row[c] // 2
            if factor:
                pivots[i] = (pivots[i][0], (row - factor * p) % 4, pivots[i][2])

    ordered = [t for t in pivots if t[2]] + [t for t in pivots if not t[2]]
    k1 = sum(1 for t in pivots if t[2])
    reduced = (
        np.array([t[1] for t in ordered], dtype=np.uint8)
        if ordered
        else np.zeros((0, ncols), dtype=np.uint8)
    )
    reduced.setflags(write=False)
    return StandardForm(k1, len(pivots) - k1, reduced, tuple(t[0] for t in ordered), ncols)


def module_size(sf: StandardForm) -> int:
    """log2 of the number of elements."""
    return sf.log2_size


def decompose(sf: StandardForm, vectors: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Reduce each row of ``vectors`` against ``sf``.

    Returns (residual, coefficients); a vector lies in the module iff its
    residual is zero, and then it equals sum(coefficients[:, j] * row_j) with
    the rows taken in :meth:`StandardForm.by_column` order.
    """
    v = np.asarray(vectors, dtype=np.int64) % 4
    steps = sf.by_column()
    coefs = np.zeros((len(v), len(steps)), dtype=np.int64)
    for j, (c, row, unit) in enumerate(steps):
        k = v[:, c] if unit else v[:, c] // 2
        coefs[:, j] = k
        v = (v - np.outer(k, row.astype(np.int64))) % 4
    return v, coefs


def contains_all(sf: StandardForm, vectors: np.ndarray) -> np.ndarray:
    residual, _ = decompose(sf, vectors)
    return ~residual.any(axis=1)


def _coefficient_ranges(sf: StandardForm) -> list[range]:
    return [range(4)] * sf.k1 + [range(2)] * sf.k2


def _check_cap(sf: StandardForm, cap: int | None) -> None:
    limit = enum_bits_cap(cap)
    if sf.log2_size > limit:
        raise TooLarge(
            f"module has 2^{sf.log2_size} elements, above the enumeration cap 2^{limit}"
        )


def enumerate_module(
    sf: StandardForm, cap: int | None = None, start: int = 0, stop: int | None = None
) -> Iterator[tuple[int, ...]]:
    """Yield module elements by a mixed-radix counter over the row coefficients.

    The first row's coefficient is the slowest digit.  ``start``/``stop``
    select a counter range so scans can be split across workers.
    """
    _check_cap(sf, cap)
    rows = sf.reduced.astype(np.int64)
    for coefs in itertools.islice(itertools.product(*_coefficient_ranges(sf)), start, stop):
        if rows.shape[0]:
            yield tuple(int(x) for x in (np.asarray(coefs) @ rows) % 4)
        else:
            yield (0,) * sf.ncols


def module_elements(sf: StandardForm, cap: int | None = None) -> np.ndarray:
    """All elements as a (size, ncols) uint8 array, in :func:`enumerate_module` order."""
    _check_cap(sf, cap)
    out = np.zeros((1, sf.ncols), dtype=np.uint8)
    for row, coefs in zip(sf.reduced, _coefficient_ranges(sf)):
        multiples = np.array([(k * row) % 4 for k in coefs], dtype=np.uint8)
        out = ((out[:, None, :] + multiples[None, :, :]) % 4).reshape(-1, sf.ncols)
    return out


def binary_generators(sf: StandardForm) -> np.ndarray:
    """Rows g_j such that sum b_j g_j (b_j in {0,1}, sum over Z4) hits every element once."""
    gens = []
    for row in sf.unit_rows:
        gens.append(row)
        gens.append((2 * row) % 4)
    gens.extend(sf.two_rows)
    return np.array(gens, dtype=np.uint8).reshape(len(gens), sf.ncols)


def nakayama_generator_count(
    generators,
    maximal_ideal_action: Sequence[Callable[[np.ndarray], np.ndarray]],
    ncols: int | None = None,
) -> int:
    """Minimal number of generators of a module over a local ring.

    ``maximal_ideal_action`` lists the maps by which generators of the maximal
    ideal act on vectors.  By Nakayama's lemma the answer is the residue-field
    dimension of M / mM, i.e. log2|M| - log2|mM| when the residue field is F2.
    """
    sf = standard_form(generators, ncols)
    images = [np.asarray(act(row.astype(np.int64))) % 4 for row in sf.reduced for act in maximal_ideal_action]
    if images:
        stacked = np.array(images)
        if not contains_all(sf, stacked).all():
            raise NotClosed("module is not closed under the maximal-ideal action")
    else:
        stacked = np.zeros((0, sf.ncols), dtype=np.int64)
    return sf.log2_size - standard_form(stacked, sf.ncols).log2_size
