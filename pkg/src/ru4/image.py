"""Gray images of cyclic codes: binary code sets, their parameters, the search.

Binary words of length 4n <= 64 are packed into uint64 with bit position j
of the word at bit j of the integer, which is the layout produced by
:func:`ru4._kernels.gray_words`.  Nothing here assumes that an image is
closed under addition; linearity is measured per code.
"""

from __future__ import annotations

import csv
import io
import json
import math
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np

from . import _kernels
from .codes import (
    INF,
    CRTProfile,
    CyclicCode,
    canonical_form,
    enumerate_all,
    from_crt_profile,
    min_lee_weight,
    nakayama_count,
    profiles,
    sliced_module,
    paper_rank,
    residue_code,
    torsion_code,
    vector_to_word,
    word_to_vector,
)
from .errors import NoCanonicalForm, NotMaterialized, TooLarge
from .gray import gray_map_vec, gray_map_vec_inverse
from .limits import DEFAULT_MATERIALIZE_WORDS, PAIRWISE_CHECK_WORDS, SAMPLE_SIZE
from .poly import format_generators, pretty_z4_poly, r_poly_mod_xn1
from .z4linalg import contains_all

U64 = np.uint64
MAX_PACKED_BITS = 64


@dataclass(frozen=True, eq=False)
class BinaryCodeSet:
    """Gray image of a code.  ``words`` is a sorted uint64 array when materialized."""

    length: int
    log2_size: float
    words: np.ndarray | None = None
    source: CyclicCode | None = None

    @property
    def materialized(self) -> bool:
        return self.words is not None

    def __len__(self) -> int:
        return len(self.words) if self.words is not None else 1 << int(self.log2_size)

    def _need_words(self) -> np.ndarray:
        if self.words is None:
            raise NotMaterialized("binary image was not materialized (above the word cap)")
        return self.words

    def __contains__(self, word) -> bool:
        if isinstance(word, (int, np.integer)):
            words = self._need_words()
            i = np.searchsorted(words, U64(word))
            return bool(i < len(words) and words[i] == U64(word))
        bits = tuple(word)
        if len(bits) != self.length:
            return False
        if self.words is not None:
            return pack(bits) in self
        if self.source is None:
            raise NotMaterialized("virtual image without a source code")
        return self.source.contains_word(gray_map_vec_inverse(bits))

    def as_strings(self) -> list[str]:
        return [format(int(w), f"0{self.length}b")[::-1] for w in self._need_words()]

    @classmethod
    def from_words(cls, words: Iterable[Sequence[int]]) -> BinaryCodeSet:
        """Explicit set from bit sequences (all of the same length)."""
        words = [tuple(w) for w in words]
        length = len(words[0]) if words else 0
        packed = np.unique(np.array([pack(w) for w in words], dtype=U64))
        log2 = math.log2(len(packed)) if len(packed) else 0.0
        return cls(length, int(log2) if log2.is_integer() else log2, packed)


def pack(bits: Sequence[int]) -> int:
    return sum(1 << j for j, b in enumerate(bits) if b)


def unpack(x: int, length: int) -> tuple[int, ...]:
    return tuple((int(x) >> j) & 1 for j in range(length))


def gray_image(code: CyclicCode, cap: int = DEFAULT_MATERIALIZE_WORDS, virtual_ok: bool = True) -> BinaryCodeSet:
    """The set of Gray images of all codewords.

    Materialized when the code has at most ``cap`` words and 4n <= 64;
    otherwise a virtual set backed by the code (or TooLarge if not allowed).
    """
    length = 4 * code.n
    if code.z4_basis.size > cap or length > MAX_PACKED_BITS:
        if not virtual_ok:
            raise TooLarge(f"image of 2^{code.log2_size} words of length {length} exceeds the materialization cap")
        return BinaryCodeSet(length, code.log2_size, None, code)
    module = sliced_module(code)
    parts = [_kernels.gray_words(lo, hi) for _, lo, hi in module.blocks()]
    words = np.sort(np.concatenate(parts))
    return BinaryCodeSet(length, code.log2_size, words, code)


# ---------------------------------------------------------------------------
# set-level checks
# ---------------------------------------------------------------------------

def rotate_blocks(words: np.ndarray, length: int) -> np.ndarray:
    """Apply the 4-quasi-cyclic shift to packed words: the last block moves to the front."""
    words = np.asarray(words, dtype=U64)
    if length == 4:
        return words.copy()
    mask = U64((1 << length) - 1) if length < 64 else U64(0xFFFFFFFFFFFFFFFF)
    return ((words << U64(4)) | (words >> U64(length - 4))) & mask


def _is_member(sorted_words: np.ndarray, queries: np.ndarray) -> np.ndarray:
    idx = np.searchsorted(sorted_words, queries)
    idx[idx == len(sorted_words)] = 0
    return sorted_words[idx] == queries


def is_qc4_invariant(image: BinaryCodeSet) -> bool:
    words = image._need_words()
    return bool(_is_member(words, rotate_blocks(words, image.length)).all())


def gf2_rank(words: np.ndarray) -> int:
    """Rank over GF(2) of packed words."""
    rows = np.unique(np.asarray(words, dtype=U64))
    rows = rows[rows != 0]
    rank = 0
    for bit in range(MAX_PACKED_BITS - 1, -1, -1):
        if not len(rows):
            break
        b = U64(1) << U64(bit)
        has = (rows & b) != 0
        if not has.any():
            continue
        pivot = rows[np.argmax(has)]
        rows = np.where(has, rows ^ pivot, rows)
        rows = rows[rows != 0]
        rank += 1
    return rank


def is_linear_set(image: BinaryCodeSet) -> bool:
    """Closed under bitwise addition: a set containing 0 whose span has the same size."""
    words = image._need_words()
    if not len(words) or words[0] != 0:
        return False
    size = len(words)
    if size & (size - 1):
        return False
    return gf2_rank(words) == size.bit_length() - 1


def pairwise_min_distance(words: np.ndarray, chunk: int = 256) -> int | float:
    words = np.asarray(words, dtype=U64)
    best = INF
    if len(words) < 2:
        return best
    for start in range(0, len(words), chunk):
        block = words[start:start + chunk]
        d = np.bitwise_count(block[:, None] ^ words[None, :]).astype(np.int64)
        for i in range(len(block)):
            d[i, start + i] = 1 << 30
        best = min(best, int(d.min()))
    return best


def distance_profile(words: np.ndarray, anchor: int) -> np.ndarray:
    """Histogram of Hamming distances from ``words[anchor]`` to every word."""
    d = np.bitwise_count(np.asarray(words, dtype=U64) ^ words[anchor]).astype(np.int64)
    return np.bincount(d, minlength=MAX_PACKED_BITS + 1)


def is_distance_invariant(image: BinaryCodeSet, anchors: int = 3, seed: int = 0) -> bool:
    words = image._need_words()
    rng = random.Random(seed)
    picks = [0] + [rng.randrange(len(words)) for _ in range(anchors - 1)]
    reference = distance_profile(words, picks[0])
    return all(np.array_equal(distance_profile(words, a), reference) for a in picks[1:])


def _random_codewords(code: CyclicCode, count: int, rng: np.random.Generator) -> np.ndarray:
    sf = code.z4_basis
    coefs = np.hstack([
        rng.integers(0, 4, size=(count, sf.k1)),
        rng.integers(0, 2, size=(count, sf.k2)),
    ])
    return (coefs @ sf.reduced.astype(np.int64)) % 4


def _bits_of(vectors: np.ndarray, n: int) -> np.ndarray:
    return np.array([gray_map_vec(vector_to_word(v, n)) for v in vectors], dtype=np.uint8)


def _members(code: CyclicCode, bits: np.ndarray) -> np.ndarray:
    vectors = np.array([word_to_vector(gray_map_vec_inverse(tuple(b))) for b in bits], dtype=np.int64)
    return contains_all(code.z4_basis, vectors)


def sampled_set_checks(code: CyclicCode, samples: int = SAMPLE_SIZE, seed: int = 0) -> tuple[bool, bool]:
    """(linear, qc4) judged on random members; membership itself is exact."""
    rng = np.random.default_rng(seed)
    n = code.n
    a = _bits_of(_random_codewords(code, samples, rng), n)
    b = _bits_of(_random_codewords(code, samples, rng), n)
    linear = bool(_members(code, a ^ b).all())
    qc4 = bool(_members(code, np.roll(a, 4, axis=1)).all())
    return linear, qc4


# ---------------------------------------------------------------------------
# parameters and summaries
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class BinaryParams:
    length: int
    log2_size: int
    min_distance: int | float
    is_linear_set: bool
    is_qc4: bool
    sampled: bool = False
    pairwise_checked: bool = False


def params(code: CyclicCode, cap: int = DEFAULT_MATERIALIZE_WORDS, enum_bits: int | None = None,
           workers: int = 1, image: BinaryCodeSet | None = None) -> BinaryParams:
    """Parameters of the Gray image.

    The minimum distance is the minimum Lee weight of the code (the Gray map
    is an isometry and the code is an additive group); small materialized
    images are also checked pairwise.
    """
    d = min_lee_weight(code, enum_bits, workers)
    image = image if image is not None else gray_image(code, cap)
    pairwise = False
    if image.materialized:
        linear, qc4, sampled = is_linear_set(image), is_qc4_invariant(image), False
        if len(image) <= PAIRWISE_CHECK_WORDS:
            d_pairs = pairwise_min_distance(image.words)
            if d_pairs != d:
                raise AssertionError(f"pairwise Hamming distance {d_pairs} disagrees with Lee weight {d}")
            pairwise = True
    else:
        (linear, qc4), sampled = sampled_set_checks(code), True
    return BinaryParams(image.length, code.log2_size, d, linear, qc4, sampled, pairwise)


FIELDS = (
    "n",
    "generators",
    "log2_size",
    "paper_rank",
    "nakayama_count",
    "d_lee",
    "image_length",
    "image_log2_size",
    "image_d",
    "linear",
    "qc4",
    "set_checks",
)


@dataclass(frozen=True)
class CodeSummary:
    n: int
    generators: str
    log2_size: int
    paper_rank: int | None
    nakayama_count: int
    d_lee: int | float
    residue_generator: str
    torsion_generator: str
    image: BinaryParams
    profile: tuple[str, ...] = ()
    canonical: dict = field(default_factory=dict)

    def row(self) -> dict:
        return {
            "n": self.n,
            "generators": self.generators,
            "log2_size": self.log2_size,
            "paper_rank": self.paper_rank,
            "nakayama_count": self.nakayama_count,
            "d_lee": self.d_lee,
            "image_length": self.image.length,
            "image_log2_size": self.image.log2_size,
            "image_d": self.image.min_distance,
            "linear": self.image.is_linear_set,
            "qc4": self.image.is_qc4,
            "set_checks": "sampled" if self.image.sampled else "exact",
        }

    def to_json(self) -> dict:
        out = {k: _json_value(v) for k, v in self.row().items()}
        out["crt_profile"] = list(self.profile)
        out["canonical"] = self.canonical
        out["residue_generator"] = self.residue_generator
        out["torsion_generator"] = self.torsion_generator
        return out


def _json_value(v):
    if isinstance(v, float) and math.isinf(v):
        return None
    return v


def _text_value(v) -> str:
    if v is None:
        return "n/a"
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, float) and math.isinf(v):
        return "inf"
    return str(v)


def summarize(code: CyclicCode, profile: CRTProfile | None = None, cap: int = DEFAULT_MATERIALIZE_WORDS,
              enum_bits: int | None = None, workers: int = 1) -> CodeSummary:
    n = code.n
    canon = canonical_form(code)
    try:
        rank = paper_rank(canon, n)
    except NoCanonicalForm:
        rank = None
    gens = tuple(r_poly_mod_xn1(g, n) for g in canon.generators())
    p = params(code, cap, enum_bits, workers)
    profile = profile or code.profile
    return CodeSummary(
        n=n,
        generators=format_generators(gens),
        log2_size=code.log2_size,
        paper_rank=rank,
        nakayama_count=nakayama_count(code),
        d_lee=p.min_distance,
        residue_generator=pretty_z4_poly(residue_code(code).generator()),
        torsion_generator=pretty_z4_poly(torsion_code(code).generator()),
        image=p,
        profile=tuple(profile.tags()) if profile else (),
        canonical=canon.to_json(),
    )


# ---------------------------------------------------------------------------
# rendering
# ---------------------------------------------------------------------------

def render_csv(summaries: Sequence[CodeSummary]) -> str:
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=FIELDS, lineterminator="\n")
    writer.writeheader()
    for s in summaries:
        writer.writerow({k: _text_value(v) for k, v in s.row().items()})
    return buf.getvalue()


def render_json(summaries: Sequence[CodeSummary]) -> str:
    return json.dumps([s.to_json() for s in summaries], indent=2)


def render_text(summaries: Sequence[CodeSummary]) -> str:
    rows = [[_text_value(v) for v in s.row().values()] for s in summaries]
    widths = [max([len(h)] + [len(r[i]) for r in rows]) for i, h in enumerate(FIELDS)]
    lines = ["  ".join(h.ljust(w) for h, w in zip(FIELDS, widths))]
    lines += ["  ".join(c.ljust(w) for c, w in zip(r, widths)) for r in rows]
    return "\n".join(line.rstrip() for line in lines) + "\n"


RENDERERS = {"csv": render_csv, "json": render_json, "text": render_text}


# ---------------------------------------------------------------------------
# search
# ---------------------------------------------------------------------------

def rank_key(item: tuple[int, CodeSummary]):
    """Distance first, then size, then enumeration order; the zero code goes last."""
    index, s = item
    d = s.d_lee if not math.isinf(s.d_lee) else -1
    return (-d, -s.log2_size, index)


def pareto_front(summaries: Sequence[CodeSummary]) -> list[CodeSummary]:
    """First code (in the given order) for each non-dominated (distance, size) pair."""
    best: dict[tuple[int, int], CodeSummary] = {}
    for s in summaries:
        if math.isinf(s.d_lee):
            continue
        best.setdefault((s.d_lee, s.log2_size), s)
    points = list(best)
    keep = [
        p for p in points
        if not any(q != p and q[0] >= p[0] and q[1] >= p[1] for q in points)
    ]
    return [best[p] for p in sorted(keep, key=lambda p: (-p[0], -p[1]))]


@dataclass(frozen=True)
class SearchReport:
    n: int
    ranked: tuple[CodeSummary, ...]
    pareto: tuple[CodeSummary, ...]
    top_k: int

    @property
    def top(self) -> tuple[CodeSummary, ...]:
        return self.ranked[: self.top_k]


def _summarize_profile(args) -> CodeSummary:
    n, tags, cap, enum_bits = args
    profile = CRTProfile.from_tags(n, tags)
    return summarize(from_crt_profile(profile), profile, cap, enum_bits)


def summarize_all(n: int, workers: int = 1, full: bool = False,
                  cap: int = DEFAULT_MATERIALIZE_WORDS, enum_bits: int | None = None) -> list[CodeSummary]:
    """Summaries of every cyclic code of length n, in enumeration order."""
    if workers > 1:
        tasks = [(n, tuple(p.tags()), cap, enum_bits) for p in profiles(n, full)]
        with ProcessPoolExecutor(workers) as pool:
            return list(pool.map(_summarize_profile, tasks, chunksize=4))
    return [summarize(c, p, cap, enum_bits) for p, c in enumerate_all(n, full=full)]


def search_best(n: int, top_k: int = 10, workers: int = 1, full: bool = False,
                cap: int = DEFAULT_MATERIALIZE_WORDS, enum_bits: int | None = None) -> SearchReport:
    """All codes of length n ranked by their Gray images, with the Pareto front."""
    summaries = summarize_all(n, workers, full, cap, enum_bits)
    ranked = tuple(s for _, s in sorted(enumerate(summaries), key=rank_key))
    return SearchReport(n, ranked, tuple(pareto_front(ranked)), top_k)


__all__ = [
    "BinaryCodeSet",
    "BinaryParams",
    "CodeSummary",
    "SearchReport",
    "gray_image",
    "is_distance_invariant",
    "is_linear_set",
    "is_qc4_invariant",
    "params",
    "render_csv",
    "render_json",
    "render_text",
    "search_best",
    "summarize",
    "summarize_all",
]

