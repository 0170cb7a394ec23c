"""Cyclic codes of odd length n over R = Z4 + uZ4.

A cyclic code is an ideal of R[x]/(x^n - 1).  Each code is carried as the
Z4-submodule of Z4^(2n) obtained from a + ub -> (a-part | b-part); the
canonical reduced matrix of that module (``z4_basis``) decides equality,
membership and size.  Multiplication by u acts as (a | b) -> (0 | a).
"""

from __future__ import annotations

import itertools
import logging
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterator, Sequence

import numpy as np

from . import _kernels
from .errors import (
    DivisibilityViolated,
    NoCanonicalForm,
    ProfileLengthMismatch,
    TooLarge,
)
from .limits import DEFAULT_MAX_CODES, enum_bits_cap
from .poly import (
    FactorizationResult,
    RPoly,
    Z4Poly,
    _check_odd,
    degree,
    f2_divmod,
    f2_mod,
    f2_to_z4,
    factorize,
    format_z4_poly,
    pretty_r_poly,
    pretty_z4_poly,
    r_from_z4,
    r_join,
    r_poly,
    r_poly_add,
    r_poly_mod_xn1,
    r_poly_mul,
    r_split,
    z4_add,
    z4_divmod,
    z4_mod2,
    z4_mod_xn1,
    z4_mul,
    z4_poly,
    z4_prod,
    z4_scale,
    z4_sub,
    z4_xn1,
)
from .ring import ELEMENTS, LEE_TABLE, IdealLabel, RElem
from .z4linalg import (
    StandardForm,
    binary_generators,
    contains_all,
    decompose,
    module_elements,
    nakayama_generator_count,
    standard_form,
)

log = logging.getLogger(__name__)

INF = math.inf


# ---------------------------------------------------------------------------
# the (a | b) embedding
# ---------------------------------------------------------------------------

def embed(f: RPoly, n: int) -> np.ndarray:
    """R polynomial (reduced mod x^n - 1) -> length-2n Z4 vector (a | b)."""
    a, b = r_split(r_poly_mod_xn1(f, n))
    v = np.zeros(2 * n, dtype=np.int64)
    v[: len(a)] = a
    v[n: n + len(b)] = b
    return v


def unembed(v: Sequence[int], n: int) -> RPoly:
    v = [int(x) % 4 for x in v]
    return r_join(v[:n], v[n:])


def vector_to_word(v: Sequence[int], n: int) -> tuple[RElem, ...]:
    """Embedded vector -> codeword (c_0, ..., c_{n-1}) in R^n."""
    return tuple(ELEMENTS[(int(v[i]) & 3) | ((int(v[n + i]) & 3) << 2)] for i in range(n))


def word_to_vector(word: Sequence[RElem]) -> np.ndarray:
    return np.array([x.a for x in word] + [x.b for x in word], dtype=np.int64)


def shift_rows(v: np.ndarray, n: int, k: int = 1) -> np.ndarray:
    """Multiply embedded rows by x^k (a cyclic shift of both halves)."""
    v = np.asarray(v)
    return np.hstack([np.roll(v[:, :n], k, axis=1), np.roll(v[:, n:], k, axis=1)])


def times_u_rows(v: np.ndarray, n: int) -> np.ndarray:
    v = np.asarray(v)
    return np.hstack([np.zeros_like(v[:, :n]), v[:, :n]])


def times_two_rows(v: np.ndarray) -> np.ndarray:
    return (2 * np.asarray(v, dtype=np.int64)) % 4


def _z4_embed(f: Z4Poly, n: int) -> np.ndarray:
    v = np.zeros(n, dtype=np.int64)
    r = z4_mod_xn1(f, n)
    v[: len(r)] = r
    return v


# ---------------------------------------------------------------------------
# CRT profiles
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class CRTProfile:
    """One ideal of R[x]/(g_i) per lifted factor g_i of x^n - 1.

    ``alphas`` only matters for TWO_PLUS_U entries: the component ideal is
    then <2 + u*alpha(x)>, alpha an F2 bitmask of degree < deg g_i.  With
    every alpha = 1 this is one of the 7^m codes built from the seven
    labels; other alphas give the remaining ideals of components with
    residue field larger than F2.
    """

    n: int
    choices: tuple[IdealLabel, ...]
    alphas: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        if not self.alphas:
            object.__setattr__(self, "alphas", (1,) * len(self.choices))
        if len(self.alphas) != len(self.choices):
            raise ProfileLengthMismatch("one alpha per factor is required")

    @property
    def is_labelled(self) -> bool:
        """True when the profile uses only the seven named ideals."""
        return all(a == 1 or c is not IdealLabel.TWO_PLUS_U for c, a in zip(self.choices, self.alphas))

    def tags(self) -> list[str]:
        out = []
        for c, a in zip(self.choices, self.alphas):
            if c is IdealLabel.TWO_PLUS_U and a != 1:
                out.append(f"{c.tag}[{a}]")
            else:
                out.append(c.tag)
        return out

    @classmethod
    def from_tags(cls, n: int, tags: Sequence[str]) -> CRTProfile:
        choices, alphas = [], []
        for t in tags:
            name, _, rest = t.partition("[")
            choices.append(IdealLabel.from_tag(name))
            alphas.append(int(rest.rstrip("]")) if rest else 1)
        return cls(n, tuple(choices), tuple(alphas))


def _component_generators(label: IdealLabel, alpha: int) -> list[RPoly]:
    if label is IdealLabel.TWO_PLUS_U:
        return [r_join((2,), f2_to_z4(alpha))]
    return [(g,) for g in label.generators]


def profile_generators(profile: CRTProfile, fact: FactorizationResult | None = None) -> list[RPoly]:
    fact = fact or factorize(profile.n)
    if len(profile.choices) != fact.m:
        raise ProfileLengthMismatch(
            f"profile has {len(profile.choices)} entries but x^{profile.n}-1 has {fact.m} factors"
        )
    gens = []
    for e, label, alpha in zip(fact.idempotents, profile.choices, profile.alphas):
        for g in _component_generators(label, alpha):
            gens.append(r_poly_mod_xn1(r_poly_mul(r_from_z4(e), g), profile.n))
    return gens


def profiles(n: int, full: bool = False) -> Iterator[CRTProfile]:
    """All CRT profiles in lexicographic order (first factor slowest).

    With ``full`` the TWO_PLUS_U choice of a degree-d component expands into
    the 2^d - 1 ideals <2 + u*alpha>, giving every ideal of R[x]/(x^n - 1).
    """
    fact = factorize(n)
    per_factor = []
    for d in fact.degrees:
        options = []
        for label in IdealLabel:
            if label is IdealLabel.TWO_PLUS_U and full:
                options.extend((label, a) for a in range(1, 1 << d))
            else:
                options.append((label, 1))
        per_factor.append(options)
    for combo in itertools.product(*per_factor):
        yield CRTProfile(n, tuple(c for c, _ in combo), tuple(a for _, a in combo))


def count_codes(n: int, full: bool = False) -> int:
    fact = factorize(n)
    if not full:
        return 7 ** fact.m
    return math.prod((1 << d) + 5 for d in fact.degrees)


# ---------------------------------------------------------------------------
# codes
# ---------------------------------------------------------------------------

@dataclass(frozen=True, eq=False)
class CyclicCode:
    n: int
    gens: tuple[RPoly, ...]
    z4_basis: StandardForm
    profile: CRTProfile | None = field(default=None, compare=False)

    @property
    def log2_size(self) -> int:
        return self.z4_basis.log2_size

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, CyclicCode):
            return NotImplemented
        return self.n == other.n and self.z4_basis == other.z4_basis

    def __hash__(self) -> int:
        return hash((self.n, self.z4_basis))

    def fingerprint(self) -> bytes:
        return self.z4_basis.fingerprint()

    def contains(self, f: RPoly) -> bool:
        return self.z4_basis.contains(embed(f, self.n))

    def contains_word(self, word: Sequence[RElem]) -> bool:
        return self.z4_basis.contains(word_to_vector(word))

    def codeword_vectors(self, cap: int | None = None) -> np.ndarray:
        """All codewords as embedded (a | b) rows."""
        return module_elements(self.z4_basis, cap)

    def codewords(self, cap: int | None = None) -> list[tuple[RElem, ...]]:
        return [vector_to_word(v, self.n) for v in self.codeword_vectors(cap)]

    def is_cyclic(self) -> bool:
        rows = self.z4_basis.reduced
        if not len(rows):
            return True
        return bool(contains_all(self.z4_basis, shift_rows(rows, self.n)).all())

    def is_ideal(self) -> bool:
        rows = self.z4_basis.reduced
        if not len(rows):
            return True
        images = np.vstack([shift_rows(rows, self.n), times_u_rows(rows, self.n)])
        return bool(contains_all(self.z4_basis, images).all())

    def describe(self) -> str:
        if not self.gens:
            return "<0>"
        return "<" + ", ".join(pretty_r_poly(g) for g in self.gens) + ">"


def from_generators(n: int, gens: Sequence[RPoly], profile: CRTProfile | None = None) -> CyclicCode:
    """The ideal of R[x]/(x^n - 1) generated by ``gens``.

    Its Z4-span is generated by x^i g and u x^i g; zero generators are dropped.
    """
    _check_odd(n)
    reduced = tuple(g for g in (r_poly_mod_xn1(r_poly(g), n) for g in gens) if g)
    rows = []
    for g in reduced:
        v = embed(g, n)[None, :]
        for i in range(n):
            s = shift_rows(v, n, i)
            rows.append(s)
            rows.append(times_u_rows(s, n))
    matrix = np.vstack(rows) if rows else np.zeros((0, 2 * n), dtype=np.int64)
    return CyclicCode(n, reduced, standard_form(matrix, 2 * n), profile)


def from_crt_profile(profile: CRTProfile, fact: FactorizationResult | None = None) -> CyclicCode:
    return from_generators(profile.n, profile_generators(profile, fact), profile)


def enumerate_all(
    n: int, full: bool = False, max_codes: int = DEFAULT_MAX_CODES
) -> Iterator[tuple[CRTProfile, CyclicCode]]:
    """Every code given by a CRT profile, in profile order.

    The default yields the 7^m codes built from the seven labelled ideals;
    ``full`` yields all ideals (see :func:`profiles`).
    """
    _check_odd(n)
    total = count_codes(n, full)
    if total > max_codes:
        raise TooLarge(f"{total} cyclic codes of length {n} exceed the budget of {max_codes}")
    fact = factorize(n)
    for p in profiles(n, full):
        yield p, from_crt_profile(p, fact)


# ---------------------------------------------------------------------------
# residue and torsion codes
# ---------------------------------------------------------------------------

@dataclass(frozen=True, eq=False)
class Z4CyclicCode:
    """A cyclic code over Z4 of odd length n, as a Z4-submodule of Z4^n."""

    n: int
    z4_basis: StandardForm

    @property
    def log2_size(self) -> int:
        return self.z4_basis.log2_size

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Z4CyclicCode):
            return NotImplemented
        return self.n == other.n and self.z4_basis == other.z4_basis

    def __hash__(self) -> int:
        return hash((self.n, self.z4_basis))

    def contains(self, f: Z4Poly) -> bool:
        return self.z4_basis.contains(_z4_embed(f, self.n))

    def is_shift_closed(self) -> bool:
        rows = self.z4_basis.reduced
        return bool(contains_all(self.z4_basis, np.roll(rows, 1, axis=1)).all()) if len(rows) else True

    def component_types(self) -> tuple[str, ...]:
        """Per lifted factor: 'one' (whole component), 'two' (2 times it) or 'zero'."""
        out = []
        for e in factorize(self.n).idempotents:
            if self.contains(e):
                out.append("one")
            elif self.contains(z4_scale(e, 2)):
                out.append("two")
            else:
                out.append("zero")
        return tuple(out)

    def generator_pair(self) -> tuple[Z4Poly, Z4Poly]:
        """(f, g) with g | f | x^n - 1 and the code equal to <f + 2g>."""
        lifts = factorize(self.n).z4_lifts
        types = self.component_types()
        f = z4_prod(l for l, t in zip(lifts, types) if t != "one")
        g = z4_prod(l for l, t in zip(lifts, types) if t == "zero")
        return f, g

    def generator(self) -> Z4Poly:
        f, g = self.generator_pair()
        return z4_mod_xn1(z4_add(f, z4_scale(g, 2)), self.n)


def residue_code(code: CyclicCode) -> Z4CyclicCode:
    """Image of the code under a + ub -> a."""
    n = code.n
    return Z4CyclicCode(n, standard_form(code.z4_basis.reduced[:, :n], n))


def torsion_code(code: CyclicCode) -> Z4CyclicCode:
    """{h over Z4 : u h in the code}.

    These are the b-parts of codewords with zero a-part, which the reduced
    rows pivoting in the b-half span.
    """
    n = code.n
    sf = code.z4_basis
    rows = [sf.reduced[i, n:] for i, c in enumerate(sf.pivot_cols) if c >= n]
    return Z4CyclicCode(n, standard_form(np.array(rows, dtype=np.int64).reshape(len(rows), n), n))


# ---------------------------------------------------------------------------
# canonical generators
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class CanonicalGens:
    """Generators <f1 + 2 f2 + u (f13 + 2 f14), u (f3 + 2 f4)>.

    f2 | f1 | x^n - 1 describe the residue code and f4 | f3 | x^n - 1 the
    torsion code.  f13 (odd part of the u-component of the first generator)
    is zero exactly when the code has the two-generator shape without an odd
    u-term; codes with a <2 + u>-type component need it.
    """

    f1: Z4Poly
    f2: Z4Poly
    f3: Z4Poly
    f4: Z4Poly
    f14: Z4Poly = ()
    f13: Z4Poly = ()

    def generators(self) -> tuple[RPoly, RPoly]:
        first = r_join(z4_add(self.f1, z4_scale(self.f2, 2)), z4_add(self.f13, z4_scale(self.f14, 2)))
        second = r_join((), z4_add(self.f3, z4_scale(self.f4, 2)))
        return first, second

    def describe(self) -> str:
        parts = [f"f1={pretty_z4_poly(self.f1)}", f"f2={pretty_z4_poly(self.f2)}"]
        if self.f13:
            parts.append(f"f13={pretty_z4_poly(self.f13)}")
        parts.append(f"f14={pretty_z4_poly(self.f14)}")
        parts += [f"f3={pretty_z4_poly(self.f3)}", f"f4={pretty_z4_poly(self.f4)}"]
        return ", ".join(parts)

    def to_json(self) -> dict[str, str]:
        out = {k: format_z4_poly(getattr(self, k)) for k in ("f1", "f2", "f14", "f3", "f4")}
        if self.f13:
            out["f13"] = format_z4_poly(self.f13)
        return out


def _as_divisor(f: Z4Poly, n: int, name: str) -> Z4Poly:
    """Zero stands for x^n - 1; a unit leading coefficient is normalized away."""
    f = z4_poly(f)
    if not f:
        return z4_xn1(n)
    if f[-1] == 3:
        f = z4_scale(f, 3)
    if f[-1] != 1:
        raise DivisibilityViolated(f"{name} = {pretty_z4_poly(f)} has a non-unit leading coefficient")
    return f


def _check_divides(small: Z4Poly, big: Z4Poly, what: str) -> None:
    if z4_divmod(big, small)[1]:
        raise DivisibilityViolated(f"{what} does not hold over Z4")


def from_canonical(n: int, c: CanonicalGens) -> CyclicCode:
    """Code from canonical generators, after checking f2 | f1 | x^n-1 and f4 | f3 | x^n-1."""
    _check_odd(n)
    xn1 = z4_xn1(n)
    f1, f2 = _as_divisor(c.f1, n, "f1"), _as_divisor(c.f2, n, "f2")
    f3, f4 = _as_divisor(c.f3, n, "f3"), _as_divisor(c.f4, n, "f4")
    _check_divides(f1, xn1, "f1 | x^n-1")
    _check_divides(f2, f1, "f2 | f1")
    _check_divides(f3, xn1, "f3 | x^n-1")
    _check_divides(f4, f3, "f4 | f3")
    code = from_generators(n, CanonicalGens(f1, f2, f3, f4, c.f14, c.f13).generators())
    if c.f13 and not canonical_form(code).f13:
        log.info("odd u-term %s absorbed by the torsion generator", pretty_z4_poly(c.f13))
    return code


def canonical_form(code: CyclicCode) -> CanonicalGens:
    """Recover canonical generators of a code.

    f1, f2 come from the residue code and f3, f4 from the torsion code T.
    Take any codeword with a-part f1 + 2 f2; its b-part p is determined modulo
    T.  Since T mod 2 = <f3 mod 2> and {h : 2h in T} mod 2 = <f4 mod 2>, the
    odd part is reduced modulo f3 and the remaining even part modulo f4.
    """
    n = code.n
    f1, f2 = residue_code(code).generator_pair()
    torsion = torsion_code(code)
    f3, f4 = torsion.generator_pair()

    target = np.zeros(2 * n, dtype=np.int64)
    target[:n] = _z4_embed(z4_add(f1, z4_scale(f2, 2)), n)
    residual, _ = decompose(code.z4_basis, target[None, :])
    if residual[0, :n].any():
        raise NoCanonicalForm("residue generator has no preimage in the code")
    p = z4_poly(-int(x) for x in residual[0, n:])

    f3_bar = z4_mod2(f3)
    p_bar = z4_mod2(p)
    odd = f2_mod(p_bar, f3_bar)
    q = f2_divmod(p_bar ^ odd, f3_bar)[0]
    t = z4_mod_xn1(z4_mul(f2_to_z4(q), z4_add(f3, z4_scale(f4, 2))), n)
    even = z4_mod_xn1(z4_sub(z4_sub(p, t), f2_to_z4(odd)), n)
    if any(c & 1 for c in even):
        raise NoCanonicalForm("internal error: u-part did not split into odd and even parts")
    half = sum(1 << i for i, c in enumerate(even) if c == 2)
    canon = CanonicalGens(f1, f2, f3, f4, f2_to_z4(f2_mod(half, z4_mod2(f4))), f2_to_z4(odd))

    if from_generators(n, canon.generators()) != code:
        raise NoCanonicalForm("recovered generators do not reproduce the code")
    return canon


def paper_rank(c: CanonicalGens, n: int) -> int:
    """Rank value n - deg(f3) attached to a two-generator canonical form."""
    if c.f13:
        raise NoCanonicalForm("the first generator needs an odd u-term; no two-term canonical form")
    f3 = z4_poly(c.f3)
    return n - (degree(f3) if f3 else n)


def nakayama_count(code: CyclicCode) -> int:
    """Minimal number of R-module generators, dim over F2 of C / <2, u>C."""
    n = code.n
    return nakayama_generator_count(
        code.z4_basis.reduced,
        [times_two_rows, lambda v: times_u_rows(np.asarray(v)[None, :], n)[0]],
        2 * n,
    )


# ---------------------------------------------------------------------------
# minimum Lee weight
# ---------------------------------------------------------------------------

def sliced_module(code: CyclicCode, block_bits: int = _kernels.DEFAULT_BLOCK_BITS) -> _kernels.SlicedModule:
    gens = binary_generators(code.z4_basis)
    lo, hi = _kernels.bitslice(_kernels.to_gray_layout(gens, code.n))
    return _kernels.SlicedModule(lo, hi, block_bits)


def _scan_range(args) -> int | None:
    code, start, stop = args
    return _kernels.min_nonzero_lee_weight(sliced_module(code), start, stop)


def _weight_classes() -> dict[int, np.ndarray]:
    out: dict[int, list[int]] = {}
    for v, w in enumerate(LEE_TABLE):
        out.setdefault(int(w), []).append(v)
    return {w: np.array(vs, dtype=np.uint8) for w, vs in out.items()}


_BY_WEIGHT = _weight_classes()


def words_of_lee_weight(n: int, w: int) -> np.ndarray:
    """All words of R^n with Lee weight exactly w, as packed (a | b << 2) rows."""
    # layers[t] holds the prefixes of total weight t
    layers: dict[int, np.ndarray] = {0: np.zeros((1, 0), dtype=np.uint8)}
    for _ in range(n):
        nxt: dict[int, list[np.ndarray]] = {}
        for t, prefixes in layers.items():
            for k, elems in _BY_WEIGHT.items():
                if t + k > w:
                    continue
                block = np.hstack([np.repeat(prefixes, len(elems), axis=0),
                                   np.tile(elems, len(prefixes))[:, None]])
                nxt.setdefault(t + k, []).append(block)
        layers = {t: np.vstack(bs) for t, bs in nxt.items()}
    return layers.get(w, np.zeros((0, n), dtype=np.uint8))


def count_words_of_lee_weight(n: int, w: int) -> int:
    counts = [1] + [0] * w
    for _ in range(n):
        counts = [sum(counts[t - k] * len(_BY_WEIGHT[k]) for k in _BY_WEIGHT if 0 <= t - k) for t in range(w + 1)]
    return counts[w]


def min_lee_weight_by_ball(code: CyclicCode, budget_bits: int | None = None) -> int | float:
    """Smallest w for which some word of Lee weight w lies in the code.

    Exact, and cheap for large codes whose minimum weight is small; raises
    TooLarge once the words checked exceed 2^budget_bits.
    """
    if code.log2_size == 0:
        return INF
    n = code.n
    budget = 1 << enum_bits_cap(budget_bits)
    checked = 0
    for w in range(1, 4 * n + 1):
        checked += count_words_of_lee_weight(n, w)
        if checked > budget:
            raise TooLarge(f"weight-{w} sphere search exceeds 2^{enum_bits_cap(budget_bits)} words")
        words = words_of_lee_weight(n, w)
        vectors = np.hstack([words & 3, words >> 2]).astype(np.int64)
        if contains_all(code.z4_basis, vectors).any():
            return w
    raise AssertionError("a nonzero code must contain a word of weight <= 4n")


def min_lee_weight(code: CyclicCode, cap: int | None = None, workers: int = 1) -> int | float:
    """Minimum Lee weight of the nonzero codewords (inf for the zero code).

    Codes up to 2^cap codewords are scanned exhaustively; larger ones fall
    back to :func:`min_lee_weight_by_ball`.
    """
    if code.log2_size == 0:
        return INF
    if code.log2_size > enum_bits_cap(cap):
        return min_lee_weight_by_ball(code, cap)
    module = sliced_module(code)
    if workers <= 1 or module.n_blocks < 2:
        return _kernels.min_nonzero_lee_weight(module)
    bounds = np.linspace(0, module.n_blocks, min(workers, module.n_blocks) + 1).astype(int)
    tasks = [(code, int(a), int(b)) for a, b in zip(bounds[:-1], bounds[1:])]
    with ProcessPoolExecutor(workers) as pool:
        results = [r for r in pool.map(_scan_range, tasks) if r is not None]
    return min(results)


def describe_z4_generator(code: Z4CyclicCode) -> str:
    f, g = code.generator_pair()
    return pretty_z4_poly(code.generator()) + f"  (f={pretty_z4_poly(f)}, g={pretty_z4_poly(g)})"


__all__ = [
    "CRTProfile",
    "CanonicalGens",
    "CyclicCode",
    "INF",
    "Z4CyclicCode",
    "canonical_form",
    "count_codes",
    "embed",
    "enumerate_all",
    "from_canonical",
    "from_crt_profile",
    "from_generators",
    "min_lee_weight",
    "min_lee_weight_by_ball",
    "nakayama_count",
    "paper_rank",
    "profiles",
    "residue_code",
    "torsion_code",
    "unembed",
]

