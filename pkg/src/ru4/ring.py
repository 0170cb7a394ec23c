"""Arithmetic in Z4 and in R = Z4 + uZ4 with u^2 = 0.

Z4 elements are plain ints in 0..3.  An element a + ub of R is an
:class:`RElem`; its packed form ``a | b << 2`` (0..15) indexes the
precomputed tables used by the vectorised kernels.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import cache

import numpy as np

from .errors import NotAUnit


@dataclass(frozen=True, slots=True)
class RElem:
    """The element ``a + u*b`` of R."""

    a: int = 0
    b: int = 0

    def __post_init__(self) -> None:
        if not (0 <= self.a < 4 and 0 <= self.b < 4):
            raise ValueError(f"components must be residues mod 4, got ({self.a}, {self.b})")

    @property
    def packed(self) -> int:
        return self.a | (self.b << 2)

    @staticmethod
    def from_packed(v: int) -> RElem:
        return ELEMENTS[v]

    @staticmethod
    def of(a: int, b: int = 0) -> RElem:
        return ELEMENTS[(a % 4) | ((b % 4) << 2)]

    @staticmethod
    def parse(token: str) -> RElem:
        """Parse ``"a:b"`` (or a bare ``"a"``, meaning b = 0)."""
        token = token.strip()
        head, sep, tail = token.partition(":")
        try:
            a = int(head)
            b = int(tail) if sep else 0
        except ValueError:
            raise ValueError(f"bad ring element {token!r}; expected 'a:b'") from None
        if not (0 <= a < 4 and 0 <= b < 4):
            raise ValueError(f"bad ring element {token!r}; components must lie in 0..3")
        return ELEMENTS[a | (b << 2)]

    def __str__(self) -> str:
        return f"{self.a}:{self.b}"

    def pretty(self) -> str:
        if self.b == 0:
            return str(self.a)
        upart = "u" if self.b == 1 else f"{self.b}u"
        return upart if self.a == 0 else f"{self.a}+{upart}"

    def __add__(self, other: RElem) -> RElem:
        return r_add(self, other)

    def __sub__(self, other: RElem) -> RElem:
        return r_add(self, r_neg(other))

    def __mul__(self, other: RElem) -> RElem:
        return r_mul(self, other)

    def __neg__(self) -> RElem:
        return r_neg(self)

    def __bool__(self) -> bool:
        return bool(self.a or self.b)


ELEMENTS: tuple[RElem, ...] = tuple(RElem(v & 3, v >> 2) for v in range(16))

ZERO = ELEMENTS[0]
ONE = ELEMENTS[1]
TWO = ELEMENTS[2]
U = ELEMENTS[4]


def r_add(x: RElem, y: RElem) -> RElem:
    return ELEMENTS[((x.a + y.a) & 3) | (((x.b + y.b) & 3) << 2)]


def r_mul(x: RElem, y: RElem) -> RElem:
    # (a + ub)(c + ud) = ac + u(ad + bc)
    return ELEMENTS[((x.a * y.a) & 3) | (((x.a * y.b + x.b * y.a) & 3) << 2)]


def r_neg(x: RElem) -> RElem:
    return ELEMENTS[(-x.a & 3) | ((-x.b & 3) << 2)]


ADD_TABLE = np.array([[r_add(x, y).packed for y in ELEMENTS] for x in ELEMENTS], dtype=np.uint8)
MUL_TABLE = np.array([[r_mul(x, y).packed for y in ELEMENTS] for x in ELEMENTS], dtype=np.uint8)
NEG_TABLE = np.array([r_neg(x).packed for x in ELEMENTS], dtype=np.uint8)


def is_unit(x: RElem) -> bool:
    return x.a & 1 == 1


def try_inverse(x: RElem) -> RElem:
    """Inverse of a unit.  (a + ub)^-1 = a^-1 - u b a^-2, and a^-2 = 1 for odd a."""
    if not is_unit(x):
        raise NotAUnit(f"{x.pretty()} is not a unit of Z4+uZ4")
    return ELEMENTS[x.a | ((-x.b & 3) << 2)]


def units() -> tuple[RElem, ...]:
    return tuple(x for x in ELEMENTS if is_unit(x))


def lee_weight_z4(c: int) -> int:
    c %= 4
    return min(c, 4 - c)


def lee_weight_r(x: RElem) -> int:
    """Lee weight w(a + ub) = w(b) + w(a + b)."""
    return lee_weight_z4(x.b) + lee_weight_z4(x.a + x.b)


LEE_TABLE = np.array([lee_weight_r(x) for x in ELEMENTS], dtype=np.uint8)


class IdealLabel(enum.Enum):
    """The seven ideals of R, named by their generators."""

    ZERO = ()
    ONE = (1,)
    TWO = (2,)
    U = (4,)
    TWO_U = (8,)
    TWO_PLUS_U = (6,)
    TWO_AND_U = (2, 4)

    @property
    def generators(self) -> tuple[RElem, ...]:
        return tuple(ELEMENTS[v] for v in self.value)

    @property
    def tag(self) -> str:
        return self.name

    @property
    def notation(self) -> str:
        if self is IdealLabel.ZERO:
            return "{0}"
        return "<" + ",".join(g.pretty() for g in self.generators) + ">"

    @classmethod
    def from_tag(cls, tag: str) -> IdealLabel:
        try:
            return cls[tag.strip().upper()]
        except KeyError:
            raise ValueError(f"unknown ideal tag {tag!r}") from None


def ideal_closure(generators) -> frozenset[RElem]:
    """Smallest subset of R containing ``generators`` closed under + and R-multiplication."""
    elems = {ZERO}
    for x in (r_mul(r, g) for g in generators for r in ELEMENTS):
        if x not in elems:
            multiples = (x, r_add(x, x), r_add(x, r_add(x, x)))
            elems |= {r_add(e, m) for e in elems for m in multiples}
    return frozenset(elems)


@cache
def ideal_elements(label: IdealLabel) -> frozenset[RElem]:
    return ideal_closure(label.generators)


def ideal_contains(label: IdealLabel, x: RElem) -> bool:
    return x in ideal_elements(label)


MAXIMAL_IDEAL = IdealLabel.TWO_AND_U
