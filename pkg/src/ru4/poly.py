"""Dense polynomials over F2, Z4 and R = Z4 + uZ4.

Representations:

* F2 polynomials are nonnegative ints, bit i holding the coefficient of x^i.
* Z4 polynomials are tuples of residues 0..3, ascending, no trailing zeros.
* R polynomials are tuples of :class:`~ru4.ring.RElem`, ascending, no
  trailing zeros.  Internally they are split as a(x) + u b(x) with a, b
  over Z4, which turns every R operation into Z4 operations.

The zero polynomial is the empty tuple (or 0 for F2) and has degree
``NEG_INF``.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import cache, reduce
from typing import Iterable, Sequence

from .errors import (
    BothZero,
    EvenLength,
    LiftVerificationFailed,
    NonMonicDivisor,
    NotADivisor,
    NotCoprime,
)
from .ring import ELEMENTS, ONE, ZERO, RElem

NEG_INF = float("-inf")

Z4Poly = tuple[int, ...]
RPoly = tuple[RElem, ...]


def _check_odd(n: int) -> None:
    if n < 1:
        raise ValueError(f"length must be positive, got {n}")
    if n % 2 == 0:
        raise EvenLength(f"length n={n} is even; only odd lengths are supported")


# ---------------------------------------------------------------------------
# F2[x] on int bitmasks
# ---------------------------------------------------------------------------

def f2_deg(f: int) -> int | float:
    return f.bit_length() - 1 if f else NEG_INF


def f2_mul(f: int, g: int) -> int:
    if f < g:
        f, g = g, f
    out = 0
    while g:
        if g & 1:
            out ^= f
        f <<= 1
        g >>= 1
    return out


def f2_divmod(f: int, g: int) -> tuple[int, int]:
    if g == 0:
        raise ZeroDivisionError("division by the zero polynomial")
    dg = g.bit_length() - 1
    q = 0
    while f and f.bit_length() - 1 >= dg:
        shift = f.bit_length() - 1 - dg
        q |= 1 << shift
        f ^= g << shift
    return q, f


def f2_mod(f: int, g: int) -> int:
    return f2_divmod(f, g)[1]


def f2_mulmod(f: int, g: int, m: int) -> int:
    return f2_mod(f2_mul(f, g), m)


def f2_gcd(f: int, g: int) -> int:
    """Monic gcd.  Over F2 every nonzero polynomial is already monic."""
    if f == 0 and g == 0:
        raise BothZero("gcd of two zero polynomials is undefined")
    while g:
        f, g = g, f2_mod(f, g)
    return f


def f2_gcdext(f: int, g: int) -> tuple[int, int, int]:
    """Return (d, s, t) with s*f + t*g = d = gcd(f, g)."""
    if f == 0 and g == 0:
        raise BothZero("gcd of two zero polynomials is undefined")
    r0, r1, s0, s1, t0, t1 = f, g, 1, 0, 0, 1
    while r1:
        q, r = f2_divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 ^ f2_mul(q, s1)
        t0, t1 = t1, t0 ^ f2_mul(q, t1)
    return r0, s0, t0


def coprime_f2(f: int, g: int) -> bool:
    return f2_gcd(f, g) == 1


gcd_f2 = f2_gcd


def f2_xn1(n: int) -> int:
    return (1 << n) | 1


def f2_from_z4(f: Sequence[int]) -> int:
    return sum(1 << i for i, c in enumerate(f) if c & 1)


def f2_to_z4(f: int) -> Z4Poly:
    return tuple((f >> i) & 1 for i in range(f.bit_length()))


def _equal_degree_split(g: int, d: int, rng: random.Random) -> list[int]:
    """Split a product of distinct degree-d irreducibles (trace method, char 2)."""
    if g.bit_length() - 1 == d:
        return [g]
    deg_g = g.bit_length() - 1
    while True:
        a = rng.getrandbits(deg_g) | 2
        trace, power = 0, f2_mod(a, g)
        for _ in range(d):
            trace ^= power
            power = f2_mulmod(power, power, g)
        s = f2_gcd(g, trace)
        if 0 < s.bit_length() - 1 < deg_g:
            return _equal_degree_split(s, d, rng) + _equal_degree_split(f2_divmod(g, s)[0], d, rng)


def _factor_key(f: int) -> tuple[int, int]:
    return (f.bit_length(), f)


def factor_xn_minus_1_f2(n: int) -> list[int]:
    """Monic irreducible factors of x^n - 1 over F2, sorted by degree then value.

    Sorting by the bitmask value orders same-degree factors lexicographically
    from the leading coefficient down, so x^3+x+1 precedes x^3+x^2+1.
    """
    _check_odd(n)
    rng = random.Random(n)
    rest = f2_xn1(n)
    factors: list[int] = []
    x_pow = 2
    d = 0
    while rest != 1:
        d += 1
        if 2 * d > rest.bit_length() - 1:
            factors.append(rest)
            break
        x_pow = f2_mulmod(x_pow, x_pow, rest)
        block = f2_gcd(rest, x_pow ^ 2)
        if block != 1:
            factors.extend(_equal_degree_split(block, d, rng))
            rest = f2_divmod(rest, block)[0]
            x_pow = f2_mod(x_pow, rest) if rest != 1 else 0
    return sorted(factors, key=_factor_key)


# ---------------------------------------------------------------------------
# Z4[x] on tuples
# ---------------------------------------------------------------------------

def z4_poly(coeffs: Iterable[int]) -> Z4Poly:
    out = [c % 4 for c in coeffs]
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


def degree(f: Sequence) -> int | float:
    """Degree of a normalized Z4 or R polynomial."""
    return len(f) - 1 if f else NEG_INF


def z4_add(f: Z4Poly, g: Z4Poly) -> Z4Poly:
    if len(f) < len(g):
        f, g = g, f
    return z4_poly([c + (g[i] if i < len(g) else 0) for i, c in enumerate(f)])


def z4_neg(f: Z4Poly) -> Z4Poly:
    return z4_poly(-c for c in f)


def z4_sub(f: Z4Poly, g: Z4Poly) -> Z4Poly:
    return z4_add(f, z4_neg(g))


def z4_scale(f: Z4Poly, k: int) -> Z4Poly:
    return z4_poly(k * c for c in f)


def z4_mul(f: Z4Poly, g: Z4Poly) -> Z4Poly:
    if not f or not g:
        return ()
    out = [0] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a:
            for j, b in enumerate(g):
                out[i + j] += a * b
    return z4_poly(out)


def z4_prod(polys: Iterable[Z4Poly]) -> Z4Poly:
    return reduce(z4_mul, polys, (1,))


def z4_divmod(f: Z4Poly, g: Z4Poly) -> tuple[Z4Poly, Z4Poly]:
    """Long division by a monic divisor."""
    if not g or g[-1] != 1:
        raise NonMonicDivisor(f"divisor {format_z4_poly(g)} is not monic")
    rem = list(f)
    dg = len(g) - 1
    quot = [0] * max(len(f) - dg, 0)
    for shift in range(len(f) - 1 - dg, -1, -1):
        c = rem[shift + dg] % 4
        if c:
            quot[shift] = c
            for j, b in enumerate(g):
                rem[shift + j] -= c * b
    return z4_poly(quot), z4_poly(rem[:dg])


def z4_mod_xn1(f: Sequence[int], n: int) -> Z4Poly:
    out = [0] * n
    for i, c in enumerate(f):
        out[i % n] += c
    return z4_poly(out)


def z4_xn1(n: int) -> Z4Poly:
    return (3,) + (0,) * (n - 1) + (1,)


def z4_divides(g: Z4Poly, f: Z4Poly) -> bool:
    return not z4_divmod(f, g)[1]


def z4_mod2(f: Z4Poly) -> int:
    return f2_from_z4(f)


# ---------------------------------------------------------------------------
# R[x]: a(x) + u b(x)
# ---------------------------------------------------------------------------

def r_poly(coeffs: Iterable) -> RPoly:
    """Normalize coefficients given as RElem, ints (b = 0) or (a, b) pairs."""
    out = []
    for c in coeffs:
        if isinstance(c, RElem):
            out.append(c)
        elif isinstance(c, int):
            out.append(RElem.of(c))
        else:
            out.append(RElem.of(*c))
    while out and not out[-1]:
        out.pop()
    return tuple(out)


def r_split(f: RPoly) -> tuple[Z4Poly, Z4Poly]:
    return z4_poly(c.a for c in f), z4_poly(c.b for c in f)


def r_join(a: Sequence[int], b: Sequence[int] = ()) -> RPoly:
    size = max(len(a), len(b))
    return r_poly(
        ELEMENTS[((a[i] if i < len(a) else 0) & 3) | (((b[i] if i < len(b) else 0) & 3) << 2)]
        for i in range(size)
    )


def r_from_z4(f: Z4Poly, times_u: bool = False) -> RPoly:
    return r_join((), f) if times_u else r_join(f)


def r_poly_add(f: RPoly, g: RPoly) -> RPoly:
    fa, fb = r_split(f)
    ga, gb = r_split(g)
    return r_join(z4_add(fa, ga), z4_add(fb, gb))


def r_poly_sub(f: RPoly, g: RPoly) -> RPoly:
    fa, fb = r_split(f)
    ga, gb = r_split(g)
    return r_join(z4_sub(fa, ga), z4_sub(fb, gb))


def r_poly_mul(f: RPoly, g: RPoly) -> RPoly:
    fa, fb = r_split(f)
    ga, gb = r_split(g)
    return r_join(z4_mul(fa, ga), z4_add(z4_mul(fa, gb), z4_mul(fb, ga)))


def r_poly_scale(f: RPoly, c: RElem) -> RPoly:
    return r_poly(c * x for x in f)


def r_poly_divmod(f: RPoly, g: RPoly) -> tuple[RPoly, RPoly]:
    """Long division by a divisor with leading coefficient 1."""
    if not g or g[-1] != ONE:
        raise NonMonicDivisor(f"divisor {format_r_poly(g)} is not monic")
    rem = list(f)
    dg = len(g) - 1
    quot = [ZERO] * max(len(f) - dg, 0)
    for shift in range(len(f) - 1 - dg, -1, -1):
        c = rem[shift + dg]
        if c:
            quot[shift] = c
            for j, b in enumerate(g):
                rem[shift + j] = rem[shift + j] - c * b
    return r_poly(quot), r_poly(rem[:dg])


def r_poly_mod_xn1(f: RPoly, n: int) -> RPoly:
    a, b = r_split(f)
    return r_join(z4_mod_xn1(a, n), z4_mod_xn1(b, n))


def r_xn1(n: int) -> RPoly:
    return r_join(z4_xn1(n))


# ---------------------------------------------------------------------------
# Hensel lifting and idempotents
# ---------------------------------------------------------------------------

def graeffe_hensel_lift(g2: int, n: int) -> Z4Poly:
    """Monic Z4 lift of a binary factor of x^n - 1 that still divides x^n - 1.

    With h the 0/1 lift of ``g2``, h(x) h(-x) is an even polynomial G(x^2);
    the lift is +-G(y), the sign chosen to make it monic.
    """
    _check_odd(n)
    if g2 == 0 or f2_mod(f2_xn1(n), g2) != 0:
        raise NotADivisor(f"{format_f2_poly(g2)} does not divide x^{n}-1 over F2")
    h = f2_to_z4(g2)
    h_neg = z4_poly(c if i % 2 == 0 else -c for i, c in enumerate(h))
    big = z4_mul(h, h_neg)
    if any(big[1::2]):
        raise LiftVerificationFailed("h(x)h(-x) has odd-degree terms")
    lift = z4_poly(big[0::2])
    if lift and lift[-1] == 3:
        lift = z4_neg(lift)
    if not lift or lift[-1] != 1:
        raise LiftVerificationFailed("Graeffe image is not monic up to sign")
    if z4_mod2(lift) != g2:
        raise LiftVerificationFailed(f"lift {format_z4_poly(lift)} does not reduce to the factor mod 2")
    if not z4_divides(lift, z4_xn1(n)):
        raise LiftVerificationFailed(f"lift {format_z4_poly(lift)} does not divide x^{n}-1 over Z4")
    return lift


def crt_idempotents(lifts: Sequence[Z4Poly], n: int) -> list[Z4Poly]:
    """Idempotents e_i of Z4[x]/(x^n-1) with e_i = 1 mod lifts[i], 0 mod the others.

    A Bezout pair over F2, s f + t g = 1, lifts to Z4 as s f + t g = 1 + 2h;
    since (1 + 2h)^2 = 1 the corrected e = t g (1 + 2h) is the idempotent.
    """
    if z4_prod(lifts) != z4_xn1(n):
        raise ValueError(f"factors do not multiply to x^{n}-1 over Z4")
    out = []
    for i, f in enumerate(lifts):
        g = z4_prod(p for j, p in enumerate(lifts) if j != i)
        d, s, t = f2_gcdext(z4_mod2(f), z4_mod2(g))
        if d != 1:
            raise NotCoprime(f"factor {format_z4_poly(f)} is not coprime to its cofactor")
        tg = z4_mul(f2_to_z4(t), g)
        excess = z4_sub(z4_add(z4_mul(f2_to_z4(s), f), tg), (1,))
        if any(c & 1 for c in excess):
            raise NotCoprime("Bezout relation failed to hold mod 2")
        correction = z4_add((1,), excess)  # 1 + 2h, excess = 2h
        out.append(z4_mod_xn1(z4_mul(tg, correction), n))
    return out


@dataclass(frozen=True)
class FactorizationResult:
    n: int
    f2_factors: tuple[int, ...]
    z4_lifts: tuple[Z4Poly, ...]
    idempotents: tuple[Z4Poly, ...]

    @property
    def m(self) -> int:
        return len(self.f2_factors)

    @property
    def degrees(self) -> tuple[int, ...]:
        return tuple(len(g) - 1 for g in self.z4_lifts)


@cache
def factorize(n: int) -> FactorizationResult:
    """Binary factors of x^n - 1, their Z4 lifts and the CRT idempotents."""
    f2 = tuple(factor_xn_minus_1_f2(n))
    lifts = tuple(graeffe_hensel_lift(g, n) for g in f2)
    return FactorizationResult(n, f2, lifts, tuple(crt_idempotents(lifts, n)))


# ---------------------------------------------------------------------------
# text forms
# ---------------------------------------------------------------------------

def format_z4_poly(f: Sequence[int]) -> str:
    return ",".join(str(c) for c in f) if f else "0"


def parse_z4_poly(text: str) -> Z4Poly:
    text = text.strip()
    if not text:
        raise ValueError("empty polynomial")
    try:
        coeffs = [int(tok) for tok in text.split(",")]
    except ValueError:
        raise ValueError(f"bad Z4 polynomial {text!r}; expected comma-separated digits") from None
    if any(not 0 <= c < 4 for c in coeffs):
        raise ValueError(f"bad Z4 polynomial {text!r}; coefficients must lie in 0..3")
    return z4_poly(coeffs)


def format_r_poly(f: RPoly) -> str:
    return ",".join(str(c) for c in f) if f else "0:0"


def parse_r_poly(text: str) -> RPoly:
    text = text.strip()
    if not text:
        raise ValueError("empty polynomial")
    return r_poly(RElem.parse(tok) for tok in text.split(","))


def parse_generators(text: str) -> list[RPoly]:
    """Parse ``"poly ; poly ; ..."`` into R polynomials."""
    return [parse_r_poly(part) for part in text.split(";") if part.strip()]


def format_generators(gens: Iterable[RPoly]) -> str:
    return " ; ".join(format_r_poly(g) for g in gens)


def _monomial(c: str, i: int) -> str:
    if i == 0:
        return c
    x = "x" if i == 1 else f"x^{i}"
    return x if c == "1" else f"{c}{x}"


def pretty_z4_poly(f: Sequence[int]) -> str:
    terms = [_monomial(str(c), i) for i, c in reversed(list(enumerate(f))) if c]
    return " + ".join(terms) if terms else "0"


def pretty_f2_poly(f: int) -> str:
    return pretty_z4_poly(f2_to_z4(f))


format_f2_poly = pretty_f2_poly


def pretty_r_poly(f: RPoly) -> str:
    terms = []
    for i, c in reversed(list(enumerate(f))):
        if c:
            coef = c.pretty()
            if c.a and c.b and i:
                coef = f"({coef})"
            terms.append(_monomial(coef, i))
    return " + ".join(terms) if terms else "0"
