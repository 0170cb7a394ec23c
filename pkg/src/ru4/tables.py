"""Reference tables of nonzero cyclic codes of lengths 3 and 7, and their check.

Each row is stored in its printed notation, e.g. ``<2g_ig_j, ug_1g_2+2ug_1>``
with an index range such as ``i!=j=1,2,3``.  A row expands into concrete
instances (unordered pairs i < j for ``i!=j``), each parsed into canonical
generators f1 + 2 f2 and u (f3 + 2 f4), where g_k is the k-th lifted factor
of x^n - 1.  The rank under test is n - deg(f3) of that form.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass

from .codes import CanonicalGens, canonical_form, from_canonical, nakayama_count, paper_rank
from .errors import NoCanonicalForm, Ru4Error
from .poly import Z4Poly, factorize, pretty_z4_poly, z4_prod

# (notation, index range, expected rank)
LENGTH3_TABLE: tuple[tuple[str, str, int], ...] = (
    ("<2g_i, ug_1+2u>", "i=1,2", 2),
    ("<2g_i, ug_2+2u>", "i=1,2", 1),
    ("<2g_i, 3u>", "i=1,2", 3),
    ("<2, ug_1+2u>", "", 2),
    ("<2, ug_2+2u>", "", 1),
    ("<2, 3u>", "", 3),
    ("<g_1+2, 3u>", "", 3),
    ("<g_2+2, 3u>", "", 3),
)

_U_PARTS_7 = (
    ("ug_1g_2+2ug_1", 3), ("ug_1g_2+2ug_2", 3), ("ug_1g_2+2u", 3),
    ("ug_1g_3+2ug_1", 3), ("ug_1g_3+2ug_3", 3), ("ug_1g_3+2u", 3),
    ("ug_2g_3+2ug_2", 1), ("ug_2g_3+2ug_3", 1), ("ug_2g_3+2u", 1),
    ("ug_1+2u", 6), ("ug_2+2u", 4), ("ug_3+2u", 4), ("3u", 7),
)

_SECOND_PART_7 = (
    ("<g_1g_2+2g_1, ug_1+2u>", 6), ("<g_1g_2+2g_1, ug_2+2u>", 4), ("<g_1g_2+2g_1, 3u>", 7),
    ("<g_1g_2+2g_2, ug_1+2u>", 6), ("<g_1g_2+2g_2, ug_2+2u>", 4), ("<g_1g_2+2g_2, 3u>", 7),
    ("<g_1g_2+2, ug_1+2u>", 6), ("<g_1g_2+2, ug_2+2u>", 4), ("<g_1g_2+2, 3u>", 7),
    ("<g_1g_3+2g_1, ug_1+2u>", 6), ("<g_1g_3+2g_1, ug_3+2u>", 4), ("<g_1g_3+2g_1, 3u>", 7),
    ("<g_1g_3+2g_3, ug_1+2u>", 6), ("<g_1g_3+2g_3, ug_3+2u>", 4), ("<g_1g_3+2g_3, 3u>", 7),
    ("<g_1g_3+2, ug_1+2u>", 6), ("<g_1g_3+2, ug_3+2u>", 4), ("<g_1g_3+2, 3u>", 7),
    ("<g_2g_3+2g_2, ug_2+2u>", 4), ("<g_2g_3+2g_2, ug_3+2u>", 4), ("<g_2g_3+2g_2, 3u>", 7),
    ("<g_2g_3+2g_3, ug_2+2u>", 4), ("<g_2g_3+2g_3, ug_3+2u>", 4), ("<g_2g_3+2g_3, 3u>", 7),
    ("<g_2g_3+2, ug_2+2u>", 4), ("<g_2g_3+2, ug_3+2u>", 4), ("<g_2g_3+2, 3u>", 7),
    ("<g_1+2, 3u>", 7), ("<g_2+2, 3u>", 7), ("<g_3+2, 3u>", 7),
)

LENGTH7_TABLE: tuple[tuple[str, str, int], ...] = (
    tuple((f"<2g_ig_j, {u}>", "i!=j=1,2,3", r) for u, r in _U_PARTS_7)
    + tuple((f"<2g_i, {u}>", "i=1,2,3", r) for u, r in _U_PARTS_7)
    + tuple((f"<2, {u}>", "", r) for u, r in _U_PARTS_7)
    + tuple((row, "", r) for row, r in _SECOND_PART_7)
)

TABLES = {1: (3, LENGTH3_TABLE), 2: (7, LENGTH7_TABLE)}

_TERM = re.compile(r"^(\d*)(u?)((?:g_\d)*)$")


def expand_indices(row: str, indices: str) -> list[str]:
    """Concrete instances of a row: ``i=1,2`` or ``i!=j=1,2,3`` (unordered, i < j)."""
    if not indices:
        return [row]
    pattern, _, values = indices.rpartition("=")
    values = [v.strip() for v in values.split(",")]
    if pattern == "i":
        return [row.replace("g_i", f"g_{v}") for v in values]
    if pattern == "i!=j":
        return [
            row.replace("g_i", f"g_{a}").replace("g_j", f"g_{b}")
            for a, b in itertools.combinations(values, 2)
        ]
    raise ValueError(f"unknown index range {indices!r}")


def _parse_terms(text: str, lifts: tuple[Z4Poly, ...]) -> list[tuple[int, bool, Z4Poly]]:
    out = []
    for term in text.replace(" ", "").split("+"):
        m = _TERM.match(term)
        if not m or not (m.group(1) or m.group(2) or m.group(3)):
            raise ValueError(f"cannot read term {term!r}")
        coef = int(m.group(1)) if m.group(1) else 1
        factors = [lifts[int(k) - 1] for k in re.findall(r"g_(\d)", m.group(3))]
        out.append((coef % 4, bool(m.group(2)), z4_prod(factors)))
    return out


def _split_slots(terms: list[tuple[int, bool, Z4Poly]]) -> tuple[Z4Poly, Z4Poly]:
    """Sum of c * p with c in {1,2,3} -> (odd slot, even slot); 3 p = p + 2 p."""
    odd, even = [], []
    for coef, _, p in terms:
        if coef & 1:
            odd.append(p)
        if coef & 2:
            even.append(p)
    if len(odd) > 1 or len(even) > 1:
        raise ValueError("at most one term per coefficient slot is supported")
    return (odd[0] if odd else ()), (even[0] if even else ())


def parse_row(instance: str, n: int) -> CanonicalGens:
    """``<first, second>`` in g_k notation -> canonical generators.

    A missing coefficient-1 term stands for x^n - 1, i.e. zero modulo it.
    """
    lifts = factorize(n).z4_lifts
    body = instance.strip().strip("<>.").strip()
    parts = [p.strip() for p in body.split(",")]
    if len(parts) != 2:
        raise ValueError(f"expected two generators in {instance!r}")
    first, second = (_parse_terms(p, lifts) for p in parts)
    if any(has_u for _, has_u, _ in first) or not all(has_u for _, has_u, _ in second):
        raise ValueError(f"expected <a(x), u b(x)> shape in {instance!r}")
    f1, f2 = _split_slots(first)
    f3, f4 = _split_slots(second)
    if not f2 or not f4:
        raise ValueError(f"missing coefficient-2 term in {instance!r}")
    return CanonicalGens(f1, f2, f3, f4)


@dataclass(frozen=True)
class RowCheck:
    notation: str
    instance: str
    expected: int
    rank: int | None
    recovered_rank: int | None
    nakayama: int | None
    log2_size: int | None
    error: str = ""

    @property
    def ok(self) -> bool:
        return not self.error and self.rank == self.expected


def check_instance(notation: str, instance: str, n: int, expected: int) -> RowCheck:
    try:
        canon = parse_row(instance, n)
        code = from_canonical(n, canon)
        rank = paper_rank(canon, n)
        try:
            recovered = paper_rank(canonical_form(code), n)
        except NoCanonicalForm:
            recovered = None
        return RowCheck(notation, instance, expected, rank, recovered, nakayama_count(code), code.log2_size)
    except (Ru4Error, ValueError) as exc:
        return RowCheck(notation, instance, expected, None, None, None, None, f"{type(exc).__name__}: {exc}")


def check_table(which: int) -> list[RowCheck]:
    """Check every instance of reference table 1 (length 3) or 2 (length 7)."""
    if which not in TABLES:
        raise ValueError(f"no table {which}; choose 1 or 2")
    n, rows = TABLES[which]
    return [
        check_instance(notation, instance, n, expected)
        for notation, indices, expected in rows
        for instance in expand_indices(notation, indices)
    ]


def render_checks(checks: list[RowCheck]) -> str:
    header = ("instance", "expected", "rank", "recovered", "nakayama", "log2_size", "status")
    rows = [
        (
            c.instance,
            str(c.expected),
            "n/a" if c.rank is None else str(c.rank),
            "n/a" if c.recovered_rank is None else str(c.recovered_rank),
            "n/a" if c.nakayama is None else str(c.nakayama),
            "n/a" if c.log2_size is None else str(c.log2_size),
            "ok" if c.ok else ("MISMATCH " + c.error).strip(),
        )
        for c in checks
    ]
    widths = [max(len(h), *(len(r[i]) for r in rows)) for i, h in enumerate(header)]
    lines = ["  ".join(h.ljust(w) for h, w in zip(header, widths))]
    lines += ["  ".join(v.ljust(w) for v, w in zip(r, widths)) for r in rows]
    bad = sum(not c.ok for c in checks)
    lines.append(f"{len(checks) - bad}/{len(checks)} instances match, {bad} mismatches")
    return "\n".join(line.rstrip() for line in lines) + "\n"


def describe_lifts(n: int) -> str:
    return ", ".join(f"g_{k + 1} = {pretty_z4_poly(g)}" for k, g in enumerate(factorize(n).z4_lifts))
