"""Command line interface: ``ru4 <command> ...``.

Exit codes: 0 success, 1 other failure, 2 usage error, 3 computation budget
exceeded, 4 table mismatch.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path

from .codes import canonical_form, from_generators, residue_code, torsion_code
from .errors import EvenLength, Ru4Error, UsageError
from .image import RENDERERS, gray_image, render_csv, render_text, search_best, summarize, summarize_all
from .limits import DEFAULT_MATERIALIZE_WORDS
from .poly import (
    factorize,
    format_f2_poly,
    format_z4_poly,
    parse_generators,
    pretty_z4_poly,
)
from .tables import TABLES, check_table, describe_lifts, render_checks

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_TABLE_MISMATCH = 4


def _odd_length(text: str) -> int:
    n = int(text)
    if n < 1:
        raise argparse.ArgumentTypeError(f"length must be positive, got {n}")
    return n


def _check_odd(n: int) -> None:
    if n % 2 == 0:
        raise EvenLength(f"length n = {n} is even; only odd lengths are supported")


def cmd_factor(args) -> int:
    _check_odd(args.n)
    fact = factorize(args.n)
    if args.format == "json":
        print(json.dumps({
            "n": fact.n,
            "f2_factors": [format_z4_poly(_bits(f)) for f in fact.f2_factors],
            "z4_lifts": [format_z4_poly(g) for g in fact.z4_lifts],
            "idempotents": [format_z4_poly(e) for e in fact.idempotents],
        }, indent=2))
        return EXIT_OK
    print(f"x^{fact.n} - 1 has {fact.m} irreducible factors over F2")
    for k, (f, g, e) in enumerate(zip(fact.f2_factors, fact.z4_lifts, fact.idempotents), start=1):
        print(f"g_{k}: F2 factor {format_f2_poly(f)}")
        print(f"     Z4 lift    {pretty_z4_poly(g)}   [{format_z4_poly(g)}]")
        print(f"     idempotent {pretty_z4_poly(e)}   [{format_z4_poly(e)}]")
    return EXIT_OK


def _bits(f: int) -> tuple[int, ...]:
    return tuple((f >> i) & 1 for i in range(f.bit_length()))


def cmd_enumerate(args) -> int:
    _check_odd(args.n)
    summaries = summarize_all(args.n, workers=args.workers, full=args.all_ideals,
                              cap=args.max_words, enum_bits=args.max_enum_bits)
    sys.stdout.write(RENDERERS[args.format](summaries))
    if args.format == "json":
        sys.stdout.write("\n")
    return EXIT_OK


def _code_from_args(args):
    _check_odd(args.n)
    try:
        gens = parse_generators(args.gens)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    return from_generators(args.n, gens)


def cmd_code_info(args) -> int:
    code = _code_from_args(args)
    s = summarize(code, cap=args.max_words, enum_bits=args.max_enum_bits, workers=args.workers)
    if args.format == "json":
        print(json.dumps(s.to_json(), indent=2))
        return EXIT_OK
    if args.format == "csv":
        sys.stdout.write(render_csv([s]))
        return EXIT_OK
    canon = canonical_form(code)
    res, tor = residue_code(code), torsion_code(code)
    lines = [
        f"length n            {code.n}",
        f"input generators    {code.describe()}",
        f"canonical form      {canon.describe()}",
        f"canonical gens      {s.generators}",
        f"log2 |C|            {s.log2_size}",
        f"residue code        <{pretty_z4_poly(res.generator())}>  log2 size {res.log2_size}",
        f"torsion code        <{pretty_z4_poly(tor.generator())}>  log2 size {tor.log2_size}",
        f"rank n - deg f3     {'n/a' if s.paper_rank is None else s.paper_rank}",
        f"nakayama count      {s.nakayama_count}",
        f"min Lee weight      {s.d_lee if s.d_lee != float('inf') else 'inf'}",
    ]
    p = s.image
    checks = "sampled" if p.sampled else "exact"
    lines.append(
        f"Gray image          length {p.length}, 2^{p.log2_size} words, d = "
        f"{p.min_distance if p.min_distance != float('inf') else 'inf'}, "
        f"linear {str(p.is_linear_set).lower()}, 4-QC {str(p.is_qc4).lower()} ({checks})"
    )
    print("\n".join(lines))
    return EXIT_OK


def cmd_code_gray(args) -> int:
    code = _code_from_args(args)
    if args.dump_words:
        image = gray_image(code, args.max_words, virtual_ok=False)
        for w in image.as_strings():
            print(w)
        return EXIT_OK
    s = summarize(code, cap=args.max_words, enum_bits=args.max_enum_bits, workers=args.workers)
    if args.format == "json":
        print(json.dumps(s.to_json(), indent=2))
    else:
        sys.stdout.write(RENDERERS[args.format]([s]))
    return EXIT_OK


def cmd_tables(args) -> int:
    if args.which not in TABLES:
        raise UsageError(f"--which must be 1 or 2, got {args.which}")
    n, _ = TABLES[args.which]
    checks = check_table(args.which)
    print(f"n = {n}: {describe_lifts(n)}")
    sys.stdout.write(render_checks(checks))
    return EXIT_OK if all(c.ok for c in checks) else EXIT_TABLE_MISMATCH


def cmd_search(args) -> int:
    _check_odd(args.n)
    report = search_best(args.n, top_k=args.top, workers=args.workers, full=args.all_ideals,
                         cap=args.max_words, enum_bits=args.max_enum_bits)
    if args.output:
        Path(args.output).write_text(render_csv(report.ranked), encoding="utf-8")
    if args.format == "csv":
        sys.stdout.write(render_csv(report.ranked))
        return EXIT_OK
    if args.format == "json":
        print(json.dumps({
            "n": report.n,
            "codes": len(report.ranked),
            "top": [s.to_json() for s in report.top],
            "pareto": [s.to_json() for s in report.pareto],
        }, indent=2))
        return EXIT_OK
    print(f"{len(report.ranked)} cyclic codes of length {report.n}; binary images of length {4 * report.n}")
    print("ranking: minimum distance, then log2 size, then enumeration order")
    print(f"\ntop {args.top}:")
    sys.stdout.write(render_text(report.top))
    print("\nPareto front (distance vs size):")
    sys.stdout.write(render_text(report.pareto))
    if args.output:
        print(f"\nfull ranked table written to {args.output}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="ru4", description="Cyclic codes over Z4 + uZ4 and their Gray images.")
    parser.add_argument("--max-enum-bits", type=int, default=None,
                        help="exhaustive enumeration cap in bits (default 26, env RU4_MAX_ENUM_BITS)")
    parser.add_argument("--max-words", type=int, default=DEFAULT_MATERIALIZE_WORDS,
                        help="largest binary image to materialize")
    parser.add_argument("--workers", type=int, default=1, help="worker processes for scans")
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("factor", help="factor x^n - 1, lift to Z4, CRT idempotents")
    p.add_argument("--n", type=_odd_length, required=True)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_factor)

    codes = sub.add_parser("codes", help="operations over all codes of a length")
    codes_sub = codes.add_subparsers(dest="codes_command", required=True)
    p = codes_sub.add_parser("enumerate", help="summaries of every cyclic code of length n")
    p.add_argument("--n", type=_odd_length, required=True)
    p.add_argument("--format", choices=tuple(RENDERERS), default="text")
    p.add_argument("--all-ideals", action="store_true",
                   help="include the <2 + u*alpha> component ideals beyond the seven labels")
    p.set_defaults(func=cmd_enumerate)

    code = sub.add_parser("code", help="operations on one code")
    code_sub = code.add_subparsers(dest="code_command", required=True)
    for name, func, helptext in (
        ("info", cmd_code_info, "structure, ranks and distances of one code"),
        ("gray", cmd_code_gray, "binary Gray image of one code"),
    ):
        p = code_sub.add_parser(name, help=helptext)
        p.add_argument("--n", type=_odd_length, required=True)
        p.add_argument("--gens", required=True,
                       help="';'-separated polynomials, ascending comma-separated 'a:b' coefficients")
        p.add_argument("--format", choices=tuple(RENDERERS), default="text")
        if name == "gray":
            p.add_argument("--dump-words", action="store_true", help="print every image word")
        p.set_defaults(func=func)

    p = sub.add_parser("tables", help="check the reference tables of lengths 3 (1) and 7 (2)")
    p.add_argument("--which", type=int, required=True)
    p.set_defaults(func=cmd_tables)

    p = sub.add_parser("search", help="rank all cyclic codes of length n by their Gray images")
    p.add_argument("--n", type=_odd_length, required=True)
    p.add_argument("--top", type=int, default=10)
    p.add_argument("--format", choices=tuple(RENDERERS), default="text")
    p.add_argument("--all-ideals", action="store_true")
    p.add_argument("--output", help="write the full ranked table as CSV")
    p.set_defaults(func=cmd_search)
    return parser


def main(argv: list[str] | None = None) -> int:
    if hasattr(sys.stdout, "reconfigure"):
        sys.stdout.reconfigure(encoding="utf-8", line_buffering=True)
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        return args.func(args)
    except Ru4Error as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.exit_code
    except BrokenPipeError:
        return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
