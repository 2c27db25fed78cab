"""Command-line front end.

Exit codes: 0 success (a poset that is not (3+1)-free still analyzes
successfully), 1 usage error, 2 unparsable input, 3 size bound exceeded,
4 oracle mismatch.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time

from . import counting
from .enumerate import enumerate_posets_oracle, generate_31free
from .errors import ParseError, SizeError
from .iso import canonical_form
from .poset import find_3plus1
from .report import analyze
from .skeleton import enumerate_skeleta
from .textio import parse_poset, write_stream

EXIT_OK, EXIT_USAGE, EXIT_PARSE, EXIT_SIZE, EXIT_MISMATCH = 0, 1, 2, 3, 4

MAX_COUNT_N = 64


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _cap(default: int) -> int:
    return max(default, int(os.environ.get("TANGLECOUNT_MAX_N", 0)))


def cmd_count(args, out) -> int:
    if args.upto < 0:
        raise _Usage("--upto must be non-negative")
    if args.upto > _cap(MAX_COUNT_N):
        raise SizeError(f"--upto is capped at {MAX_COUNT_N} (set TANGLECOUNT_MAX_N to override)")
    if args.mode == "unlabelled":
        p, b = counting.p_unl_counts(args.upto), counting.b_unl_counts(args.upto)
    else:
        p, b = counting.p_lbl_counts(args.upto), counting.b_lbl_counts(args.upto)
    if args.json:
        json.dump([{"n": n, "p": p[n], "b": b[n]} for n in range(args.upto + 1)], out)
        out.write("\n")
    else:
        for n in range(args.upto + 1):
            out.write(f"{n}\t{p[n]}\t{b[n]}\n")
    return EXIT_OK


def cmd_analyze(args, out) -> int:
    if args.file == "-":
        text = sys.stdin.read()
    else:
        with open(args.file) as fh:
            text = fh.read()
    P, names = parse_poset(text)
    report = analyze(P, names)
    out.write(report.to_json() + "\n" if args.format == "json" else report.to_text())
    return EXIT_OK


def cmd_generate(args, out) -> int:
    stream = generate_31free(args.n, check_duplicates=args.check_duplicates)
    if args.count_only:
        out.write(f"{sum(1 for _ in stream)}\n")
        return EXIT_OK
    if args.out:
        with open(args.out, "w") as fh:
            count = write_stream(stream, fh)
        print(f"wrote {count} posets to {args.out}", file=sys.stderr)
    else:
        write_stream(stream, out)
    return EXIT_OK


def cmd_oracle(args, out) -> int:
    t0 = time.perf_counter()
    brute = {canonical_form(P) for P in enumerate_posets_oracle(args.n, allow_8=args.allow_8) if find_3plus1(P) is None}
    built = [canonical_form(P) for P in generate_31free(args.n)]
    built_set = set(built)
    missing = brute - built_set
    extra = built_set - brute
    dupes = len(built) - len(built_set)
    if missing or extra or dupes:
        out.write(f"mismatch: {len(built)} constructive vs {len(brute)} brute force\n")
        out.write(f"  missing from generator: {len(missing)}\n")
        out.write(f"  not found by brute force: {len(extra)}\n")
        out.write(f"  duplicates in generator: {dupes}\n")
        return EXIT_MISMATCH
    out.write(f"match: {len(built)} = {len(brute)}\n")
    if args.verbose:
        print(f"oracle n={args.n}: {time.perf_counter() - t0:.2f}s", file=sys.stderr)
    return EXIT_OK


def cmd_skeleta(args, out) -> int:
    if args.clones < 0 or args.tangles < 0:
        raise _Usage("letter counts must be non-negative")
    words = enumerate_skeleta(args.clones, args.tangles)
    out.write(f"{len(words)}\n")
    if args.list:
        for w in words:
            out.write(f"{w}\n")
    return EXIT_OK


def cmd_asympt(args, out) -> int:
    if args.upto > _cap(MAX_COUNT_N):
        raise SizeError(f"--upto is capped at {MAX_COUNT_N} (set TANGLECOUNT_MAX_N to override)")
    if not 0 <= args.start <= args.upto:
        raise _Usage("need 0 <= --from <= --upto")
    rows = counting.asymptotic_report(args.upto, start=args.start)
    if args.json:
        json.dump([r.as_dict() for r in rows], out)
        out.write("\n")
        return EXIT_OK
    out.write("n\tp_unl/b_unl\tp_lbl/b_lbl\tn!b_unl/b_lbl\n")
    for r in rows:
        out.write(f"{r.n}\t{float(r.unl_ratio):.12f}\t{float(r.lbl_ratio):.12f}\t{float(r.sym_ratio):.12f}\n")
    return EXIT_OK


class _Usage(Exception):
    pass


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="tanglecount", description="Exact counting and generation of (3+1)-free posets.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("count", help="print p(n) and b(n) for n = 0..N")
    p.add_argument("--mode", choices=["unlabelled", "labelled"], default="unlabelled")
    p.add_argument("--upto", type=int, required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("analyze", help="tangle decomposition report for a poset file")
    p.add_argument("file", help="poset text file, or - for stdin")
    p.add_argument("--format", choices=["json", "text"], default="json")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("generate", help="stream all (3+1)-free posets on n vertices")
    p.add_argument("-n", type=int, required=True)
    p.add_argument("--out", help="write the stream to this file")
    p.add_argument("--count-only", action="store_true")
    p.add_argument("--check-duplicates", action="store_true", help="verify canonical forms are distinct")
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("oracle", help="compare the generator with brute-force enumeration")
    p.add_argument("-n", type=int, required=True)
    p.add_argument("--allow-8", action="store_true")
    p.add_argument("-v", "--verbose", action="store_true")
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("skeleta", help="count (or list) skeleta by clone and tangle letters")
    p.add_argument("--clones", type=int, required=True)
    p.add_argument("--tangles", type=int, required=True)
    p.add_argument("--list", action="store_true")
    p.set_defaults(func=cmd_skeleta)

    p = sub.add_parser("asympt", help="ratios p/b and n! b_unl / b_lbl")
    p.add_argument("--upto", type=int, default=22)
    p.add_argument("--from", dest="start", type=int, default=0)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_asympt)
    return parser


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args, out)
    except _Usage as e:
        print(f"tanglecount: error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except (ParseError, OSError) as e:
        print(f"tanglecount: cannot read input: {e}", file=sys.stderr)
        return EXIT_PARSE
    except SizeError as e:
        print(f"tanglecount: {e}", file=sys.stderr)
        return EXIT_SIZE
    except ValueError as e:
        print(f"tanglecount: error: {e}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
