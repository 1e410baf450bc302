"""Command-line front end.

Exit codes: 0 success, 1 a verification or conjecture check failed,
2 usage error (bad arguments, invalid tuple, range outside a cap).
"""

from __future__ import annotations

import argparse
import json
import re
import sys

from . import formulas as F
from . import tables
from .cf import cf_to_fraction, invariants, orbit, parse_cf
from .enumeration import CAP_ENV, EnumFilter, census, enum_cap, enumerate_tuples
from .errors import BridgeCensusError, LimitExceeded
from .kernels import BACKEND
from .verify import (
    run_oracle_suite,
    run_recursion_suite,
    run_theorem_suite,
    scan_median_conjecture,
    stderr_progress,
)

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _fail_usage(msg: str) -> int:
    print(f"bridge-census: error: {msg}", file=sys.stderr)
    return EXIT_USAGE


def _check_range(lo: int, hi: int) -> None:
    if not 3 <= lo <= hi:
        raise UsageError(f"need 3 <= --min <= --max, got {lo}..{hi}")


def cmd_invariants(args) -> int:
    cf = parse_cf(args.tuple)
    inv = invariants(cf)
    orb = orbit(cf)
    frac = cf_to_fraction(cf)
    info = {
        "entries": cf.render(),
        "sign_changes": inv.sign_changes,
        "half_sum": inv.half_sum,
        "crossing_number": inv.crossing_number,
        "braid_index": inv.braid_index,
        "symmetry": str(orb.symmetry_kind),
        "orbit_size": len(orb),
        "orbit": [m.render() for m in orb.sorted_members()],
        "canonical": orb.canonical.render(),
        "schubert_fraction": str(frac),
        "schubert_p": abs(frac.p),
    }
    if args.format == "json":
        print(json.dumps(info, indent=2))
    else:
        for key, value in info.items():
            if isinstance(value, list):
                value = "  ".join(f"({v})" for v in value)
            print(f"{key}: {value}")
    return EXIT_OK


def cmd_table(args) -> int:
    _check_range(args.min, args.max)
    table = tables.build_table(args.quantity, args.min, args.max)
    sys.stdout.write(tables.render(table, args.format))
    return EXIT_OK


def cmd_stats(args) -> int:
    _check_range(args.min, args.max)
    sys.stdout.write(tables.render_stats(tables.stats_rows(args.min, args.max), args.format))
    return EXIT_OK


def cmd_enumerate(args) -> int:
    flt = EnumFilter(args.c, args.b, args.palindromic, args.dedupe)
    out = sys.stdout
    try:
        for cf in enumerate_tuples(flt, cap=args.cap):
            out.write(cf.render() + "\n")
    except LimitExceeded as exc:
        out.flush()
        return _fail_usage(str(exc))
    return EXIT_OK


def cmd_census(args) -> int:
    try:
        counts = census(args.c, workers=args.workers)
    except LimitExceeded as exc:
        return _fail_usage(str(exc))
    print(json.dumps(counts.to_json(), indent=2))
    return EXIT_OK


def cmd_verify(args) -> int:
    cap = enum_cap()
    if not 3 <= args.enum_max <= cap:
        raise UsageError(f"--enum-max must lie in [3, {cap}] ({CAP_ENV} raises the cap)")
    if args.theorem_max < 8:
        raise UsageError("--theorem-max must be >= 8 (the log-concavity and difference checks start at c = 7, 8)")
    if args.recursion_max < 3:
        raise UsageError("--recursion-max must be >= 3")
    reports = [
        run_oracle_suite(args.enum_max, workers=args.workers),
        run_recursion_suite(args.recursion_max),
        run_theorem_suite(args.theorem_max),
    ]
    if args.format == "json":
        print(json.dumps([r.to_json() for r in reports], indent=2))
    else:
        for r in reports:
            print(r.to_text())
    return EXIT_OK if all(r.passed for r in reports) else EXIT_FAIL


def cmd_conjecture(args) -> int:
    if args.max < 3:
        raise UsageError("--max must be >= 3")
    progress = None if args.quiet else stderr_progress
    result = scan_median_conjecture(args.max, workers=args.workers, progress=progress)
    if args.format == "json":
        print(json.dumps(result.to_json(), indent=2))
    else:
        status = "HOLDS" if result.holds else "VIOLATED"
        print(f"median = ceil(c/3) + 1 for 3 <= c <= {result.max_c_checked}: {status} "
              f"({len(result.violations)} violations, {result.elapsed_ms / 1e3:.1f} s)")
        if result.ambiguous:
            print(f"rows with an exact half split (several median indices): {result.ambiguous}")
        for c, med, pred in result.violations:
            print(f"  c={c}: median {med}, conjectured {pred}")
    return EXIT_OK if result.holds else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="bridge-census",
        description="Braid-index statistics of 2-bridge knots by crossing number.",
    )
    p.add_argument("--version", action="version", version=f"%(prog)s 0.1.0 ({BACKEND} kernels)")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("invariants", help="invariants of one even continued fraction")
    s.add_argument("tuple", help='e.g. "2,-4,2,2" (brackets optional)')
    s.add_argument("--format", choices=("table", "json"), default="table")
    s.set_defaults(func=cmd_invariants)

    s = sub.add_parser("table", help="triangular table of k, e or e_p")
    s.add_argument("--quantity", choices=("k", "e", "ep"), default="k")
    s.add_argument("--min", type=int, default=3)
    s.add_argument("--max", type=int, required=True)
    s.add_argument("--format", choices=tables.FORMATS, default="table")
    s.set_defaults(func=cmd_table)

    s = sub.add_parser("stats", help="mean, variance, mode and median per crossing number")
    s.add_argument("--min", type=int, default=3)
    s.add_argument("--max", type=int, required=True)
    s.add_argument("--format", choices=tables.FORMATS, default="table")
    s.set_defaults(func=cmd_stats)

    s = sub.add_parser("enumerate", help="list even continued fractions with crossing number c")
    s.add_argument("--c", type=int, required=True)
    s.add_argument("--b", type=int, default=None)
    s.add_argument("--palindromic", action="store_true")
    s.add_argument("--dedupe", action="store_true", help="one tuple per knot (orbit minimum)")
    s.add_argument("--cap", type=int, default=None, help="stop with an error after N tuples")
    s.set_defaults(func=cmd_enumerate)

    s = sub.add_parser("census", help="exhaustive counts per braid index as JSON")
    s.add_argument("--c", type=int, required=True)
    s.add_argument("--workers", type=int, default=1)
    s.set_defaults(func=cmd_census)

    s = sub.add_parser("verify", help="run the oracle, recursion and theorem suites")
    s.add_argument("--enum-max", type=int, default=18)
    s.add_argument("--theorem-max", type=int, default=500)
    s.add_argument("--recursion-max", type=int, default=400)
    s.add_argument("--workers", type=int, default=1)
    s.add_argument("--format", choices=("table", "json"), default="table")
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("conjecture", help="scan median = ceil(c/3) + 1 up to --max")
    s.add_argument("--max", type=int, required=True)
    s.add_argument("--workers", type=int, default=1)
    s.add_argument("--quiet", action="store_true", help="no progress lines on stderr")
    s.add_argument("--format", choices=("table", "json"), default="table")
    s.set_defaults(func=cmd_conjecture)
    return p


_NEG_TUPLE = re.compile(r"^-\d")


def _protect_tuple(argv: list[str]) -> list[str]:
    # "-2,2" would otherwise be taken for an option flag; move it behind "--".
    if argv and argv[0] == "invariants" and "--" not in argv:
        for i, tok in enumerate(argv[1:], start=1):
            if _NEG_TUPLE.match(tok):
                return argv[:i] + argv[i + 1:] + ["--", tok]
    return argv


def main(argv: list[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    try:
        args = parser.parse_args(_protect_tuple(argv))
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except (UsageError, BridgeCensusError) as exc:
        return _fail_usage(str(exc))
    except BrokenPipeError:
        return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
