"""Command-line front end.

    motzkin-ct triangle --kind motzkin --max-n 5
    motzkin-ct verify theorem1 --max-n 200
    motzkin-ct cores --s 3 --d 2
    motzkin-ct compare problem-lhs

Exit codes: 0 success, 1 mismatch or counterexample, 2 usage or input error.
"""

from __future__ import annotations

import argparse
import json
import sys
from importlib import resources
from pathlib import Path

from . import identities, triangles
from .bfile import BFileError, read_bfile
from .cores import CoprimalityError, conjecture_check, coprime_pairs, count_simultaneous_cores_by_size
from .identities import ArithmeticFault, VerificationReport
from .triangles import TriangleSpec

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE = 0, 1, 2

KINDS = ("motzkin", "extended", "trinomial", "pascal", "catalan-variant", "general")
IDENTITIES = ("theorem1", "theorem2", "general", "pascal-analogy", "term-bridge")
SEQUENCES = {
    "problem-lhs": "b026940.txt",
    "motzkin-row-concat": "b026300.txt",
    "trinomial-row-concat": "b027907.txt",
}


class UsageError(Exception):
    pass


def _emit(record, fmt, out):
    if fmt == "records":
        out.write(json.dumps(record) + "\n")


def _spec(text):
    try:
        return TriangleSpec.parse(text)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


# triangle


def _row(kind, n, spec):
    if kind == "motzkin":
        return list(triangles.motzkin_row(n))
    if kind == "extended":
        return triangles.extended_row(n)
    if kind == "trinomial":
        return triangles.trinomial_row(n)
    if kind == "pascal":
        return triangles.pascal_row(n)
    if kind == "catalan-variant":
        return triangles.catalan_variant_row(n)
    return triangles.general_row(spec, n)


def cmd_triangle(args, out):
    spec = None
    if args.kind == "general":
        if not args.coeffs:
            raise UsageError("--kind general requires --coeffs")
        spec = _spec(args.coeffs)
    elif args.coeffs:
        raise UsageError("--coeffs only applies to --kind general")
    for n in range(args.max_n + 1):
        row = _row(args.kind, n, spec)
        if args.format == "records":
            _emit({"triangle": args.kind, "n": n, "row": row}, "records", out)
        else:
            out.write(" ".join(map(str, row)) + "\n")
    return EXIT_OK


# verify


def _verify_checks(args):
    ident = args.identity
    if ident == "theorem1":
        return [lambda n=n: identities.theorem1_check(n) for n in range(args.max_n + 1)], {"max_n": args.max_n}
    if ident == "theorem2":
        return [
            lambda s=s, d=d: identities.theorem2_check(s, d)
            for s in range(1, args.max_s + 1)
            for d in range(1, args.max_d + 1)
        ], {"max_s": args.max_s, "max_d": args.max_d}
    if ident == "general":
        spec = _spec(args.coeffs or "1,1,1")
        return [lambda n=n: identities.general_identity_check(spec, n) for n in range(args.max_n + 1)], {
            "coeffs": list(spec.coeffs),
            "max_n": args.max_n,
        }
    if ident == "pascal-analogy":
        return [lambda n=n: identities.pascal_analogy_check(n) for n in range(args.max_n + 1)], {"max_n": args.max_n}
    if ident == "term-bridge":
        return [
            lambda k=k, d=d: identities.term_bridge(k, d)
            for k in range(args.max_k + 1)
            for d in range(1, args.max_d + 1)
        ], {"max_k": args.max_k, "max_d": args.max_d}
    raise UsageError(f"unknown identity {ident!r}; choose from {', '.join(IDENTITIES)}")


def cmd_verify(args, out):
    checks, params = _verify_checks(args)
    passed = 0
    first_failure = None
    divisible = indivisible_coprime = None
    if args.identity == "theorem2":
        divisible = indivisible_coprime = 0
    for check in checks:
        try:
            report = check()
        except ArithmeticFault as exc:
            report = VerificationReport(args.identity, {}, {"fault": str(exc)})
            report.equal = False
        if "divisible" in report.extra:
            divisible += report.extra["divisible"]
            indivisible_coprime += report.extra["coprime"] and not report.extra["divisible"]
        _emit(report.as_record(), args.format, out)
        if report.equal:
            passed += 1
        elif first_failure is None:
            first_failure = report
    total = len(checks)
    ok = passed == total
    if args.format == "records":
        summary = {"identity": args.identity, "params": params, "values": {"passed": passed, "total": total}, "equal": ok}
        if divisible is not None:
            summary["extra"] = {"divisible": divisible, "indivisible_coprime": indivisible_coprime}
        _emit(summary, "records", out)
    else:
        out.write(f"{args.identity}: {passed}/{total} pass\n")
        if divisible is not None:
            out.write(
                f"d | T(s+d-1,s): {divisible}/{total} pairs"
                f" ({indivisible_coprime} indivisible pairs with gcd(s,d) = 1)\n"
            )
        if first_failure is not None:
            out.write(f"first counterexample: {first_failure}\n")
    return EXIT_OK if ok else EXIT_MISMATCH


# cores


def cmd_cores(args, out):
    if (args.s is None) != (args.d is None):
        raise UsageError("--s and --d must be given together")
    if args.s is not None:
        if args.s < 1 or args.d < 1:
            raise UsageError("--s and --d must be positive")
        pairs = [(args.s, args.d)]
    else:
        pairs = coprime_pairs(args.max_sum)
    consistent = True
    for s, d in pairs:
        try:
            report = conjecture_check(s, d)
        except CoprimalityError as exc:
            raise UsageError(str(exc)) from None
        consistent &= report.equal
        record = report.as_record()
        if args.by_size:
            record["by_size"] = dict(sorted(count_simultaneous_cores_by_size(s, d).items()))
        if args.format == "records":
            _emit(record, "records", out)
            continue
        v = report.values
        verdict = "consistent" if report.equal else "INCONSISTENT"
        prefix = f"s={s} d={d} " if len(pairs) > 1 else ""
        out.write(f"{prefix}count={v['count']} formula={v['formula']} triangle={v['triangle']} {verdict}\n")
        if args.by_size:
            out.write("  by size: " + " ".join(f"{n}:{c}" for n, c in record["by_size"].items()) + "\n")
    return EXIT_OK if consistent else EXIT_MISMATCH


# compare


def _sequence(name):
    if name == "problem-lhs":
        return identities.lhs_problem

    def concat(row_of, width):
        def value(i):
            n = 0
            while i >= width(n):
                i -= width(n)
                n += 1
            return row_of(n)[i]

        return value

    if name == "motzkin-row-concat":
        return concat(triangles.motzkin_row, lambda n: n + 1)
    if name == "trinomial-row-concat":
        return concat(triangles.trinomial_row, lambda n: 2 * n + 1)
    raise UsageError(f"unknown sequence {name!r}; choose from {', '.join(SEQUENCES)}")


def _fixture_path(args):
    if args.bfile:
        return Path(args.bfile)
    filename = SEQUENCES[args.sequence]
    if args.fixtures:
        return Path(args.fixtures) / filename
    return Path(str(resources.files("motzkin_ct") / "fixtures" / filename))


def cmd_compare(args, out, err):
    value = _sequence(args.sequence)
    path = _fixture_path(args)
    try:
        bfile = read_bfile(path)
    except BFileError as exc:
        err.write(f"input error: {exc}\n")
        return EXIT_USAGE
    if not bfile.entries:
        err.write(f"warning: {path} has no entries; nothing compared\n")
    matched = 0
    for index, expected in bfile:
        if index < 0:
            err.write(f"input error: {path}: negative index {index}\n")
            return EXIT_USAGE
        got = value(index)
        equal = got == expected
        _emit(
            {"identity": f"compare:{args.sequence}", "params": {"source": bfile.name, "index": index},
             "values": {"bfile": expected, "computed": got}, "equal": equal},
            args.format,
            out,
        )
        if not equal:
            if args.format == "plain":
                out.write(f"{bfile.name}: mismatch at index {index}: b-file {expected}, computed {got}\n")
            return EXIT_MISMATCH
        matched += 1
    if args.format == "plain":
        out.write(f"{bfile.name}: {matched}/{len(bfile)} indices match\n")
    return EXIT_OK


def build_parser():
    parser = argparse.ArgumentParser(prog="motzkin-ct", description=__doc__.split("\n")[0])
    fmt = argparse.ArgumentParser(add_help=False)
    fmt.add_argument("--format", choices=("plain", "records"), default="plain")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("triangle", parents=[fmt], help="print triangle rows")
    p.add_argument("--kind", choices=KINDS, default="motzkin")
    p.add_argument("--max-n", type=_nonneg, default=6)
    p.add_argument("--coeffs", help="palindromic coefficients a_0,...,a_d for --kind general")

    p = sub.add_parser("verify", parents=[fmt], help="sweep an identity over a range")
    p.add_argument("identity", help=" | ".join(IDENTITIES))
    p.add_argument("--max-n", type=_nonneg, default=None)
    p.add_argument("--max-s", type=_pos, default=100)
    p.add_argument("--max-d", type=_pos, default=None)
    p.add_argument("--max-k", type=_nonneg, default=500)
    p.add_argument("--coeffs", default=None)

    p = sub.add_parser("cores", parents=[fmt], help="count simultaneous (s, s+d, s+2d)-cores")
    p.add_argument("--s", type=int)
    p.add_argument("--d", type=int)
    p.add_argument("--max-sum", type=_pos, default=15, help="sweep coprime pairs with s + 2d <= MAX_SUM")
    p.add_argument("--by-size", action="store_true")

    p = sub.add_parser("compare", parents=[fmt], help="compare a sequence with a b-file")
    p.add_argument("sequence", help=" | ".join(SEQUENCES))
    p.add_argument("--bfile")
    p.add_argument("--fixtures", help="directory holding bNNNNNN.txt files")
    return parser


def _nonneg(text):
    v = int(text)
    if v < 0:
        raise argparse.ArgumentTypeError(f"expected a nonnegative integer, got {text}")
    return v


def _pos(text):
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return v


def _apply_defaults(args):
    if args.command != "verify":
        return
    if args.max_n is None:
        args.max_n = {"theorem1": 200, "general": 30}.get(args.identity, 100)
    if args.max_d is None:
        args.max_d = 20 if args.identity == "term-bridge" else 10


def main(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    _apply_defaults(args)
    try:
        if args.command == "triangle":
            return cmd_triangle(args, out)
        if args.command == "verify":
            return cmd_verify(args, out)
        if args.command == "cores":
            return cmd_cores(args, out)
        return cmd_compare(args, out, err)
    except UsageError as exc:
        err.write(f"usage error: {exc}\n")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
