"""Command-line front end: ``partcalc eval|sum|verify|fit|enumerate``.

Exit codes: 0 when every report passes, 1 on any failed identity, 2 on a
usage error (bad partition, unknown statistic, cap exceeded).
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import replace

from . import verify
from .algebra import DensePolynomial
from .diffops import DEFAULT_OPERATOR_CAP, skew_sum_via_binomial, skew_weighted_sum
from .partitions import DEFAULT_PARTITION_CAP, CapExceeded, as_partition, enumerate_extensions, hook_product, parse
from .report import lines_tsv, render, summary_tsv
from .stats import parse_stat_id, statistic_function
from .tableaux import skew_count, syt_count


class UsageError(Exception):
    pass


def _partition(text):
    try:
        return parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _stat(text):
    try:
        return parse_stat_id(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _positive(text):
    v = int(text)
    if v <= 0:
        raise argparse.ArgumentTypeError(f"must be positive: {v}")
    return v


def _nonnegative(text):
    v = int(text)
    if v < 0:
        raise argparse.ArgumentTypeError(f"must be nonnegative: {v}")
    return v


def _value_text(value) -> str:
    if isinstance(value, DensePolynomial):
        return value.format("z")
    return str(value)


def _emit_record(record: dict, fmt: str, pretty: str, out) -> None:
    if fmt == "json":
        out.write(json.dumps(render(record), sort_keys=True) + "\n")
    elif fmt == "tsv":
        keys = list(record)
        out.write("\t".join(keys) + "\n")
        out.write("\t".join(_cell(record[k]) for k in keys) + "\n")
    else:
        out.write(pretty + "\n")


def _cell(v) -> str:
    r = render(v)
    return ",".join(map(str, r)) if isinstance(r, list) else str(r)


def cmd_eval(args, out) -> int:
    lam = args.partition
    value = statistic_function(args.stat)(lam)
    _emit_record({"stat": str(args.stat), "lambda": lam, "value": value}, args.format, _value_text(value), out)
    return 0


def cmd_sum(args, out) -> int:
    g = statistic_function(args.stat)
    if args.mode == "direct":
        value = skew_weighted_sum(g, args.mu, args.n, cap=args.partition_cap)
    else:
        value = skew_sum_via_binomial(g, args.mu, args.n, cap=args.operator_cap)
    record = {"stat": str(args.stat), "mu": args.mu, "n": args.n, "mode": args.mode, "value": value}
    _emit_record(record, args.format, _value_text(value), out)
    return 0


def _caps(args) -> verify.Caps:
    caps = verify.Caps()
    overrides = {
        "n_max": args.n_max,
        "r_max": args.r_max,
        "op_r_max": args.r_max,
        "skew_mu_max": args.mu_max,
        "skew_n_max": args.skew_n_max,
        "op_lambda_max": args.lambda_max,
        "no_N": args.N,
        "operator_cap": args.operator_cap,
    }
    return replace(caps, **{k: v for k, v in overrides.items() if v is not None})


def cmd_verify(args, out) -> int:
    names = list(verify.CHECKS) if args.identity == "all" else [args.identity]
    if args.identity != "all" and args.identity not in verify.CHECKS:
        raise UsageError(f"unknown identity {args.identity!r}; choose from: all, " + ", ".join(verify.CHECKS))
    reports = verify.run_suite(_caps(args), names, workers=args.workers)
    if args.format == "json":
        for r in reports:
            out.write(r.to_json() + "\n")
    elif args.format == "tsv":
        out.write("\n".join(lines_tsv(reports)) + "\n")
    else:
        rows = [line.split("\t") for line in summary_tsv(reports)]
        widths = [max(len(row[i]) for row in rows) for i in range(len(rows[0]))]
        for row in rows:
            out.write("  ".join(cell.ljust(w) for cell, w in zip(row, widths)).rstrip() + "\n")
        for r in reports:
            if not r.passed:
                out.write(f"FAIL {r.identity} {r.params_text()}\n")
                out.write(f"  lhs = {_cell(r.lhs)}\n  rhs = {_cell(r.rhs)}\n")
                if r.counterexample is not None:
                    out.write(f"  counterexample = {_cell(r.counterexample)}\n")
    return 0 if all(r.passed for r in reports) else 1


def cmd_fit(args, out) -> int:
    g = statistic_function(args.stat)
    values = [skew_weighted_sum(g, args.mu, n, cap=args.partition_cap) for n in range(args.n_max + 1)]
    if len(values) < args.degree + 2:
        raise UsageError(f"--n-max must be at least {args.degree + 1} for degree {args.degree}")
    report = verify.polynomiality_check(values, args.degree, "fit")
    poly = report.detail
    text = poly.format("n") if report.passed else "no polynomial of degree <= %d fits" % args.degree
    record = {"stat": str(args.stat), "mu": args.mu, "degree": args.degree, "n_max": args.n_max,
              "pass": report.passed, "polynomial": poly, "values": values}
    _emit_record(record, args.format, text, out)
    return 0 if report.passed else 1


def cmd_enumerate(args, out) -> int:
    mu = args.mu
    rows = []
    for lam in enumerate_extensions(mu, args.n, cap=args.partition_cap):
        rows.append({"lambda": lam, "f": syt_count(lam), "f_skew": skew_count(lam, mu), "H": hook_product(lam)})
    if args.format == "json":
        for row in rows:
            out.write(json.dumps(render(row), sort_keys=True) + "\n")
        return 0
    header = ["lambda", "f", "f_skew", "H"]
    table = [header] + [[_cell(row[k]) for k in header] for row in rows]
    if args.format == "tsv":
        for line in table:
            out.write("\t".join(line) + "\n")
    else:
        table[1:] = [[c or "()" for c in line] for line in table[1:]]
        widths = [max(len(line[i]) for line in table) for i in range(len(header))]
        for line in table:
            out.write("  ".join(c.rjust(w) for c, w in zip(line, widths)) + "\n")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="partcalc", description="Exact hook-length sums and difference operators.")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "tsv", "pretty"), default="pretty")
    pcap = argparse.ArgumentParser(add_help=False)
    pcap.add_argument("--partition-cap", type=_positive, default=DEFAULT_PARTITION_CAP,
                      help="largest |lambda| enumerated")
    ocap = argparse.ArgumentParser(add_help=False)
    ocap.add_argument("--operator-cap", type=_positive, default=DEFAULT_OPERATOR_CAP,
                      help="deepest D^k iterate")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("eval", parents=[common], help="evaluate a statistic at one partition")
    p.add_argument("stat", type=_stat, help="e.g. S:1, C:2/H, q:3, p:2,1, L:1, phi:0, invH")
    p.add_argument("partition", type=_partition, help='comma separated parts, "" for the empty partition')
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("sum", parents=[common, pcap, ocap], help="sum f_{lambda/mu} g(lambda) over |lambda/mu| = n")
    p.add_argument("--stat", type=_stat, required=True)
    p.add_argument("--mu", type=_partition, default=parse(""))
    p.add_argument("--n", type=_nonnegative, required=True, help="number of added boxes")
    p.add_argument("--mode", choices=("direct", "binomial"), default="direct")
    p.set_defaults(func=cmd_sum)

    p = sub.add_parser("verify", parents=[common, ocap], help="run one identity, or all, over a parameter grid")
    p.add_argument("identity", help="identity name or 'all'")
    p.add_argument("--n-max", type=_positive)
    p.add_argument("--r-max", type=_nonnegative)
    p.add_argument("--mu-max", type=_nonnegative)
    p.add_argument("--skew-n-max", type=_nonnegative)
    p.add_argument("--lambda-max", type=_nonnegative)
    p.add_argument("--N", type=_nonnegative, help="Nekrasov-Okounkov truncation")
    p.add_argument("--workers", type=_positive, default=1)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("fit", parents=[common, pcap], help="interpolate n -> sum f_{lambda/mu} g(lambda)")
    p.add_argument("--stat", type=_stat, required=True)
    p.add_argument("--mu", type=_partition, default=parse(""))
    p.add_argument("--degree", type=_nonnegative, required=True)
    p.add_argument("--n-max", type=_nonnegative, required=True)
    p.set_defaults(func=cmd_fit)

    p = sub.add_parser("enumerate", parents=[common, pcap], help="list lambda containing mu with n more boxes")
    p.add_argument("n", type=_nonnegative)
    p.add_argument("--mu", type=_partition, default=parse(""))
    p.set_defaults(func=cmd_enumerate)
    return parser


def main(argv=None, out=None) -> int:
    out = sys.stdout if out is None else out
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "mu", None) is not None:
        args.mu = as_partition(args.mu)
    try:
        return args.func(args, out)
    except (UsageError, CapExceeded, ValueError) as exc:
        print(f"partcalc: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
