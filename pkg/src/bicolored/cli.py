"""Command-line interface: counting, bounds, the ratio table, orbits, verification."""

import argparse
import csv
import json
import sys
from fractions import Fraction

from . import verify as verify_mod
from .bounds import bound_report, ratio_table
from .characters import avg_char, twisted_product, CyclicCharacter
from .enumeration import (CapExceeded, CENSUS_CAP, DEGREE_CAP, count_exact, count_naive,
                          free_fraction_lower_bound, orbit_census)
from .exact import decimal_render, parse_qsqrt2, qsqrt2_str


def _record(command, parameters, results):
    return {"command": command, "parameters": parameters, "results": results}


def _emit(record, fmt, out):
    if fmt == "json":
        out.write(json.dumps(record, indent=2, sort_keys=True) + "\n")
        return
    keys = list(record["results"])
    if fmt in ("csv", "tsv"):
        writer = csv.writer(out, delimiter="," if fmt == "csv" else "\t", lineterminator="\n")
        writer.writerow(keys)
        writer.writerow([record["results"][k] for k in keys])
        return
    params = " ".join("%s=%s" % kv for kv in record["parameters"].items())
    out.write("%s %s\n" % (record["command"], params))
    for k in keys:
        out.write("  %s = %s\n" % (k, record["results"][k]))


def _emit_table(record, fmt, out):
    header = record["header"]
    rows = record["rows"]
    if fmt == "json":
        out.write(json.dumps(record, indent=2, sort_keys=True) + "\n")
        return
    if fmt in ("csv", "tsv"):
        writer = csv.writer(out, delimiter="," if fmt == "csv" else "\t", lineterminator="\n")
        writer.writerow(header)
        for row in rows:
            writer.writerow(row)
        return
    widths = [max(len(str(r[i])) for r in [header] + rows) for i in range(len(header))]
    for row in [header] + rows:
        out.write("  ".join(str(c).rjust(w) for c, w in zip(row, widths)) + "\n")


def cmd_count(args, out):
    value = count_exact(args.p, args.q, args.max_degree)
    results = {"value": str(value)}
    if args.oracle == "naive":
        other = count_naive(args.p, args.q)
        results["oracle"] = "naive"
        results["oracle_value"] = str(other)
        results["agreement"] = value == other
    elif args.oracle == "census":
        other = orbit_census(args.p, args.q, args.max_pq).orbit_count
        results["oracle"] = "census"
        results["oracle_value"] = str(other)
        results["agreement"] = value == other
    record = _record("count", {"p": args.p, "q": args.q}, results)
    _emit(record, args.format, out)
    return 0


def cmd_bound(args, out):
    report = bound_report(args.p, args.q, max_degree=args.max_degree)
    results = {
        "theorem_bound": qsqrt2_str(report.theorem_bound),
        "theorem_bound_decimal": decimal_render(report.theorem_bound, 6),
        "places": 6,
        "ao_lower": str(report.ao_lower),
        "ao_upper": str(report.ao_upper),
    }
    if report.exact is not None:
        results["exact"] = str(report.exact)
        results["sandwich_holds"] = bool(report.ao_lower <= report.exact <= report.ao_upper)
        results["theorem_holds"] = (report.theorem_bound - report.exact).sign() >= 0
    record = _record("bound", {"p": args.p, "q": args.q}, results)
    _emit(record, args.format, out)
    return 0


def cmd_table(args, out):
    p_values = list(range(args.p_min, args.p_max + 1, args.p_step))
    k_values = list(range(args.k_min, args.k_max + 1))
    rows = ratio_table(p_values, k_values)
    header = ["p"] + ["k=%d" % k for k in k_values]
    body = [["p=%d" % p] + row for p, row in zip(p_values, rows)]
    record = {"command": "table",
              "parameters": {"p_min": args.p_min, "p_max": args.p_max, "p_step": args.p_step,
                             "k_min": args.k_min, "k_max": args.k_max, "places": 6},
              "header": header, "rows": body}
    _emit_table(record, args.format, out)
    return 0


def cmd_orbits(args, out):
    results = {}
    lower = free_fraction_lower_bound(args.p, args.q, args.max_degree)
    if args.p * args.q <= args.max_pq:
        census = orbit_census(args.p, args.q, args.max_pq)
        f = Fraction(census.free_element_count, census.total)
        results["free_fraction"] = str(f)
        results["orbit_count"] = str(census.orbit_count)
        results["free_elements"] = str(census.free_element_count)
        results["total"] = str(census.total)
        results["census_skipped"] = False
    else:
        results["census_skipped"] = True
    results["lower_bound"] = str(lower)
    record = _record("orbits", {"p": args.p, "q": args.q}, results)
    _emit(record, args.format, out)
    return 0


def cmd_char(args, out):
    if args.char_op == "avg":
        value = avg_char(CyclicCharacter(args.p, parse_qsqrt2(args.z)))
        params = {"op": "avg", "p": args.p, "z": args.z}
    else:
        value = twisted_product(args.p, parse_qsqrt2(args.z), args.q, parse_qsqrt2(args.zprime))
        params = {"op": "twisted", "p": args.p, "z": args.z, "q": args.q, "zprime": args.zprime}
    results = {"value": qsqrt2_str(value),
               "value_decimal": decimal_render(value, 6),
               "places": 6}
    record = _record("char", params, results)
    _emit(record, args.format, out)
    return 0


def cmd_verify(args, out):
    names = list(verify_mod.SUITES) if args.suite == "all" else [args.suite]
    ok = verify_mod.run_suites(names, seed=args.seed, out=lambda line: out.write(line + "\n"))
    out.write("verify: %s\n" % ("all checks passed" if ok else "FAILURES above"))
    return 0 if ok else 1


def build_parser():
    parser = argparse.ArgumentParser(
        prog="bicolored",
        description="Exact counts and bounds for unlabelled bicolored graphs.")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["json", "csv", "tsv", "plain"], default="plain")
    common.add_argument("--max-pq", type=int, default=CENSUS_CAP,
                        help="orbit census cap on p*q (default %d)" % CENSUS_CAP)
    common.add_argument("--max-degree", type=int, default=DEGREE_CAP,
                        help="count cap on max(p, q) (default %d)" % DEGREE_CAP)
    sub = parser.add_subparsers(dest="command", required=True)

    s = sub.add_parser("count", parents=[common], help="exact |B_u(p,q)|")
    s.add_argument("p", type=int)
    s.add_argument("q", type=int)
    s.add_argument("--oracle", choices=["naive", "census"])
    s.set_defaults(func=cmd_count)

    s = sub.add_parser("bound", parents=[common], help="all bounds at one (p,q)")
    s.add_argument("p", type=int)
    s.add_argument("q", type=int)
    s.set_defaults(func=cmd_bound)

    s = sub.add_parser("table", parents=[common], help="ratio table, six decimals")
    s.add_argument("--p-min", type=int, default=3)
    s.add_argument("--p-max", type=int, default=48)
    s.add_argument("--p-step", type=int, default=3)
    s.add_argument("--k-min", type=int, default=0)
    s.add_argument("--k-max", type=int, default=4)
    s.set_defaults(func=cmd_table)

    s = sub.add_parser("orbits", parents=[common], help="free-orbit census and bound")
    s.add_argument("p", type=int)
    s.add_argument("q", type=int)
    s.set_defaults(func=cmd_orbits)

    s = sub.add_parser("char", parents=[common], help="character averages and products")
    s.add_argument("char_op", choices=["avg", "twisted"])
    s.add_argument("p", type=int)
    s.add_argument("z", help="base: sqrt2, an integer, n/d, or a+b*sqrt2")
    s.add_argument("q", type=int, nargs="?")
    s.add_argument("zprime", nargs="?")
    s.set_defaults(func=cmd_char)

    s = sub.add_parser("verify", parents=[common], help="run the property suites")
    s.add_argument("--suite", choices=["all"] + sorted(verify_mod.SUITES), default="all")
    s.add_argument("--seed", type=int, default=0)
    s.set_defaults(func=cmd_verify)

    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "char" and args.char_op == "twisted" and (args.q is None or args.zprime is None):
        parser.error("char twisted needs p z q zprime")
    try:
        return args.func(args, sys.stdout)
    except (CapExceeded, ValueError, ZeroDivisionError) as err:
        print("bicolored: %s" % err, file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
