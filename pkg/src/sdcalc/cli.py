"""Command-line front end: ``sdcalc <numbers|binomials|bernoulli|verify|exp>``.

Exit codes: 0 success, 1 verification failure, 2 usage or domain error.
Rationals are always rendered as canonical "p/q" strings (integers as "p").
"""
import argparse
import csv
import io
import json
import sys
from fractions import Fraction

from sdcalc import bernoulli, checks
from sdcalc.combinatorics import hoggatt_binomial, sd_number
from sdcalc.errors import DomainError, ResourceLimitError
from sdcalc.series import exp_d_partial_sum


def parse_range(text):
    """Parse ``"3"`` or ``"1..4"`` into a list of ints."""
    try:
        if ".." in text:
            lo, hi = text.split("..", 1)
            lo, hi = int(lo), int(hi)
            if hi < lo:
                raise ValueError
            return list(range(lo, hi + 1))
        return [int(text)]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer or a range a..b, got {text!r}")


def parse_rational(text):
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"malformed rational {text!r}")


def non_negative(text):
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}")
    if value < 0:
        raise argparse.ArgumentTypeError(f"expected a non-negative integer, got {value}")
    return value


def positive(text):
    value = non_negative(text)
    if value < 1:
        raise argparse.ArgumentTypeError("expected a positive integer")
    return value


def truncated_decimal(value, digits):
    """Decimal expansion of ``value`` truncated toward zero after ``digits`` places."""
    value = Fraction(value)
    scaled = abs(value.numerator) * 10**digits // value.denominator
    sign = "-" if value < 0 and scaled else ""
    whole, frac = divmod(scaled, 10**digits)
    if digits == 0:
        return f"{sign}{whole}"
    return f"{sign}{whole}.{frac:0{digits}d}"


def _flatten(value):
    if isinstance(value, dict):
        return ";".join(f"{k}={v}" for k, v in value.items())
    if isinstance(value, bool):
        return str(value).lower()
    return str(value)


def render(command, params, records, fmt, out):
    if fmt == "json":
        doc = {"command": command, "params": params, "records": records}
        out.write(json.dumps(doc, indent=2) + "\n")
        return
    columns = []
    for rec in records:
        for key in rec:
            if key not in columns:
                columns.append(key)
    rows = [[_flatten(rec.get(c, "")) for c in columns] for rec in records]
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(columns)
        writer.writerows(rows)
        out.write(buf.getvalue())
        return
    widths = [max([len(c)] + [len(r[i]) for r in rows]) for i, c in enumerate(columns)]
    lines = ["  ".join(c.ljust(w) for c, w in zip(columns, widths)).rstrip()]
    for r in rows:
        lines.append("  ".join(v.ljust(w) for v, w in zip(r, widths)).rstrip())
    out.write("\n".join(lines) + "\n")


def cmd_numbers(args):
    records = [{"d": d, "n": n, "value": str(sd_number(d, n))}
               for d in args.d for n in range(args.n_max + 1)]
    return 0, {"d": args.d, "n_max": args.n_max}, records


def cmd_binomials(args):
    records = [{"d": d, "n": args.n, "k": k, "value": str(hoggatt_binomial(d, args.n, k))}
               for d in args.d for k in range(args.n + 1)]
    return 0, {"d": args.d, "n": args.n}, records


def cmd_bernoulli(args):
    records = []
    for d in args.d:
        if args.poly:
            family = bernoulli.bernoulli_polynomials(d, args.m, args.n_max)
            for n, p in enumerate(family.polynomials):
                records.append({"d": d, "m": args.m, "n": n,
                                "coefficients": ",".join(str(c) for c in p.coeffs)})
        else:
            table = bernoulli.bernoulli_numbers_series(d, args.m, args.n_max)
            for n, v in enumerate(table.values):
                records.append({"d": d, "m": args.m, "n": n, "value": str(v)})
    params = {"d": args.d, "m": args.m, "n_max": args.n_max, "poly": args.poly}
    return 0, params, records


def _report_record(rep, audit=False):
    if audit:
        status = "match" if rep.passed else "mismatch"
    else:
        status = "pass" if rep.passed else "fail"
    rec = {"identity": rep.identity, "params": rep.params, "status": status,
           "witness": rep.witness}
    if rep.note:
        rec["note"] = rep.note
    return rec


def cmd_verify(args):
    selectors = []
    for chunk in args.identity or []:
        selectors.extend(s.strip() for s in chunk.split(",") if s.strip())
    run_all = args.all or "all" in selectors or (not selectors and not args.audit_tables)
    run_audit = args.audit_tables or (run_all and not args.identity and not args.all)
    if run_all:
        keys = list(checks.SUITES)
    else:
        keys = []
        for s in selectors:
            key = checks.resolve_suite(s)
            if key not in keys:
                keys.append(key)
    records = []
    failed = False
    for key in keys:
        for rep in checks.SUITES[key](args.d, args.m, args.n_max):
            records.append(_report_record(rep))
            failed = failed or not rep.passed
    mismatches = 0
    if run_audit:
        for rep in bernoulli.audit_paper_tables():
            records.append(_report_record(rep, audit=True))
            mismatches += not rep.passed
    total_fail = sum(r["status"] == "fail" for r in records)
    print(f"verify: {len(records)} records, {total_fail} failures, "
          f"{mismatches} printed-table mismatches", file=sys.stderr)
    code = 1 if failed or (args.strict_paper and mismatches) else 0
    params = {"identities": keys, "audit_tables": run_audit, "d": args.d, "m": args.m,
              "n_max": args.n_max, "strict_paper": args.strict_paper}
    return code, params, records


def cmd_exp(args):
    records = []
    for d in args.d:
        value = exp_d_partial_sum(d, args.terms)(args.x)
        rec = {"d": d, "x": str(args.x), "terms": args.terms, "value": str(value)}
        if args.decimal is not None:
            rec["decimal"] = truncated_decimal(value, args.decimal)
            rec["digits"] = args.decimal
        records.append(rec)
    params = {"d": args.d, "x": str(args.x), "terms": args.terms, "decimal": args.decimal}
    return 0, params, records


def build_parser():
    parser = argparse.ArgumentParser(
        prog="sdcalc",
        description="Exact calculus of simplicial d-polytopic numbers.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, d_default=None):
        p.add_argument("--d", type=parse_range, required=d_default is None, default=d_default,
                       help="dimension d, an integer or a range a..b")
        p.add_argument("--format", choices=("table", "csv", "json"), default="table")

    p = sub.add_parser("numbers", help="S_d-numbers [0]_d .. [n-max]_d")
    common(p)
    p.add_argument("--n-max", type=non_negative, required=True)
    p.set_defaults(func=cmd_numbers)

    p = sub.add_parser("binomials", help="row n of the d-Hoggatt triangle")
    common(p)
    p.add_argument("--n", type=non_negative, required=True)
    p.set_defaults(func=cmd_binomials)

    p = sub.add_parser("bernoulli", help="S_d-(hypergeometric) Bernoulli numbers or polynomials")
    common(p)
    p.add_argument("--m", type=positive, default=1, help="hypergeometric order (1 = plain)")
    p.add_argument("--n-max", type=non_negative, required=True)
    p.add_argument("--poly", action="store_true", help="emit polynomial coefficient rows")
    p.set_defaults(func=cmd_bernoulli)

    p = sub.add_parser("verify", help="run identity checks and the printed-table audit")
    common(p, d_default=[1, 2, 3, 4])
    p.add_argument("--m", type=parse_range, default=[1, 2, 3])
    p.add_argument("--n-max", type=non_negative, default=10)
    p.add_argument("--identity", action="append",
                   help="suite or identity id (repeatable, comma-separated, or 'all')")
    p.add_argument("--all", action="store_true", help="run every suite")
    p.add_argument("--audit-tables", action="store_true")
    p.add_argument("--strict-paper", action="store_true",
                   help="treat printed-table mismatches as failures")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("exp", help="partial sum T_{d,terms}(x) of exp_d")
    common(p)
    p.add_argument("--x", type=parse_rational, required=True)
    p.add_argument("--terms", type=positive, required=True)
    p.add_argument("--decimal", type=non_negative, default=None, metavar="DIGITS")
    p.set_defaults(func=cmd_exp)
    return parser


def main(argv=None, out=None):
    out = out or sys.stdout
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        code, params, records = args.func(args)
    except (DomainError, ResourceLimitError) as exc:
        print(f"sdcalc: error: {exc}", file=sys.stderr)
        return 2
    render(args.command, params, records, args.format, out)
    return code


if __name__ == "__main__":
    sys.exit(main())
