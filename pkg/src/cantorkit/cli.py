"""Command-line front end: ``cantor <subcommand> ...``.

Exit status is 0 on success and 2 on usage or domain errors. ``verify``
exits 0 when a digit or gap-formula comparison finds differences (those are
measurements), but 1 when the endpoint recursion disagrees with direct deletion.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction

from . import analysis, families as fam, measures, oracle
from .intervals import IntervalSet, gaps_within, to_csv, to_json_obj
from .rational import fmt, paper_endpoint, parse, to_decimal

MAX_STAGE = 24
ENDPOINT_HEADERS = ("a_(n,k)(α)", "b_(n,k)(α)", "[a_(n,k)(α),b_(n,k)(α)]")


class UsageError(ValueError):
    pass


def _stage(text: str) -> int:
    n = int(text)
    if not 0 <= n <= MAX_STAGE:
        raise argparse.ArgumentTypeError(f"stage must be in 0..{MAX_STAGE}, got {n}")
    return n


def _rational(text: str) -> Fraction:
    try:
        return parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _spec(text: str):
    try:
        return fam.parse_spec(text)
    except fam.SpecError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


# -- rendering helpers ------------------------------------------------------

def r_matrix(rownames, colnames, cells) -> str:
    """Print a quoted character matrix the way R's ``print`` does."""
    quoted = [[f'"{c}"' for c in row] for row in cells]
    rw = max(len(r) for r in rownames)
    widths = [max([len(colnames[j])] + [len(row[j]) for row in quoted])
              for j in range(len(colnames))]
    lines = [" " * (rw + 2) + " ".join(c.ljust(w) for c, w in zip(colnames, widths))]
    for name, row in zip(rownames, quoted):
        lines.append(name.ljust(rw) + " " + " ".join(c.ljust(w) for c, w in zip(row, widths)))
    return "\n".join(lines) + "\n"


def _csv(rows, header) -> str:
    buf = io.StringIO()
    wr = csv.writer(buf, lineterminator="\n")
    wr.writerow(header)
    wr.writerows(rows)
    return buf.getvalue()


def _intervals_table(s) -> str:
    items = s.intervals if isinstance(s, IntervalSet) else s.gaps
    return "".join(str(i) + "\n" for i in items)


# -- subcommands ------------------------------------------------------------

def cmd_endpoints(args) -> tuple[str, int]:
    p, q, n = args.p, args.q, args.n
    table = fam.gamma3_endpoints(p, q, n)
    rows = [(Fraction(0), Fraction(1))] + list(table.rows)
    if args.fraction_style == "paper":
        render = lambda v: paper_endpoint(v, q, n)  # noqa: E731
    else:
        render = fmt
    cells = [(render(a), render(b)) for a, b in rows]
    cells = [(a, b, f"[{a},{b}]") for a, b in cells]
    if args.format == "json":
        return json.dumps({
            "p": p, "q": q, "n": n, "fraction_style": args.fraction_style,
            "rows": [{"k": k, "a": a, "b": b, "interval": iv} for k, (a, b, iv) in enumerate(cells)],
        }, indent=2) + "\n", 0
    if args.format == "csv":
        return _csv([(k, *row) for k, row in enumerate(cells)], ("k", "a", "b", "interval")), 0
    return r_matrix([f"k={k}" for k in range(len(cells))], ENDPOINT_HEADERS, cells), 0


def cmd_stage(args) -> tuple[str, int]:
    s = fam.stage_set(args.spec, args.n)
    if args.format == "json":
        return json.dumps({"spec": str(args.spec), "stage": args.n,
                           "intervals": to_json_obj(s), "length": fmt(s.length)}, indent=2) + "\n", 0
    if args.format == "csv":
        return to_csv(s), 0
    return _intervals_table(s) + f"# {len(s)} components, total length {fmt(s.length)}\n", 0


def cmd_gaps(args) -> tuple[str, int]:
    s = fam.stage_set(args.spec, args.n)
    gaps = gaps_within(s, (0, 1))
    stats = analysis.gap_statistics(s, (0, 1), stage=args.n)
    thick = analysis.thickness_proxy(s, (0, 1)) if len(s) >= 2 else None
    if args.format == "json":
        return json.dumps({"spec": str(args.spec), "stage": args.n, "gaps": to_json_obj(gaps),
                           "statistics": stats.to_dict(),
                           "thickness_proxy": None if thick is None else fmt(thick)}, indent=2) + "\n", 0
    if args.format == "csv":
        return to_csv(gaps), 0
    out = _intervals_table(gaps)
    out += f"# {stats.count} gaps, total length {fmt(stats.total_gap)}\n"
    for length, mult in stats.histogram:
        out += f"#   length {fmt(length)} x {mult}\n"
    if thick is not None:
        out += f"# stage-{args.n} bridge/gap thickness proxy {fmt(thick)}\n"
    return out, 0


def cmd_measure(args) -> tuple[str, int]:
    limit = fam.gamma3_measure(args.p, args.q)
    profile = measures.gamma3_measure_profile(args.p, args.q, args.profile) if args.profile is not None else []
    if args.format == "json":
        return json.dumps({"p": args.p, "q": args.q, "measure": fmt(limit),
                           "profile": [{"n": n, "measure": fmt(m)} for n, m in profile]}, indent=2) + "\n", 0
    if args.format == "csv":
        return _csv([(n, m.numerator, m.denominator) for n, m in profile] or
                    [("limit", limit.numerator, limit.denominator)],
                    ("n", "measure_num", "measure_den")), 0
    out = "".join(f"{n} {fmt(m)}\n" for n, m in profile)
    return out + fmt(limit) + "\n", 0


def cmd_dim(args) -> tuple[str, int]:
    if args.spec is not None:
        k, rr = analysis.similarity_data(args.spec)
    elif args.maps is not None and args.ratio is not None:
        k, rr = args.maps, args.ratio
    else:
        raise UsageError("dim needs a family spec or both --maps and --ratio")
    d = analysis.hausdorff_dimension(k, rr, precision=args.precision)
    if args.format == "json":
        return json.dumps({"maps": d.maps, "ratio_reciprocal": d.ratio_reciprocal,
                           "decimal": d.decimal}) + "\n", 0
    if args.format == "csv":
        return _csv([(d.maps, d.ratio_reciprocal, d.decimal)], ("maps", "ratio_reciprocal", "decimal")), 0
    return f"log {d.maps} / log {d.ratio_reciprocal} = {d.decimal}\n", 0


def cmd_cdf(args) -> tuple[str, int]:
    w = measures.WeightVector.parse(args.weights) if args.weights else measures.default_weights(args.spec)
    if args.x is not None:
        rows = [(args.x, measures.cdf_bounds(args.spec, w, args.x, args.n))]
    else:
        rows = measures.staircase_samples(args.spec, w, args.samples, args.n)
    if args.format == "json":
        return json.dumps(measures.samples_to_json_obj(rows), indent=2) + "\n", 0
    if args.format == "csv":
        return measures.samples_to_csv(rows), 0
    out = ""
    for x, b in rows:
        if b.exact:
            out += f"F({fmt(x)}) = {fmt(b.lower)}\n"
        else:
            out += f"{fmt(b.lower)} <= F({fmt(x)}) <= {fmt(b.upper)}  (~{to_decimal(b.lower, args.precision)})\n"
    return out, 0


def cmd_verify(args) -> tuple[str, int]:
    which, n = args.which, args.n
    witness_check = None
    if which == "gamma3":
        _need(args, "p", "q")
        reports = oracle.verify_gamma3(args.p, args.q, n)
    elif which == "digit":
        _need(args, "p", "q")
        reports = oracle.verify_digit_characterization(args.p, args.q, n)
        witness_check = fam.gamma3_digit_spec(args.p, args.q)
    elif which == "gamma2":
        _need(args, "q")
        reports = oracle.verify_gamma2_formula(args.q, n)
        witness_check = fam.gamma2_digit_spec(args.q)
    else:
        if args.q not in (None, 3):
            raise UsageError("the corollary check concerns q = 3 only")
        reports = oracle.verify_corollary(n)
    all_equal = all(r.equal for r in reports)
    status = 1 if which == "gamma3" and not all_equal else 0

    dicts = []
    for r in reports:
        d = r.to_dict()
        if witness_check is not None:
            d["witness_in_digit_set"] = (None if r.witness is None
                                         else oracle.digit_set_contains(witness_check, r.witness))
        dicts.append(d)
    if args.format == "json":
        return json.dumps({"check": which, "all_equal": all_equal, "reports": dicts}, indent=2) + "\n", status
    if args.format == "csv":
        rows = [(d["stage"], d["left_label"], d["right_label"], d["equal"], d["witness"] or "")
                for d in dicts]
        return _csv(rows, ("stage", "left", "right", "equal", "witness")), status
    if all_equal:
        return f"equal at all stages 0..{n}\n", status
    out = ""
    for d in dicts:
        if d["equal"]:
            continue
        out += (f"stage {d['stage']}: {d['left_label']} != {d['right_label']}; "
                f"witness {d['witness']}")
        if "witness_in_digit_set" in d:
            out += f" (in digit limit set: {d['witness_in_digit_set']})"
        out += "\n"
    return out, status


def _need(args, *names):
    missing = [f"--{m}" for m in names if getattr(args, m) is None]
    if missing:
        raise UsageError(f"verify {args.which} needs {' '.join(missing)}")


def cmd_intersect(args) -> tuple[str, int]:
    if args.t_range is not None:
        lo, hi, m = args.t_range
        m = int(m)
        if m < 2:
            raise UsageError("--t-range needs at least two points")
        ts = [lo + (hi - lo) * Fraction(i, m - 1) for i in range(m)]
        rows = analysis.translation_sweep(args.a, args.b, ts, args.n)
        if args.format == "json":
            return json.dumps([{"t": fmt(t), "length": fmt(length), "components": c}
                               for t, length, c in rows], indent=2) + "\n", 0
        if args.format == "csv":
            return analysis.sweep_to_csv(rows), 0
        return "".join(f"t={fmt(t)} length={fmt(length)} components={c}\n" for t, length, c in rows), 0
    t = args.t if args.t is not None else Fraction(0)
    inter, length = analysis.translate_intersection(args.a, args.b, t, args.n)
    if args.format == "json":
        return json.dumps({"a": str(args.a), "b": str(args.b), "t": fmt(t), "stage": args.n,
                           "intervals": to_json_obj(inter), "length": fmt(length)}, indent=2) + "\n", 0
    if args.format == "csv":
        return to_csv(inter), 0
    return _intervals_table(inter) + f"# {len(inter)} components, total length {fmt(length)}\n", 0


# -- parser -----------------------------------------------------------------

def _common() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("table", "json", "csv"), default=argparse.SUPPRESS)
    common.add_argument("--fraction-style", choices=("reduced", "paper"), default=argparse.SUPPRESS,
                        help="'paper' prints endpoints over q^n with fractional numerators")
    common.add_argument("--precision", type=int, default=argparse.SUPPRESS,
                        help="decimal digits for approximations (default 6)")
    common.add_argument("--out", default=argparse.SUPPRESS, help="write output to FILE")
    return common


def build_parser() -> argparse.ArgumentParser:
    common = _common()
    parser = argparse.ArgumentParser(prog="cantor", parents=[common],
                                     description="Exact finite-stage Cantor set computations.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("endpoints", parents=[common], help="endpoint table of gamma3(p/q)")
    p.add_argument("p", type=int)
    p.add_argument("q", type=int)
    p.add_argument("n", type=_stage)
    p.set_defaults(func=cmd_endpoints)

    for name, func, text in (("gaps", cmd_gaps, "gaps of a stage set in [0,1]"),
                             ("stage", cmd_stage, "retained intervals at a stage")):
        p = sub.add_parser(name, parents=[common], help=text)
        p.add_argument("spec", type=_spec, help="e.g. gamma1:q=5, gamma3:p=1,q=4, digit:base=6,A=0,1,4,5")
        p.add_argument("n", type=_stage)
        p.set_defaults(func=func)

    p = sub.add_parser("measure", parents=[common], help="Lebesgue measure of gamma3(p/q)")
    p.add_argument("p", type=int)
    p.add_argument("q", type=int)
    p.add_argument("--profile", type=_stage, metavar="N", help="also list stage measures 0..N")
    p.set_defaults(func=cmd_measure)

    p = sub.add_parser("dim", parents=[common], help="similarity dimension log K / log(1/r)")
    p.add_argument("spec", type=_spec, nargs="?")
    p.add_argument("--maps", type=int)
    p.add_argument("--ratio", type=int, help="reciprocal contraction ratio 1/r")
    p.set_defaults(func=cmd_dim)

    p = sub.add_parser("cdf", parents=[common], help="staircase distribution function brackets")
    p.add_argument("spec", type=_spec)
    p.add_argument("n", type=_stage)
    p.add_argument("--weights", help="comma-separated weights, e.g. 1/3,2/3 (default uniform)")
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--x", type=_rational)
    g.add_argument("--samples", type=int, metavar="M")
    p.set_defaults(func=cmd_cdf)

    p = sub.add_parser("verify", parents=[common], help="compare independent constructions")
    p.add_argument("which", choices=("gamma3", "digit", "gamma2", "corollary"))
    p.add_argument("--p", type=int)
    p.add_argument("--q", type=int)
    p.add_argument("--n", type=_stage, default=8)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("intersect", parents=[common], help="stage set of A against B shifted by t")
    p.add_argument("a", type=_spec)
    p.add_argument("b", type=_spec)
    p.add_argument("n", type=_stage)
    g = p.add_mutually_exclusive_group()
    g.add_argument("--t", type=_rational)
    g.add_argument("--t-range", type=_rational, nargs=3, metavar=("LO", "HI", "M"))
    p.set_defaults(func=cmd_intersect)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    for name, default in (("format", "table"), ("fraction_style", "reduced"),
                          ("precision", 6), ("out", None)):
        if not hasattr(args, name):
            setattr(args, name, default)
    try:
        text, status = args.func(args)
    except (fam.SpecError, fam.AddressError, analysis.DomainError, UsageError,
            IndexError, ValueError, ArithmeticError) as exc:
        print(f"cantor {args.command}: error: {exc}", file=sys.stderr)
        return 2
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return status


if __name__ == "__main__":
    sys.exit(main())
