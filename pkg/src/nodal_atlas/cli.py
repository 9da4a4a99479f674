"""Command-line front-end: every computation in the package behind one
batch-oriented executable with exact text/JSON/CSV output.

Exit codes: 0 success, 2 validation failure (bad arguments), 3 internal
consistency failure (an exact identity that should hold does not).
"""

from __future__ import annotations

import argparse
import csv
import json
import sys

from . import checks
from .bell import complete_bell, partial_bell
from .chow import c_correction_p2, q_general, q_p2_closed, q_p2_extraction
from .exact import format_rational
from .kazarian import MultisingularityType, count_multisingular, s_alpha
from .partitions import enumerate_partitions, format_partition, mobius_coefficient
from .qseries import (
    TABLE_ORDER,
    discriminant,
    eisenstein_g2,
    gyz_channel_residual,
    recover_b1,
    recover_b2,
)
from .tables import (
    ChernNumbers,
    all_forms,
    node_count,
    node_count_bruteforce,
    node_polynomial,
    ratio_table,
)

EXIT_OK = 0
EXIT_VALIDATION = 2
EXIT_INCONSISTENT = 3


class ConsistencyError(Exception):
    """An exact identity that must hold numerically failed."""


def _parse_chern(text):
    parts = [p.strip() for p in text.split(",")]
    if len(parts) != 4:
        raise ValueError(f"--chern wants four comma-separated integers, got {text!r}")
    return ChernNumbers(*(int(p) for p in parts))


def _surface(args):
    if args.degree is not None and args.chern is not None:
        raise ValueError("give either --degree (plane curves) or --chern, not both")
    if args.degree is not None:
        return ChernNumbers.p2(args.degree)
    if args.chern is not None:
        return _parse_chern(args.chern)
    raise ValueError("a surface is required: --degree D for the plane, or --chern d,k,s,x")


def _emit(args, text_lines, payload, csv_rows=None):
    if args.format == "text":
        for line in text_lines:
            print(line)
    elif args.format == "json":
        print(json.dumps(payload, indent=2))
    else:
        writer = csv.writer(sys.stdout, lineterminator="\n")
        for row in csv_rows or []:
            writer.writerow(row)


def _cmd_count(args):
    chern = _surface(args)
    value = node_count(args.nodes, chern)
    if args.oracle:
        brute = node_count_bruteforce(args.nodes, chern)
        if brute != value:
            raise ConsistencyError(
                f"oracle disagreement at r={args.nodes}: {value} vs brute-force {brute}"
            )
    payload = {
        "command": "count",
        "nodes": args.nodes,
        "chern": {"d": str(chern.d), "k": str(chern.k), "s": str(chern.s), "x": str(chern.x)},
        "count": str(value),
    }
    _emit(args, [str(value)], payload, [["nodes", "count"], [args.nodes, value]])
    return EXIT_OK


def _cmd_zr(args):
    poly = node_polynomial(args.r)
    names = ["d", "k", "s", "x"]
    payload = {"command": "zr", "r": args.r, "terms": poly.to_records()}
    rows = [["e_d", "e_k", "e_s", "e_x", "coefficient"]]
    for rec in poly.to_records():
        rows.append(rec["exponents"] + [rec["coefficient"]])
    _emit(args, [poly.__str__(names=names)], payload, rows)
    return EXIT_OK


def _cmd_qn(args):
    if args.general:
        form = q_general(args.n)
        payload = {"command": "qn", "n": args.n, "surface": "general", "form": form.to_dict()}
        rows = [["d", "k", "s", "x"], [form.to_dict()[c] for c in ("d", "k", "s", "x")]]
        _emit(args, [str(form)], payload, rows)
        return EXIT_OK
    closed = q_p2_closed(args.n)
    if args.oracle or args.extraction:
        extracted = q_p2_extraction(args.n)
        if args.oracle and closed != extracted:
            raise ConsistencyError(
                f"closed formula and coefficient extraction disagree at n={args.n}"
            )
        if args.extraction:
            closed = extracted
    payload = {"command": "qn", "n": args.n, "surface": "p2", "coefficients": closed.to_list()}
    _emit(args, [str(closed)], payload, [["degree", "coefficient"]] + [
        [i, c] for i, c in enumerate(closed.to_list())
    ])
    return EXIT_OK


def _cmd_cn(args):
    poly = c_correction_p2(args.n)
    payload = {"command": "cn", "n": args.n, "coefficients": poly.to_list()}
    _emit(args, [str(poly)], payload, [["degree", "coefficient"]] + [
        [i, c] for i, c in enumerate(poly.to_list())
    ])
    return EXIT_OK


def _cmd_bell(args):
    if args.kind == "complete":
        poly = complete_bell(args.n)
    else:
        if args.blocks is None:
            raise ValueError("partial Bell polynomials need --blocks")
        poly = partial_bell(args.n, args.blocks)
    payload = {
        "command": "bell",
        "kind": args.kind,
        "n": args.n,
        "terms": poly.to_records(),
    }
    if args.kind == "partial":
        payload["blocks"] = args.blocks
    rows = [["exponents", "coefficient"]] + [
        [" ".join(map(str, rec["exponents"])), rec["coefficient"]]
        for rec in poly.to_records()
    ]
    _emit(args, [str(poly)], payload, rows)
    return EXIT_OK


def _cmd_partitions(args):
    parts = enumerate_partitions(args.r)
    lines = []
    records = []
    rows = [["partition", "blocks", "mobius"]]
    for pi in parts:
        text = format_partition(pi)
        mob = mobius_coefficient(pi)
        records.append({"partition": text, "blocks": len(pi), "mobius": str(mob)})
        rows.append([text, len(pi), mob])
        lines.append(f"{text}  mobius={mob}" if args.mobius else text)
    payload = {"command": "partitions", "r": args.r, "count": len(parts), "partitions": records}
    _emit(args, lines, payload, rows)
    return EXIT_OK


def _cmd_kazarian(args):
    alpha = MultisingularityType.parse(args.type)
    if args.degree is None and args.chern is None:
        form = s_alpha(alpha)
        payload = {"command": "kazarian", "type": alpha.key(), "form": form.to_dict()}
        rows = [["d", "k", "s", "x"], [form.to_dict()[c] for c in ("d", "k", "s", "x")]]
        _emit(args, [str(form)], payload, rows)
        return EXIT_OK
    chern = _surface(args)
    value = count_multisingular(alpha, chern)
    if value.denominator != 1:
        raise ConsistencyError(
            f"multisingularity count is not integral for {alpha.key()}: {value}"
        )
    payload = {"command": "kazarian", "type": alpha.key(), "count": str(value.numerator)}
    _emit(args, [str(value.numerator)], payload, [["type", "count"], [alpha.key(), value.numerator]])
    return EXIT_OK


def _series_payload(name, series):
    return {"command": "series", "series": name, "order": series.order,
            "coefficients": series.to_list()}


def _cmd_series(args):
    order = args.order
    if args.gyz_check:
        if args.channel is None:
            raise ValueError("--gyz-check needs --channel (one of d, k, s, x)")
        residual = gyz_channel_residual(args.channel, order, all_forms())
        ok = residual.is_zero()
        text = ["residual: 0"] if ok else [f"residual: {residual.to_list()}"]
        payload = {
            "command": "series",
            "series": "gyz-residual",
            "channel": args.channel,
            "order": order,
            "zero": ok,
            "coefficients": residual.to_list(),
        }
        rows = [["n", "coefficient"]] + [[n, c] for n, c in enumerate(residual.to_list())]
        _emit(args, text, payload, rows)
        return EXIT_OK if ok else EXIT_INCONSISTENT
    if args.which == "g2":
        series, name = eisenstein_g2(order), "g2"
    elif args.which == "delta":
        series, name = discriminant(max(order, 1)), "delta"
    elif args.which == "b1":
        series, name = recover_b1(min(order, TABLE_ORDER), all_forms()), "b1"
    else:
        series, name = recover_b2(min(order, TABLE_ORDER), all_forms()), "b2"
    payload = _series_payload(name, series)
    rows = [["n", "coefficient"]] + [[n, c] for n, c in enumerate(series.to_list())]
    _emit(args, [", ".join(series.to_list())], payload, rows)
    return EXIT_OK


def _cmd_ratios(args):
    table = ratio_table()
    lines = []
    records = []
    rows = [["n", "D", "E", "F", "G"]]
    for row in table:
        rendered = row.rendered()
        exact = {
            col: (None if v is None else format_rational(v))
            for col, v in (("D", row.D), ("E", row.E), ("F", row.F), ("G", row.G))
        }
        records.append({"n": row.n, "rendered": rendered, "exact": exact})
        cells = [rendered[c] for c in ("D", "E", "F", "G")]
        rows.append([row.n] + cells)
        lines.append(f"{row.n:2d}  " + "  ".join(f"{c:>6s}" for c in cells))
    payload = {"command": "ratios", "rows": records}
    _emit(args, lines, payload, rows)
    return EXIT_OK


def _cmd_check(args):
    results = checks.run_all()
    lines = []
    rows = [["check", "status", "detail"]]
    ok_all = True
    for res in results:
        status = "PASS" if res.ok else "FAIL"
        ok_all = ok_all and res.ok
        lines.append(f"[{status}] {res.name}" + (f": {res.detail}" if res.detail else ""))
        rows.append([res.name, status, res.detail])
    payload = {
        "command": "check",
        "passed": ok_all,
        "results": [
            {"name": r.name, "ok": r.ok, "detail": r.detail} for r in results
        ],
    }
    _emit(args, lines, payload, rows)
    return EXIT_OK if ok_all else EXIT_INCONSISTENT


def build_parser():
    parser = argparse.ArgumentParser(
        prog="nodal-atlas",
        description="Exact node counts, node polynomials and q-series identities "
        "for curves on surfaces.",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--format", choices=("text", "json", "csv"), default="text",
        help="output format (default: text)",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("count", parents=[common], help="number of r-nodal curves")
    p.add_argument("--nodes", "-r", type=int, required=True)
    p.add_argument("--degree", "-d", type=int, help="plane curves of this degree")
    p.add_argument("--chern", help="surface as d,k,s,x")
    p.add_argument("--oracle", action="store_true",
                   help="cross-check against the set-partition sum")
    p.set_defaults(run=_cmd_count)

    p = sub.add_parser("zr", parents=[common],
                       help="universal node polynomial in (d, k, s, x)")
    p.add_argument("--r", type=int, required=True)
    p.set_defaults(run=_cmd_zr)

    p = sub.add_parser("qn", parents=[common], help="diagonal equivalence terms")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--general", action="store_true",
                   help="general surface (linear form) instead of the plane")
    p.add_argument("--p2", action="store_true", help="plane specialization (default)")
    p.add_argument("--extraction", action="store_true",
                   help="use coefficient extraction instead of the closed formula")
    p.add_argument("--oracle", action="store_true",
                   help="verify closed formula against extraction")
    p.set_defaults(run=_cmd_qn)

    p = sub.add_parser("cn", parents=[common], help="correction terms for the plane")
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(run=_cmd_cn)

    p = sub.add_parser("bell", parents=[common], help="Bell polynomials")
    p.add_argument("kind", choices=("complete", "partial"))
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--blocks", "-l", type=int, help="block count for partial")
    p.set_defaults(run=_cmd_bell)

    p = sub.add_parser("partitions", parents=[common], help="set partitions of {1..r}")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--mobius", action="store_true",
                   help="annotate each partition with its Moebius coefficient")
    p.set_defaults(run=_cmd_partitions)

    p = sub.add_parser("kazarian", parents=[common],
                       help="multisingularity forms and counts")
    p.add_argument("--type", required=True, help="e.g. A1^2*A2")
    p.add_argument("--degree", "-d", type=int, help="count on plane curves of this degree")
    p.add_argument("--chern", help="count on the surface d,k,s,x")
    p.set_defaults(run=_cmd_kazarian)

    p = sub.add_parser("series", parents=[common], help="exact q-series")
    which = p.add_mutually_exclusive_group()
    which.add_argument("--g2", dest="which", action="store_const", const="g2")
    which.add_argument("--delta", dest="which", action="store_const", const="delta")
    which.add_argument("--b1", dest="which", action="store_const", const="b1")
    which.add_argument("--b2", dest="which", action="store_const", const="b2")
    which.add_argument("--gyz-check", dest="gyz_check", action="store_true",
                       help="residual of one channel of the log generating identity")
    p.add_argument("--channel", choices=("d", "k", "s", "x"))
    p.add_argument("--order", type=int, default=TABLE_ORDER)
    p.set_defaults(run=_cmd_series, which=None, gyz_check=False)

    p = sub.add_parser("ratios", parents=[common],
                       help="consecutive-row ratios of the coefficient table")
    p.set_defaults(run=_cmd_ratios)

    p = sub.add_parser("check", parents=[common],
                       help="run the full table-reproduction and identity suite")
    p.set_defaults(run=_cmd_check)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "which", None) is None and args.command == "series" and not args.gyz_check:
        args.which = "g2"
    try:
        return args.run(args)
    except BrokenPipeError:
        return EXIT_OK
    except (ValueError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VALIDATION
    except (ArithmeticError, AssertionError, ConsistencyError) as exc:
        print(f"consistency failure: {exc}", file=sys.stderr)
        return EXIT_INCONSISTENT


if __name__ == "__main__":
    sys.exit(main())
