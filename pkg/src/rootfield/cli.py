"""Command-line front end.

Exit codes: 0 success, 1 verification failure, 2 usage error.  All output is
a pure function of the arguments and input files; --format json switches the
line-oriented text to a single JSON document.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .classify import classify_rank, survivors, verify_degree_window
from .fieldops import recognize
from .figures import write_figures
from .fileio import parse_field_file, parse_matrix_file, parse_rootset_file
from .numberfield import PRESET_NAMES, make_field
from .realizations import REALIZATION_LABELS, build_realization
from .rootsystems import classify_type, default_cap, generate_weyl, verify_root_system
from .weyldata import weyl_order


def _field_from_arg(name: str):
    if name in PRESET_NAMES:
        return make_field(name)
    with open(name, encoding="utf-8") as fh:
        return make_field(parse_field_file(fh.read()))


def cmd_realize(args) -> int:
    try:
        cert = build_realization(args.type, certify=args.certify, cap=default_cap())
    except KeyError:
        print(
            f"unknown realization label {args.type!r}: realizations exist exactly for "
            f"rank 1 and 2 types ({', '.join(REALIZATION_LABELS)})",
            file=sys.stderr,
        )
        return 2
    text = json.dumps(cert.to_dict(), indent=2, sort_keys=True) + "\n" if args.format == "json" else cert.serialize()
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
        print(f"wrote {args.out}")
    else:
        sys.stdout.write(text)
    return 0


def cmd_classify(args) -> int:
    if not 1 <= args.rank <= 16:
        print("degree out of range: supported range is 1..16", file=sys.stderr)
        return 2
    verify_degree_window()
    reports = classify_rank(args.rank, nonreduced=args.nonreduced)
    if args.format == "json":
        doc = {
            "degree": args.rank,
            "candidates": len(reports),
            "survivors": [str(t) for t in survivors(reports)],
            "reports": [
                {
                    "type": str(r.rst),
                    "order": r.order,
                    "nu2": r.nu2,
                    "nu3": r.nu3,
                    "verdict": r.verdict,
                    "filter": r.eliminating_filter,
                    "witness": r.witness,
                    "outcomes": [
                        {"filter": o.name, "verdict": o.verdict, "witness": o.witness}
                        for o in r.outcomes
                    ],
                }
                for r in reports
            ],
        }
        print(json.dumps(doc, indent=2, sort_keys=True))
        return 0
    print(f"degree = {args.rank}")
    print(f"candidates = {len(reports)}")
    for t in survivors(reports):
        print(f"survivor = {t}")
    if args.trace:
        for r in reports:
            flt = r.eliminating_filter or "-"
            wit = r.witness or "-"
            print(f"trace = {r.rst} | {r.order} | {r.nu2} | {r.nu3} | {r.verdict} | {flt} | {wit}")
    return 0


def cmd_recognize(args) -> int:
    try:
        with open(args.rootset, encoding="utf-8") as fh:
            rs = parse_rootset_file(fh.read())
    except (OSError, ValueError) as exc:
        print(f"cannot read root-set file: {exc}", file=sys.stderr)
        return 2
    report = verify_root_system(rs)
    if not report.valid:
        if args.format == "json":
            print(json.dumps({"valid": False, "witness": report.witnesses[0]}, sort_keys=True))
        else:
            print("valid = no")
            print(f"witness = {report.witnesses[0]}")
        return 1
    rst = classify_type(rs)
    order = weyl_order(rst)
    if args.format == "json":
        print(
            json.dumps(
                {
                    "valid": True,
                    "reduced": report.reduced,
                    "rank": report.rank,
                    "type": str(rst),
                    "weyl_order": order,
                },
                sort_keys=True,
            )
        )
        return 0
    print("valid = yes")
    print(f"reduced = {'yes' if report.reduced else 'no'}")
    print(f"rank = {report.rank}")
    print(f"type = {rst}")
    print(f"weyl_order = {order}")
    return 0


def cmd_opcheck(args) -> int:
    try:
        field = _field_from_arg(args.field)
        with open(args.matrix, encoding="utf-8") as fh:
            m = parse_matrix_file(fh.read())
    except (OSError, ValueError) as exc:
        print(f"bad input: {exc}", file=sys.stderr)
        return 2
    if not m.is_square() or m.nrows != field.degree:
        print(
            f"dimension mismatch: matrix is {m.nrows}x{m.ncols}, field degree is {field.degree}",
            file=sys.stderr,
        )
        return 2
    try:
        op = recognize(m, field)
    except ValueError as exc:
        print(f"bad matrix: {exc}", file=sys.stderr)
        return 2
    doc: dict = {"field": field.name}
    if op is None:
        doc["in_group"] = False
    else:
        order = op.order()
        mult_order = field.is_root_of_unity(op.multiplier)
        doc.update(
            in_group=True,
            multiplier=[str(c) for c in op.multiplier.coords],
            aut=op.aut,
            order=order if order is not None else "infinite",
            multiplier_order=mult_order if mult_order is not None else "infinite",
        )
    if args.format == "json":
        print(json.dumps(doc, sort_keys=True))
        return 0
    print(f"field = {doc['field']}")
    if not doc["in_group"]:
        print("in_group = no")
        return 0
    print("in_group = yes")
    print(f"multiplier = {' '.join(doc['multiplier'])}")
    print(f"aut = {doc['aut']}")
    print(f"order = {doc['order']}")
    print(f"multiplier_order = {doc['multiplier_order']}")
    return 0


def cmd_figures(args) -> int:
    try:
        radius = Fraction(args.radius)
    except (ValueError, ZeroDivisionError):
        print(f"bad radius {args.radius!r}", file=sys.stderr)
        return 2
    if radius < 0:
        print("radius must be nonnegative", file=sys.stderr)
        return 2
    try:
        paths = write_figures(args.out, radius)
    except OSError as exc:
        print(f"cannot write figures: {exc}", file=sys.stderr)
        return 1
    for p in paths:
        print(f"wrote {p}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="rootfield",
        description="Construct, certify, and classify root systems inside rings of integers of number fields.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("realize", help="emit a certified rank-1/rank-2 construction")
    p.add_argument("--type", required=True, help=f"one of {', '.join(REALIZATION_LABELS)}")
    p.add_argument("--certify", action="store_true", help="check every Weyl-group element against the field operators")
    p.add_argument("--out", help="write the certificate to a file")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_realize)

    p = sub.add_parser("classify", help="run the elimination pipeline for one degree")
    p.add_argument("--rank", type=int, required=True)
    p.add_argument("--nonreduced", action="store_true", help="include non-reduced types")
    p.add_argument("--trace", action="store_true", help="one line per candidate with the filter outcomes")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("recognize", help="verify and classify a root-set file")
    p.add_argument("rootset")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_recognize)

    p = sub.add_parser("opcheck", help="decompose a matrix as multiplier-then-automorphism")
    p.add_argument("matrix")
    p.add_argument("--field", required=True, help=f"preset ({', '.join(PRESET_NAMES)}) or a field file")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_opcheck)

    p = sub.add_parser("figures", help="emit the lattice figures as SVG")
    p.add_argument("--out", required=True, help="output directory")
    p.add_argument("--radius", default="5/2", help="lattice radius, exact rational")
    p.set_defaults(func=cmd_figures)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    return args.func(args)


def run() -> None:
    sys.exit(main())
