"""Command-line interface: ``k3lattice {forms,snf,classify,k3,kummer}``.

Exit codes: 0 success, 1 honest negative (e.g. not coplanar, verification
failed), 2 usage or parse error, 3 classification inapplicable.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence

from . import k3, kummer
from .cycles import BASIS_LABELS, FORM
from .lattice import ClassificationError, classify, e8_minus, hyperbolic_h, k3_lattice
from .linalg import Matrix, MatrixFormatError, format_matrix, parse_matrix, smith_normal_form

EXIT_OK, EXIT_FALSE, EXIT_USAGE, EXIT_INAPPLICABLE = 0, 1, 2, 3

FORMS = {"e8": e8_minus, "h": hyperbolic_h, "k3": k3_lattice}


def _entry(x) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def matrix_json(m: Matrix) -> dict:
    return {"rows": m.nrows, "cols": m.ncols, "entries": [[_entry(x) for x in r] for r in m.rows]}


def _emit(obj) -> None:
    print(json.dumps(obj, indent=2, sort_keys=True))


def _fail(msg: str, code: int = EXIT_USAGE) -> int:
    print(f"error: {msg}", file=sys.stderr)
    return code


def cmd_forms(args) -> int:
    m = FORMS[args.name]().gram
    if args.json:
        _emit({"name": args.name, **matrix_json(m)})
    else:
        print(format_matrix(m))
    return EXIT_OK


def cmd_snf(args) -> int:
    try:
        with open(args.path, encoding="ascii") as fh:
            m = parse_matrix(fh.read())
    except (OSError, UnicodeDecodeError, MatrixFormatError) as exc:
        return _fail(str(exc))
    if not m.is_integral():
        return _fail("snf needs an integer matrix")
    res = smith_normal_form(m)
    divisors = res.elementary_divisors
    if args.json:
        _emit({
            "elementary_divisors": [str(d) for d in divisors],
            "D": matrix_json(res.D),
            "U": matrix_json(res.U),
            "V": matrix_json(res.V),
        })
    else:
        print(" ".join(map(str, divisors)))
    return EXIT_OK


def cmd_classify(args) -> int:
    try:
        c = classify(args.rank, args.signature)
    except ClassificationError as exc:
        if args.json:
            _emit({"rank": str(args.rank), "signature": str(args.signature), "error": str(exc)})
        else:
            print(f"not classifiable: {exc}", file=sys.stderr)
        return EXIT_INAPPLICABLE
    if args.json:
        _emit({
            "rank": str(c.rank), "signature": str(c.tau),
            "e8_copies": str(c.e8_copies), "h_copies": str(c.h_copies),
            "negated": c.negated, "form": c.label(),
        })
    else:
        print(c.label())
        if c.negated:
            print("note: tau > 0, classified the negated form (E8(-1) -> E8)")
    return EXIT_OK


def cmd_k3_verify(args) -> int:
    report = k3.verify_canonical()
    if args.json:
        _emit(report.to_json())
    else:
        print(report.to_text())
    return EXIT_OK if report.ok else EXIT_FALSE


def cmd_k3_gram(args) -> int:
    basis = k3.build_canonical_basis()
    m = {
        "lt": lambda: FORM.gram_lt,
        "w": lambda: k3.gram_of(basis.w),
        "lambda2": lambda: k3.gram_of(basis.lambda2_primed),
    }[args.which]()
    if args.json:
        _emit({"basis": args.which, **matrix_json(m)})
    else:
        print(format_matrix(m))
    return EXIT_OK


def cmd_k3_basis(args) -> int:
    B, B_inv, integral = k3.change_of_basis()
    if args.json:
        _emit({
            "basis_order": list(BASIS_LABELS),
            "w": [[_entry(x) for x in w.coeffs] for w in k3.build_canonical_basis().w],
            "B": matrix_json(B), "B_inv": matrix_json(B_inv), "lt_in_w_integral": integral,
        })
    else:
        for n, w in enumerate(k3.build_canonical_basis().w, start=1):
            print(f"w{n} = {w}")
        print(f"L/T cycles integral over w-basis: {'yes' if integral else 'no'}")
    return EXIT_OK if integral else EXIT_FALSE


def cmd_kummer_points(args) -> int:
    pts = kummer.fixed_points()
    if args.json:
        _emit([{"label": p.label, "coords": [str(c) for c in p.half_coords()]} for p in pts])
    else:
        for p in pts:
            print(p)
    return EXIT_OK


def _parse_labels(text: str) -> list[int]:
    try:
        labels = [int(t) for t in text.split(",")]
    except ValueError:
        raise ValueError(f"labels must be comma-separated integers, got {text!r}") from None
    return labels


def cmd_kummer_torus(args) -> int:
    try:
        labels = _parse_labels(args.through)
        dirs = kummer.are_coplanar(labels)
    except ValueError as exc:
        return _fail(str(exc))
    if dirs is None:
        if args.json:
            _emit({"labels": labels, "coplanar": False})
        else:
            print("not coplanar")
        return EXIT_FALSE
    cls = kummer.torus_class_from_directions(dirs)
    if args.json:
        _emit({
            "labels": labels, "coplanar": True,
            "directions": [list(dirs.u), list(dirs.v)],
            "class": {name: _entry(c) for name, c in zip(BASIS_LABELS, cls.coeffs) if c},
        })
    else:
        print("coplanar")
        print(f"directions: {dirs}")
        print(f"class: {cls}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    fmt = argparse.ArgumentParser(add_help=False)
    fmt.add_argument("--json", action="store_true", help="emit JSON instead of plain text")

    parser = argparse.ArgumentParser(prog="k3lattice", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("forms", parents=[fmt], help="print a standard Gram matrix")
    p.add_argument("name", choices=sorted(FORMS))
    p.set_defaults(func=cmd_forms)

    p = sub.add_parser("snf", parents=[fmt], help="Smith normal form of a matrix file")
    p.add_argument("path")
    p.set_defaults(func=cmd_snf)

    p = sub.add_parser("classify", parents=[fmt],
                       help="indefinite even unimodular form with given rank and signature")
    p.add_argument("--rank", type=int, required=True)
    p.add_argument("--signature", type=int, required=True)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("k3", help="K3 canonical basis")
    k3sub = p.add_subparsers(dest="k3_command", required=True)
    q = k3sub.add_parser("verify", parents=[fmt], help="verify the canonical basis")
    q.set_defaults(func=cmd_k3_verify)
    q = k3sub.add_parser("gram", parents=[fmt], help="print a Gram matrix")
    q.add_argument("which", choices=["lt", "w", "lambda2"])
    q.set_defaults(func=cmd_k3_gram)
    q = k3sub.add_parser("basis", parents=[fmt], help="print w1..w22 over the L/T basis")
    q.set_defaults(func=cmd_k3_basis)

    p = sub.add_parser("kummer", help="fixed points of z -> -z on the torus")
    ksub = p.add_subparsers(dest="kummer_command", required=True)
    q = ksub.add_parser("fixed-points", parents=[fmt])
    q.set_defaults(func=cmd_kummer_points)
    q = ksub.add_parser("torus", parents=[fmt], help="torus through four fixed points")
    q.add_argument("--through", required=True, metavar="L1,L2,L3,L4")
    q.set_defaults(func=cmd_kummer_torus)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
