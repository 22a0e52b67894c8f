"""Command line front end.

Layout: `defectpoly [--json] [--jobs N] COMMAND ...` with the commands

    construct  FAMILY ARGS [-o FILE]     emit a vertex file
    transform  OP [ARGS] [-i F] [-o F]   vertex file in, vertex file out
    invariant  WHAT [FILE]               vertex file in, numbers out
    repro                                run the built-in golden checks

Exit codes: 0 success, 1 domain failure (bad polytope data, out-of-range
arguments, a failed repro check), 2 usage errors.
"""

from __future__ import annotations

import argparse
import json
import pathlib
import sys

from . import constructions as cons
from . import geometry, polyfile
from .constructions import VertexCapError
from .invariants import ct_invariant, f_poly, report
from .polytope import Polytope

__all__ = ["main", "build_parser"]


def _read_polytope(path: str | None) -> Polytope:
    if path is None or path == "-":
        text = sys.stdin.read()
    else:
        try:
            text = pathlib.Path(path).read_text()
        except OSError as exc:
            raise ValueError(f"cannot read {path}: {exc}") from exc
    return polyfile.parse(text)


def _write_text(path: str | None, text: str) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        pathlib.Path(path).write_text(text)


def _emit(args, obj: dict, text: str) -> None:
    if args.json:
        print(json.dumps(obj))
    else:
        print(text)


# -- command bodies -------------------------------------------------------


def _cmd_construct(args) -> int:
    _write_text(args.output, polyfile.serialize(args.build(args)))
    return 0


def _cmd_transform(args) -> int:
    p = _read_polytope(args.input)
    _write_text(args.output, polyfile.serialize(args.apply(args, p)))
    return 0


def _cmd_ct(args) -> int:
    value = ct_invariant(_read_polytope(args.file), args.t)
    _emit(args, {"schema": 1, "invariant": "ct", "t": args.t, "value": value},
          str(value))
    return 0


def _cmd_fpoly(args) -> int:
    coeffs = f_poly(_read_polytope(args.file)).integer_coeffs()
    _emit(args, {"schema": 1, "invariant": "fpoly", "coefficients": list(coeffs)},
          " ".join(str(c) for c in coeffs))
    return 0


def _cmd_ehrhart(args) -> int:
    poly = geometry.ehrhart(_read_polytope(args.file))
    _emit(args,
          {"schema": 1, "invariant": "ehrhart",
           "coefficients": [str(c) for c in poly.coeffs]},
          str(poly))
    return 0


def _cmd_report(args) -> int:
    rep = report(_read_polytope(args.file))
    if args.json:
        print(json.dumps(rep.to_dict()))
    else:
        print(rep.to_text())
    return 0


def _repro_checks() -> list[tuple[str, str, str]]:
    """(name, expected, computed) for the built-in golden values."""
    checks = []
    p32 = cons.prism(cons.simplex(2))
    checks.append(("smooth.prism_simplex2", "true",
                   "true" if geometry.is_smooth(p32) else "false"))
    checks.append(("c1.prism_simplex2", "0", str(ct_invariant(p32, 1))))
    checks.append(("c1.hypersimplex_3_6", "136",
                   str(ct_invariant(cons.hypersimplex(3, 6), 1))))
    c3 = cons.cube(3)
    checks.append(("c0.cube3", "-2", str(ct_invariant(c3, 0))))
    checks.append(("c1.cube3", "4", str(ct_invariant(c3, 1))))
    for r, expected in ((1, "-1"), (2, "-2"), (3, "-6")):
        q = cons.r_fold_pyramid(cons.cube(3), r)
        checks.append((f"c{r}.pyr{r}_cube3", expected, str(ct_invariant(q, r))))
    for r, expected in (
            (0, "24 36 24 4"),
            (1, "120 192 114 32 -1"),
            (3, "5040 9060 5538 1698 188 -3 0"),
            (5, "362880 717696 491304 163056 28086 1490 -15 0 0")):
        q = cons.r_fold_pyramid(cons.cube(3), r)
        name = f"f.pyr{r}_cube3" if r else "f.cube3"
        checks.append((name, expected, str(f_poly(q))))
    checks.append(("c1.pyr2_cube2", "0",
                   str(ct_invariant(cons.r_fold_pyramid(cons.cube(2), 2), 1))))
    return checks


def _cmd_repro(args) -> int:
    checks = _repro_checks()
    ok = all(expected == computed for _, expected, computed in checks)
    if args.json:
        print(json.dumps({
            "schema": 1,
            "checks": [{"name": n, "expected": e, "computed": c, "pass": e == c}
                       for n, e, c in checks],
            "all_pass": ok,
        }))
    else:
        width = max(len(n) for n, _, _ in checks)
        for name, expected, computed in checks:
            status = "PASS" if expected == computed else "FAIL"
            print(f"[{status}] {name.ljust(width)}  expected {expected}"
                  + ("" if expected == computed else f", computed {computed}"))
        npass = sum(e == c for _, e, c in checks)
        print(f"{npass}/{len(checks)} checks passed")
    return 0 if ok else 1


# -- parser wiring --------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="defectpoly",
        description="Exact invariants of lattice polytopes from vertex files.")
    parser.add_argument("--json", action="store_true",
                        help="machine-readable output for invariant and repro")
    parser.add_argument("--jobs", type=int, default=1, metavar="N",
                        help="worker hint, accepted for compatibility; "
                             "all computation is single-process")
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    out_opt = argparse.ArgumentParser(add_help=False)
    out_opt.add_argument("-o", "--output", metavar="FILE",
                         help="write the vertex file here (default stdout)")
    in_opt = argparse.ArgumentParser(add_help=False)
    in_opt.add_argument("-i", "--input", metavar="FILE",
                        help="read the vertex file from here (default stdin)")

    p_con = sub.add_parser("construct", help="build a named polytope")
    con = p_con.add_subparsers(dest="family", required=True, metavar="FAMILY")

    sp = con.add_parser("simplex", parents=[out_opt], help="standard d-simplex")
    sp.add_argument("d", type=int)
    sp.set_defaults(func=_cmd_construct, build=lambda a: cons.simplex(a.d))

    sp = con.add_parser("cube", parents=[out_opt], help="0/1 d-cube")
    sp.add_argument("d", type=int)
    sp.set_defaults(func=_cmd_construct, build=lambda a: cons.cube(a.d))

    sp = con.add_parser("hypersimplex", parents=[out_opt],
                        help="0/1 vectors of length n with k ones")
    sp.add_argument("k", type=int)
    sp.add_argument("n", type=int)
    sp.set_defaults(func=_cmd_construct,
                    build=lambda a: cons.hypersimplex(a.k, a.n))

    sp = con.add_parser("prism-over-file", parents=[out_opt],
                        help="prism over the polytope in FILE")
    sp.add_argument("file", metavar="FILE")
    sp.set_defaults(func=_cmd_construct,
                    build=lambda a: cons.prism(_read_polytope(a.file)))

    sp = con.add_parser("product", parents=[out_opt],
                        help="cartesian product of two vertex files")
    sp.add_argument("files", metavar="FILE", nargs=2)
    sp.set_defaults(func=_cmd_construct,
                    build=lambda a: cons.product(*(_read_polytope(f)
                                                   for f in a.files)))

    sp = con.add_parser("cayley", parents=[out_opt],
                        help="Cayley polytope of the given vertex files")
    sp.add_argument("files", metavar="FILE", nargs="+")
    sp.set_defaults(func=_cmd_construct,
                    build=lambda a: cons.cayley([_read_polytope(f)
                                                 for f in a.files]))

    p_tr = sub.add_parser("transform", help="rebuild a polytope from another")
    tr = p_tr.add_subparsers(dest="op", required=True, metavar="OP")

    sp = tr.add_parser("prism", parents=[in_opt, out_opt], help="P x [0,1]")
    sp.set_defaults(func=_cmd_transform, apply=lambda a, p: cons.prism(p))

    sp = tr.add_parser("pyramid", parents=[in_opt, out_opt],
                       help="lattice pyramid over P")
    sp.set_defaults(func=_cmd_transform,
                    apply=lambda a, p: cons.lattice_pyramid(p))

    sp = tr.add_parser("rpyr", parents=[in_opt, out_opt],
                       help="r-fold lattice pyramid")
    sp.add_argument("r", type=int)
    sp.set_defaults(func=_cmd_transform,
                    apply=lambda a, p: cons.r_fold_pyramid(p, a.r))

    sp = tr.add_parser("dilate", parents=[in_opt, out_opt], help="t * P")
    sp.add_argument("t", type=int)
    sp.set_defaults(func=_cmd_transform,
                    apply=lambda a, p: geometry.dilate(p, a.t))

    p_inv = sub.add_parser("invariant", help="compute an invariant of a vertex file")
    inv = p_inv.add_subparsers(dest="what", required=True, metavar="WHAT")

    sp = inv.add_parser("ct", help="the invariant c_t")
    sp.add_argument("--t", type=int, required=True, metavar="T")
    sp.add_argument("file", metavar="FILE", nargs="?",
                    help="vertex file (default stdin)")
    sp.set_defaults(func=_cmd_ct)

    sp = inv.add_parser("c0", help="shorthand for ct --t 0")
    sp.add_argument("file", metavar="FILE", nargs="?")
    sp.set_defaults(func=_cmd_ct, t=0)

    sp = inv.add_parser("fpoly", help="convolution polynomial coefficients")
    sp.add_argument("file", metavar="FILE", nargs="?")
    sp.set_defaults(func=_cmd_fpoly)

    sp = inv.add_parser("ehrhart", help="Ehrhart polynomial coefficients")
    sp.add_argument("file", metavar="FILE", nargs="?")
    sp.set_defaults(func=_cmd_ehrhart)

    sp = inv.add_parser("report", help="all headline invariants at once")
    sp.add_argument("file", metavar="FILE", nargs="?")
    sp.set_defaults(func=_cmd_report)

    sp = sub.add_parser("repro", help="recompute the built-in golden values")
    sp.set_defaults(func=_cmd_repro)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        code = exc.code
        if code is None:
            return 0
        return code if isinstance(code, int) else 2
    try:
        return args.func(args)
    except (ValueError, VertexCapError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
