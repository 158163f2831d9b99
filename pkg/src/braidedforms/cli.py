"""Batch front-end.

Commands
  check           verify the axioms of a structure-constant file
  wedge-dims      per-degree dimensions of the antisymmetric tensor algebra
  build-calculus  construct the exterior algebra of forms and verify it
  classify        close candidate generator sets and tabulate their calculi

Exit codes
  0  success: every requested axiom/verification passed
  1  an axiom or verification failed (including unstable submodule generators)
  2  input file missing, malformed, or schema violation
  3  the requested construction exceeds the desk-scale resource bound

Reports are JSON with "schema_version"; identical inputs always produce
bit-identical reports (exact arithmetic, no randomness, sorted keys).
"""

from __future__ import annotations

import argparse
import sys

from . import io
from .bimodules import check_crossed_module, check_hopf_bimodule
from .braiding import check_yang_baxter
from .calculus import (
    crossed_submodule_closure,
    exterior_calculus,
    exterior_calculus_via_comma,
    fodc_from_submodule,
    kernel_counit_crossed,
    read_off_submodule,
    verify_calculus,
)
from .errors import NotASubmodule, ParseError, TooLarge
from .hopf import check_hopf
from .matrix import Matrix
from .tensor_hopf import build_wedge, wedge_vs_quadratic

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_PARSE = 2
EXIT_TOO_LARGE = 3


def _report_checks(checks: dict) -> dict:
    return {
        name: {"pass": bool(v["pass"]),
               "first_failure": None if v["pass"] else repr(v["first_failure"])}
        for name, v in sorted(checks.items())
    }


def _emit(report: dict, out: str | None) -> None:
    report = {"schema_version": io.SCHEMA_VERSION, **report}
    if out:
        io.save_json(report, out)
    else:
        sys.stdout.write(io.dumps(report))


def _print_checks(checks: dict) -> None:
    for name, v in sorted(checks.items()):
        mark = "ok" if v["pass"] else f"FAIL ({v['first_failure']})"
        print(f"  {name:<24} {mark}")


def cmd_check(args) -> int:
    obj = io.load_json(args.file)
    base = io.Path(args.file).parent
    if args.kind == "hopf":
        checks = check_hopf(io.hopf_from_obj(obj))
    elif args.kind == "braiding":
        space = io.braiding_from_obj(obj)
        ok, witness = check_yang_baxter(space.psi)
        checks = {"yang_baxter": {"pass": ok, "first_failure": None if ok else witness}}
        lam_ok = not space.lam.is_zero
        checks["lambda_invertible"] = {"pass": lam_ok, "first_failure": None if lam_ok else "lambda = 0"}
    elif args.kind == "bimodule":
        checks = check_hopf_bimodule(io.bimodule_from_obj(obj, base))
    elif args.kind == "crossed":
        checks = check_crossed_module(io.crossed_from_obj(obj, base))
    elif args.kind == "calculus":
        checks = verify_calculus(io.calculus_from_obj(obj, base), "fodc")
    else:  # pragma: no cover - argparse restricts choices
        raise ParseError(f"unknown kind {args.kind}")
    report = {"command": "check", "kind": args.kind, "checks": _report_checks(checks)}
    print(f"check {args.kind}: {args.file}")
    _print_checks(checks)
    _emit(report, args.out)
    return EXIT_OK if all(v["pass"] for v in checks.values()) else EXIT_FAIL


def cmd_wedge_dims(args) -> int:
    obj = io.load_json(args.file)
    space = io.braiding_from_obj(obj)
    report = {"command": "wedge-dims", "max_degree": args.max_degree}
    if args.compare_quadratic:
        cmp = wedge_vs_quadratic(space, args.max_degree)
        report["dims"] = cmp["wedge_dims"]
        report["quadratic_dims"] = cmp["quadratic_dims"]
        report["equal"] = cmp["equal"]
        report["first_unequal_degree"] = cmp["first_unequal_degree"]
        print("wedge dims:    " + ",".join(map(str, cmp["wedge_dims"])))
        print("quadratic dims: " + ",".join(map(str, cmp["quadratic_dims"])))
        if cmp["equal"]:
            print("EQUAL")
        else:
            print(f"UNEQUAL from degree {cmp['first_unequal_degree']}")
    else:
        w = build_wedge(space, args.max_degree)
        report["dims"] = list(w.dims)
        print("wedge dims: " + ",".join(map(str, w.dims)))
    _emit(report, args.out)
    return EXIT_OK


def _route_report(calc, N: int, route: str) -> tuple[dict, bool]:
    if route == "biproduct":
        alg = exterior_calculus(calc, N).algebra
    else:
        alg = exterior_calculus_via_comma(calc, N)
    checks = verify_calculus(alg, "diff_hopf")
    ok = all(v["pass"] for v in checks.values())
    return {
        "dims": list(alg.dims),
        "checks": _report_checks(checks),
        "d_blocks": [d.to_obj() for d in alg.differential[:N]],
    }, ok


def cmd_build_calculus(args) -> int:
    obj = io.load_json(args.file)
    calc = io.calculus_from_obj(obj, io.Path(args.file).parent)
    fodc_checks = verify_calculus(calc, "fodc")
    ok = all(v["pass"] for v in fodc_checks.values())
    report = {"command": "build-calculus", "max_degree": args.max_degree,
              "route": args.route, "fodc_checks": _report_checks(fodc_checks)}
    routes = ["maximal", "biproduct"] if args.route == "both" else [args.route]
    for route in routes:
        sub, route_ok = _route_report(calc, args.max_degree, route)
        ok = ok and route_ok
        if args.route == "both":
            report.setdefault("routes", {})[route] = sub
        else:
            report.update(sub)
        print(f"route {route}: dims " + ",".join(map(str, sub["dims"]))
              + ("  all checks pass" if route_ok else "  CHECKS FAILED"))
        _print_checks({k: v for k, v in sub["checks"].items() if not v["pass"]})
    if args.route == "both":
        agree = report["routes"]["maximal"]["dims"] == report["routes"]["biproduct"]["dims"]
        report["routes_agree"] = agree
        ok = ok and agree
        print("routes agree on dims" if agree else "ROUTES DISAGREE on dims")
    _emit(report, args.out)
    return EXIT_OK if ok else EXIT_FAIL


def cmd_classify(args) -> int:
    obj = io.load_json(args.file)
    base = io.Path(args.file).parent
    h = io.load_hopf_ref(obj.get("hopf", obj if "mult" in obj else None), base)
    mc, _ = kernel_counit_crossed(h)
    if "candidates" in obj:
        candidate_vecs = obj["candidates"]
    else:
        # default sweep: no generators, each coordinate vector, all of them
        eye = Matrix.identity(mc.dim)
        unit_vec = [[eye[r, c].to_obj() for r in range(mc.dim)] for c in range(mc.dim)]
        candidate_vecs = [[]] + [[v] for v in unit_vec] + [unit_vec]
    entries = []
    ok = True
    for vecs in candidate_vecs:
        cols = [io.vector_to_matrix(v, mc.dim) for v in vecs]
        gens = Matrix(mc.dim, len(cols),
                      [c.entries[r] for r in range(mc.dim) for c in cols]) \
            if cols else Matrix.zero(mc.dim, 0)
        closed = crossed_submodule_closure(mc, gens.column_echelon_basis()[0])
        calc = fodc_from_submodule(h, closed)
        recovered = read_off_submodule(h, calc)
        roundtrip = recovered == closed
        ok = ok and roundtrip
        entries.append({
            "generators": len(vecs),
            "closure_dim": closed.cols,
            "calculus_dim": calc.x.dim,
            "roundtrip": roundtrip,
        })
        print(f"  {len(vecs)} generator(s) -> submodule dim {closed.cols}, "
              f"calculus dim {calc.x.dim}, roundtrip {'ok' if roundtrip else 'FAIL'}")
    report = {"command": "classify", "ker_counit_dim": mc.dim, "entries": entries}
    _emit(report, args.out)
    return EXIT_OK if ok else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="braidedforms", description=__doc__,
        formatter_class=argparse.RawDescriptionHelpFormatter)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="verify the axioms of a structure file")
    p.add_argument("file")
    p.add_argument("--kind", required=True,
                   choices=["hopf", "braiding", "bimodule", "crossed", "calculus"])
    p.add_argument("--out")
    p.set_defaults(fn=cmd_check)

    p = sub.add_parser("wedge-dims", help="dimensions of the braided exterior algebra")
    p.add_argument("file")
    p.add_argument("--max-degree", type=int, default=4)
    p.add_argument("--compare-quadratic", action="store_true")
    p.add_argument("--out")
    p.set_defaults(fn=cmd_wedge_dims)

    p = sub.add_parser("build-calculus", help="exterior algebra of differential forms")
    p.add_argument("file")
    p.add_argument("--max-degree", type=int, default=3)
    p.add_argument("--route", choices=["maximal", "biproduct", "both"], default="biproduct")
    p.add_argument("--out")
    p.set_defaults(fn=cmd_build_calculus)

    p = sub.add_parser("classify", help="calculi from candidate generator sets")
    p.add_argument("file")
    p.add_argument("--out")
    p.set_defaults(fn=cmd_classify)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if getattr(args, "max_degree", 1) < 1:
        print("error: --max-degree must be >= 1", file=sys.stderr)
        return EXIT_PARSE
    try:
        return args.fn(args)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except TooLarge as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_TOO_LARGE
    except NotASubmodule as exc:
        print(f"error: {exc}; hint: extend the generator list until it is "
              "closed under the action and coaction", file=sys.stderr)
        return EXIT_FAIL


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
