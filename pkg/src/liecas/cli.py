"""Command-line entry point: ``liecas <command> FILE [options]``.

FILE is a path to an algebra JSON file; names of bundled catalog entries
(``sl2``, ``catalog/sl2.json``) work as well.

Exit codes: 0 success, 1 failed check, 2 usage or input error.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import catalog as _catalog
from . import report
from .algebra_file import AlgebraFile, AlgebraFileError, parse
from .invariants import invariant_count
from .liealg import KernelFault, LeviRejected, validate

EXIT_OK, EXIT_FAIL, EXIT_INPUT = 0, 1, 2


class InputError(Exception):
    pass


def _positive_int(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}")
    if v < 1:
        raise argparse.ArgumentTypeError("must be at least 1")
    return v


def load(arg: str) -> AlgebraFile:
    p = Path(arg)
    if not p.exists():
        bundled = _catalog.resolve(arg)
        if bundled is None:
            raise InputError(f"{arg}: no such file or catalog entry")
        p = bundled
    try:
        return parse(p)
    except AlgebraFileError as exc:
        raise InputError(f"{arg}: {exc}") from exc
    except OSError as exc:
        raise InputError(f"{arg}: {exc.strerror}") from exc


def _emit(args, data: dict, text: str) -> None:
    if args.json:
        print(json.dumps(data, indent=2))
    elif not args.quiet:
        print(text)


def cmd_validate(args) -> int:
    af = load(args.file)
    bad = validate(af.structure_constants())
    data = {"name": af.name, "valid": bad is None}
    if bad is not None:
        data["violation"] = {"triple": [t + 1 for t in bad.triple], "cyclic_sum": [str(x) for x in bad.cyclic_sum]}
    _emit(args, data, "ok" if bad is None else str(bad))
    return EXIT_OK if bad is None else EXIT_FAIL


def cmd_analyze(args) -> int:
    af = load(args.file)
    data = report.analyze(af)
    lines = [f"{af.name} (dim {af.dim})"]
    for key in ("is_solvable", "is_nilpotent", "is_perfect", "is_semisimple", "radical_dim",
                "radical_is_nilpotent", "radical_is_abelian", "derived_series_dims", "lower_central_series_dims"):
        lines.append(f"  {key}: {data[key]}")
    if "theorem_a" in data:
        ta = data["theorem_a"]
        lines.append(f"  levi_dim: {data['levi_dim']}")
        lines.append(f"  perfect <=> fixed radical vectors in [R,R]: {ta['agree']} "
                     f"(perfect={ta['is_perfect']}, contained={ta['contained']})")
        lines.append(f"  dim R = dim R^S + dim [S,R]: {ta['dim_radical']} = {ta['dim_fixed']} + {ta['dim_levi_radical']}")
    _emit(args, data, "\n".join(lines))
    return EXIT_OK


def cmd_count(args) -> int:
    af = load(args.file)
    n = invariant_count(af.structure_constants())
    _emit(args, {"name": af.name, "count": n}, str(n))
    return EXIT_OK


def cmd_invariants(args) -> int:
    af = load(args.file)
    data = report.invariants_report(af, args.max_degree)
    lines = list(data["invariants"]) or ["(none)"]
    note = "complete" if data["complete"] else "shortfall"
    lines.append(f"count {data['count']}, found {len(data['invariants'])} ({note}, max degree {args.max_degree})")
    _emit(args, data, "\n".join(lines))
    return EXIT_OK


def cmd_semi(args) -> int:
    af = load(args.file)
    data = report.semi_report(af, args.max_degree)
    lines = [f"{s['poly']}    weight ({', '.join(s['weight'])})" for s in data["semi_invariants"]] or ["(none)"]
    for d, k in data["skipped_irrational"].items():
        lines.append(f"degree {d}: {k} non-rational eigenvalue(s) skipped")
    _emit(args, data, "\n".join(lines))
    return EXIT_OK


def cmd_casimir(args) -> int:
    af = load(args.file)
    data = report.casimir_report(af, args.max_degree)
    lines = []
    for item in data["casimirs"]:
        flag = "central" if item["central"] else f"NOT central ({item['witness']})"
        lines.append(f"{item['casimir']}    [{flag}]")
    if not lines:
        lines.append("(none)")
    lines.append(f"count {data['count']}, found {len(data['casimirs'])}")
    _emit(args, data, "\n".join(lines))
    return EXIT_OK if all(i["central"] for i in data["casimirs"]) else EXIT_FAIL


def cmd_check(args) -> int:
    files = list(args.files)
    if args.all:
        files += [str(_catalog.path(n)) for n in _catalog.NAMES]
    if not files:
        raise InputError("check: give at least one FILE or --all")
    algebras = [load(f) for f in files]
    results = [report.check(af, args.max_degree) for af in algebras]
    data = {"passed": all(r.passed for r in results), "results": [r.as_dict() for r in results]}
    lines = []
    for r in results:
        lines.append(f"{r.name}: {'PASS' if r.passed else 'FAIL'}")
        for label, ok, detail in r.checks:
            if args.quiet and ok:
                continue
            lines.append(f"  [{'ok' if ok else 'FAIL'}] {label}" + (f"  ({detail})" if detail else ""))
    if args.json:
        print(json.dumps(data, indent=2))
    else:
        print("\n".join(lines))
    return EXIT_OK if data["passed"] else EXIT_FAIL


def cmd_catalog(args) -> int:
    data = {"catalog": [{"name": n, "path": str(_catalog.path(n))} for n in _catalog.NAMES]}
    _emit(args, data, "\n".join(_catalog.NAMES))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--quiet", action="store_true", help="suppress text output")
    degree = argparse.ArgumentParser(add_help=False)
    degree.add_argument("--max-degree", type=_positive_int, default=4, metavar="D")

    parser = argparse.ArgumentParser(prog="liecas", description="Invariants and Casimir operators of Lie algebras.")
    sub = parser.add_subparsers(dest="command", required=True)
    for name, fn, helptext, extra in [
        ("validate", cmd_validate, "check the Jacobi identity", []),
        ("analyze", cmd_analyze, "structure report", []),
        ("count", cmd_count, "number of fundamental invariants", []),
        ("invariants", cmd_invariants, "polynomial invariants up to a degree", [degree]),
        ("semi", cmd_semi, "semi-invariants and their weights", [degree]),
        ("casimir", cmd_casimir, "symmetrized invariants with centrality certificates", [degree]),
    ]:
        p = sub.add_parser(name, help=helptext, parents=[common] + extra)
        p.add_argument("file", metavar="FILE")
        p.set_defaults(func=fn)
    p = sub.add_parser("check", help="run all applicable property checks", parents=[common, degree])
    p.add_argument("files", nargs="*", metavar="FILE")
    p.add_argument("--all", action="store_true", help="check every bundled catalog entry")
    p.set_defaults(func=cmd_check)
    p = sub.add_parser("catalog", help="list bundled algebras", parents=[common])
    p.set_defaults(func=cmd_catalog)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except LeviRejected as exc:
        print(f"error: Levi basis rejected: {exc.reason}", file=sys.stderr)
        return EXIT_INPUT
    except KernelFault as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
