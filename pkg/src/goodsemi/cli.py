"""Command line interface.

Exit codes: 0 success or true, 1 mathematical false, 2 usage error,
3 validation error, 4 budget exceeded.
"""

from __future__ import annotations

import argparse
import logging
import sys
from pathlib import Path

from . import formats
from . import lattice as L
from .catalog import BudgetExceeded, hunt_cor26
from .duality import dual, is_canonical, normalized_canonical, symmetry_report
from .idealops import as_ideal
from .metric import NotContained, ideal_distance
from .oracle import SearchBudgetExceeded
from .poincare import check_symmetry_theorem, poincare_polynomial
from .render import render_staircase
from .semigroup import GoodSemigroup, validate

OK, FALSE, USAGE, INVALID, BUDGET = 0, 1, 2, 3, 4


class UsageError(Exception):
    pass


def _ints(text: str, n: int | None = None, name: str = "value") -> tuple:
    try:
        vals = tuple(int(x) for x in text.split(","))
    except ValueError:
        raise UsageError(f"{name} must be comma-separated integers, got {text!r}") from None
    if n is not None and len(vals) != n:
        raise UsageError(f"{name} needs {n} integers, got {len(vals)}")
    return vals


def _box(text, s, name):
    vals = _ints(text, 2 * s, name)
    try:
        return L.Box(vals[:s], vals[s:])
    except ValueError as exc:
        raise UsageError(f"{name}: {exc}") from None


def _load_semigroup(path) -> GoodSemigroup:
    doc = formats.load(path)
    if doc.kind != "semigroup":
        raise UsageError(f"{path} is not a semigroup file")
    return doc.payload


def _load_ideal(path, S: GoodSemigroup):
    doc = formats.load(path, parent=S)
    if doc.kind == "semigroup":
        if doc.payload != S:
            raise UsageError(f"{path} is a different semigroup")
        return as_ideal(S)
    if doc.kind != "ideal":
        raise UsageError(f"{path} is not an ideal file")
    return doc.payload


def _load_object(path):
    doc = formats.load(path)
    if doc.kind not in ("semigroup", "ideal"):
        raise UsageError(f"{path} holds a {doc.kind}, expected a semigroup or ideal")
    return doc


def _emit(text: str, out: str | None):
    if out:
        Path(out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def cmd_validate(args):
    doc = _load_object(args.file)
    report = validate(doc.payload)
    print(f"{doc.kind}: {report}")
    return OK if report.passed else INVALID


def cmd_info(args):
    doc = _load_object(args.file)
    E = doc.payload
    lines = [
        f"kind: {doc.kind}",
        f"s: {E.s}",
        f"mu: {list(E.mu)}",
        f"gamma: {list(E.gamma)}",
        f"small elements: {len(E.small)}",
        f"poincare: {poincare_polynomial(E)}",
    ]
    if doc.kind == "semigroup":
        K = normalized_canonical(E)
        lines.append(f"symmetric (K0 = S): {K == as_ideal(E)}")
        lines.append(f"K0 small: {[list(p) for p in K.sorted_small()]}")
    else:
        lines.append(f"canonical: {is_canonical(E.parent, E)}")
    print("\n".join(lines))
    return OK


def cmd_canonical(args):
    doc = _load_object(args.file)
    sys.stdout.write(formats.print_document(doc))
    return OK


def cmd_dual(args):
    S = _load_semigroup(args.semigroup)
    E = _load_ideal(args.ideal, S)
    _emit(formats.print_document(formats.Document("ideal", dual(S, E))), args.out)
    return OK


def cmd_distance(args):
    S = _load_semigroup(args.semigroup)
    F = _load_ideal(args.outer, S)
    E = _load_ideal(args.inner, S)
    try:
        print(ideal_distance(F, E))
    except NotContained as exc:
        raise UsageError(str(exc)) from None
    return OK


def cmd_poincare(args):
    S = _load_semigroup(args.semigroup)
    E = _load_ideal(args.ideal, S) if args.ideal else as_ideal(S)
    P = poincare_polynomial(E)
    if args.json:
        sys.stdout.write(formats.print_document(formats.Document("polynomial", P)))
    else:
        print(P)
    return OK


def cmd_symmetry(args):
    S = _load_semigroup(args.semigroup)
    E = _load_ideal(args.ideal, S)
    holds, report = check_symmetry_theorem(S, E)
    if args.json:
        payload = formats.symmetry_payload(report, holds)
        sys.stdout.write(formats.print_document(formats.Document("report", payload)))
    else:
        for name, value in zip(("i", "ii", "iii", "iv"), report.conditions):
            print(f"condition ({name}): {value}")
        for c, p, i in report.violations:
            print(f"  violation ({c}) at {list(p)} axis {i}")
        print(f"symmetry identity: {holds}")
    return OK if holds else FALSE


def cmd_search(args):
    s = args.s
    gamma_max = _ints(args.gamma_max, s, "--gamma-max")
    mu_box = _box(args.mu_box, s, "--mu-box") if args.mu_box else None
    gamma_box = _box(args.gamma_box, s, "--gamma-box") if args.gamma_box else None
    hunt = hunt_cor26(s, gamma_max, mu_box, gamma_box, jobs=args.jobs)
    logging.getLogger(__name__).info("tested %d pairs in %.2fs", hunt.tested, hunt.elapsed)
    text = formats.print_document(formats.Document("report", formats.hunt_payload(hunt)))
    _emit(text, args.out)
    return OK if not hunt.failures else FALSE


def cmd_render(args):
    doc = _load_object(args.file)
    E = doc.payload
    if E.s != 2:
        raise UsageError("render needs s = 2")
    window = _box(args.window, 2, "--window")
    _emit(render_staircase(E, window, args.format), args.out)
    return OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="goodsemi", description="Good semigroups and their ideals.")
    p.add_argument("-v", "--verbose", action="store_true", help="log progress to stderr")
    sub = p.add_subparsers(dest="command", required=True)

    q = sub.add_parser("validate", help="check the axioms of a semigroup or ideal file")
    q.add_argument("file")
    q.set_defaults(func=cmd_validate)

    q = sub.add_parser("info", help="summary of a semigroup or ideal")
    q.add_argument("file")
    q.set_defaults(func=cmd_info)

    q = sub.add_parser("canonical", help="print the canonical form of a document")
    q.add_argument("file")
    q.set_defaults(func=cmd_canonical)

    q = sub.add_parser("dual", help="the dual K0 - E")
    q.add_argument("semigroup")
    q.add_argument("ideal")
    q.add_argument("--out")
    q.set_defaults(func=cmd_dual)

    q = sub.add_parser("distance", help="dist(OUTER \\ INNER)")
    q.add_argument("semigroup")
    q.add_argument("outer")
    q.add_argument("inner")
    q.set_defaults(func=cmd_distance)

    q = sub.add_parser("poincare", help="Poincaré polynomial of S or of an ideal")
    q.add_argument("semigroup")
    q.add_argument("ideal", nargs="?")
    q.add_argument("--json", action="store_true")
    q.set_defaults(func=cmd_poincare)

    q = sub.add_parser("symmetry", help="symmetry conditions and the polynomial identity")
    q.add_argument("semigroup")
    q.add_argument("ideal")
    q.add_argument("--json", action="store_true")
    q.set_defaults(func=cmd_symmetry)

    q = sub.add_parser("search", help="census of the symmetry conditions over small instances")
    q.add_argument("--s", type=int, required=True)
    q.add_argument("--gamma-max", required=True, help="comma-separated bound on the conductor")
    q.add_argument("--mu-box", help="lo,hi bounds on the ideal minimum (2s integers)")
    q.add_argument("--gamma-box", help="lo,hi bounds on the ideal conductor (2s integers)")
    q.add_argument("--jobs", type=int, default=1)
    q.add_argument("--out")
    q.set_defaults(func=cmd_search)

    q = sub.add_parser("render", help="staircase picture of a planar semigroup or ideal")
    q.add_argument("file")
    q.add_argument("--window", required=True, help="x0,y0,x1,y1")
    q.add_argument("--format", choices=("ascii", "svg"), default="ascii")
    q.add_argument("--out")
    q.set_defaults(func=cmd_render)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return USAGE if exc.code else OK
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        return args.func(args)
    except (UsageError, formats.DocumentSyntaxError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE
    except formats.SemanticError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return INVALID
    except (BudgetExceeded, SearchBudgetExceeded) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return BUDGET


if __name__ == "__main__":
    sys.exit(main())
