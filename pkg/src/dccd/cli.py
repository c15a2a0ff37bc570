"""Command-line interface.

Exit codes: 0 success, 1 semantic negative (invalid design, no expansion set,
no design within b_max, unsatisfiable construction), 2 usage or parse error,
3 search budget exhausted.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional

from . import __version__
from .catalog import catalog, catalog_names
from .constructions import adjoin_point, base_family, base_family_61, csccd_consecutive, develop, double_points
from .cost import CostParams, full_swap_cost, sequential_cost
from .design import BoundQuery, Design, classify, coverage, verify_m_change
from .errors import ParameterError, SearchBudgetExceeded, StructuralError
from .expansion import expand, find_expansion_set
from .factorization import circle_method, verify_factorization
from .io import DesignDocument, dumps, format_table, loads
from .search import exhaustive_min_blocks

EXIT_OK, EXIT_NEGATIVE, EXIT_USAGE, EXIT_BUDGET = 0, 1, 2, 3


class CommandFailed(Exception):
    def __init__(self, message: str, code: int = EXIT_NEGATIVE):
        super().__init__(message)
        self.code = code


def _read_document(path: str) -> DesignDocument:
    try:
        if path == "-":
            text = sys.stdin.read()
        else:
            with open(path, encoding="utf-8") as fh:
                text = fh.read()
    except OSError as exc:
        raise CommandFailed(f"cannot read {path}: {exc}", EXIT_USAGE) from None
    try:
        return loads(text)
    except (StructuralError, ParameterError) as exc:
        raise CommandFailed(f"cannot parse {path}: {exc}", EXIT_USAGE) from None


def _emit(doc: DesignDocument, fmt: str) -> None:
    d = doc.design
    # emit-or-fail: never write a design that fails its own check
    if not (verify_m_change(d, classify(d).change or 2) and coverage(d).covers_all):
        raise CommandFailed("refusing to emit a design that does not verify")
    if fmt == "table":
        header = doc.name or f"v={d.v} k={d.k} b={d.b}"
        sys.stdout.write(f"{header} ({'circular' if d.circular else 'linear'})\n\n{format_table(d)}")
    else:
        sys.stdout.write(dumps(doc))


def cmd_bounds(args) -> int:
    q = BoundQuery(args.v, args.k, args.t)
    print(q.circular() if args.circular else q.linear())
    return EXIT_OK


def cmd_verify(args) -> int:
    doc = _read_document(args.file)
    d = doc.design
    if not 1 <= args.m <= d.k:
        raise ParameterError(f"--m must be in 1..{d.k}")
    check = verify_m_change(d, args.m)
    ledger = coverage(d, args.strength)
    cls = classify(d, args.strength, ledger)
    report = {
        "name": doc.name,
        "v": d.v,
        "k": d.k,
        "b": d.b,
        "circular": d.circular,
        "m": args.m,
        "m_change": check.ok,
        "failing_gap": check.gap,
        "strength": args.strength,
        "covers_all": ledger.covers_all,
        "uncovered": len(ledger.uncovered),
        "multiplicity_histogram": {str(c): n for c, n in ledger.histogram().items()},
        "bound": cls.bound,
        "economical": cls.economical,
        "tight": cls.tight,
    }
    if args.json:
        print(json.dumps(report, indent=2))
    else:
        for key, value in report.items():
            print(f"{key}: {value}")
    return EXIT_OK if check.ok and ledger.covers_all else EXIT_NEGATIVE


def _construct(args) -> DesignDocument:
    what = args.what
    if what == "diff-family":
        fam = base_family(args.k, args.c)
        return DesignDocument(develop(fam), f"cdccd-{fam.v}-{fam.k}-{fam.c * fam.v}", f"develop(base_family(k={args.k}, c={args.c}))")
    if what == "diff-61":
        return DesignDocument(develop(base_family_61()), "cdccd-61-4-366", "develop(base_family_61())")
    if what == "csccd":
        d = csccd_consecutive(args.kprime)
        return DesignDocument(d, f"csccd-{d.v}-{d.k}-{d.b}", f"csccd_consecutive({args.kprime})")
    if what == "double":
        d = double_points(csccd_consecutive(args.kprime))
        return DesignDocument(d, f"cdccd-{d.v}-{d.k}-{d.b}", f"double_points(csccd_consecutive({args.kprime}))")
    if what == "adjoin":
        d = adjoin_point(double_points(csccd_consecutive(args.kprime)))
        return DesignDocument(d, f"cdccd-{d.v}-{d.k}-{d.b}", f"adjoin_point(double_points(csccd_consecutive({args.kprime})))")
    if what == "expand":
        src = _read_document(args.file)
        e = find_expansion_set(src.design)
        if e is None:
            raise CommandFailed("design has no expansion set")
        d = expand(src.design, e)
        prefix = "cdccd" if d.circular else "dccd"
        origin = src.name or args.file
        return DesignDocument(d, f"{prefix}-{d.v}-{d.k}-{d.b}", f"expand({origin}, circle_method({e.size + 1}))")
    if what == "catalog":
        entry = catalog(args.name)
        return DesignDocument(entry.design, entry.name, entry.provenance)
    raise CommandFailed(f"unknown construction {what}", EXIT_USAGE)


def cmd_construct(args) -> int:
    try:
        doc = _construct(args)
    except KeyError as exc:
        raise CommandFailed(str(exc.args[0]), EXIT_USAGE) from None
    _emit(doc, args.format)
    return EXIT_OK


def cmd_expansion_set(args) -> int:
    d = _read_document(args.file).design
    try:
        e = find_expansion_set(d)
    except StructuralError as exc:
        raise CommandFailed(str(exc)) from None
    if e is None:
        print("no expansion set")
        return EXIT_NEGATIVE
    payload = {"size": e.size, "odd": e.size % 2 == 1, "parts": [{"location": loc, "part": part} for loc, part in e.as_pairs()]}
    print(json.dumps(payload, indent=2))
    return EXIT_OK


def cmd_cost(args) -> int:
    d = _read_document(args.file).design
    p = CostParams(args.test_cost, args.change_cost, not args.no_initial_load)
    report = full_swap_cost(d.b, d.k, p) if args.full_swap else sequential_cost(d, p)
    for key, value in report.as_dict().items():
        print(f"{key}: {value}")
    return EXIT_OK


def cmd_search_min(args) -> int:
    try:
        found = exhaustive_min_blocks(args.v, args.k, args.circular, args.b_max, m=args.m, allow_large=args.force)
    except SearchBudgetExceeded as exc:
        raise CommandFailed(str(exc), EXIT_BUDGET) from None
    if found is None:
        print(f"no design with b <= {args.b_max}", file=sys.stderr)
        return EXIT_NEGATIVE
    d, b = found
    prefix = ("c" if args.circular else "") + ("sccd" if args.m == 1 else "dccd")
    _emit(DesignDocument(d, f"{prefix}-{d.v}-{d.k}-{b}", "exhaustive_min_blocks"), args.format)
    return EXIT_OK


def cmd_factorize(args) -> int:
    f = circle_method(args.n)
    check = verify_factorization(f)
    payload = {"n": f.n, "verified": check.ok, "factors": [[list(e) for e in factor] for factor in f.factors]}
    print(json.dumps(payload))
    return EXIT_OK if check.ok else EXIT_NEGATIVE


def cmd_catalog(args) -> int:
    for name in catalog_names():
        print(name)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="dccd", description="Double change covering designs")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("bounds", help="block-count lower bound")
    p.add_argument("--v", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--t", type=int, default=2)
    p.add_argument("--circular", action="store_true")
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("verify", help="classify a design document")
    p.add_argument("file", help="path, or - for stdin")
    p.add_argument("--m", type=int, default=2)
    p.add_argument("--strength", type=int, default=2)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("construct", help="build a design and print its document")
    p.add_argument("--format", choices=("json", "table"), default="json")
    csub = p.add_subparsers(dest="what", required=True)
    q = csub.add_parser("diff-family")
    q.add_argument("--k", type=int, required=True)
    q.add_argument("--c", type=int, required=True)
    csub.add_parser("diff-61")
    for name in ("csccd", "double", "adjoin"):
        q = csub.add_parser(name)
        q.add_argument("--kprime", type=int, required=True)
    q = csub.add_parser("expand")
    q.add_argument("file")
    q = csub.add_parser("catalog")
    q.add_argument("name")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("expansion-set", help="find an expansion set")
    p.add_argument("file")
    p.set_defaults(func=cmd_expansion_set)

    p = sub.add_parser("cost", help="testing cost of a design")
    p.add_argument("file")
    p.add_argument("--test-cost", type=int, required=True)
    p.add_argument("--change-cost", type=int, required=True)
    p.add_argument("--full-swap", action="store_true")
    p.add_argument("--no-initial-load", action="store_true")
    p.set_defaults(func=cmd_cost)

    p = sub.add_parser("search-min", help="exhaustive search for a minimum design")
    p.add_argument("--v", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--b-max", type=int, required=True)
    p.add_argument("--m", type=int, default=2)
    p.add_argument("--circular", action="store_true")
    p.add_argument("--force", action="store_true", help="lift the default size guard")
    p.add_argument("--format", choices=("json", "table"), default="json")
    p.set_defaults(func=cmd_search_min)

    p = sub.add_parser("factorize", help="circle-method 1-factorization of K_n")
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=cmd_factorize)

    p = sub.add_parser("catalog", help="list catalog names")
    p.set_defaults(func=cmd_catalog)
    return parser


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except CommandFailed as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.code
    except ParameterError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except StructuralError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NEGATIVE


if __name__ == "__main__":
    sys.exit(main())
