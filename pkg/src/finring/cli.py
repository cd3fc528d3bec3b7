"""Command-line front end.

Subcommands: classify, decompose, verify, hunt, catalog, dump-tables.
Output is one document per invocation, rendered as text (default) or JSON;
exit codes: 0 ok, 1 suite fail or counterexample found, 2 parse or
construction error.
"""

from __future__ import annotations

import argparse
import sys
from typing import Dict, List, Optional

from . import checks, classify, hunt as hunt_mod, report, specs
from .catalog import DEFAULT_BUDGET, Catalog, default_catalog, \
    parse_catalog_file
from .errors import FinRingError


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="finring",
        description="Finite-ring engine: construction, classification, "
                    "claim verification and counterexample hunting.")
    parser.add_argument("--format", choices=("text", "json"), default="text",
                        help="output rendering (default: text)")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", help="ring-level class flags for a spec")
    p.add_argument("spec", help="ring construction expression, e.g. T2(Z4)")

    p = sub.add_parser("decompose",
                       help="element profile plus decomposition witnesses")
    p.add_argument("spec", help="ring construction expression")
    p.add_argument("element",
                   help="element id or matrix literal, e.g. 5 or [[0,1],[1,1]]")

    p = sub.add_parser("verify", help="run the claim-check suite")
    p.add_argument("--check", default=None, help="run a single check id")
    p.add_argument("--catalog", default=None,
                   help="catalog file (one spec per line, # comments, "
                        "optional 'name: spec' and '@budget N' lines)")
    p.add_argument("--budget", type=int, default=None,
                   help=f"order budget (default {DEFAULT_BUDGET})")

    p = sub.add_parser("hunt", help="scan ring families for counterexamples")
    p.add_argument("--target", required=True, choices=hunt_mod.TARGET_IDS)
    p.add_argument("--max-zn", type=int, default=100,
                   help="scan Z_n for n up to this bound (default 100)")
    p.add_argument("--interpretation", default="element-level",
                   choices=("element-level", "ring-level"),
                   help="reading of unique weak decomposability (CONJ-1)")
    p.add_argument("--no-derived", action="store_true",
                   help="skip derived triangular/K_s families")
    p.add_argument("--catalog", default=None)
    p.add_argument("--budget", type=int, default=None)

    p = sub.add_parser("catalog", help="catalog inspection")
    p.add_argument("action", choices=("list",))
    p.add_argument("--catalog", default=None)
    p.add_argument("--budget", type=int, default=None)

    p = sub.add_parser("dump-tables",
                       help="addition and multiplication tables of a spec")
    p.add_argument("spec")

    # accept --format after the subcommand as well; the trailing one wins
    for sp in sub.choices.values():
        sp.add_argument("--format", dest="format_sub",
                        choices=("text", "json"), default=None,
                        help=argparse.SUPPRESS)
    return parser


def _load_catalog(path: Optional[str], budget: Optional[int]) -> Catalog:
    if path is not None:
        # an explicit --budget wins over the file's @budget directive
        return parse_catalog_file(path, budget)
    return default_catalog(budget or DEFAULT_BUDGET)


def _cmd_classify(args) -> Dict[str, object]:
    ring = specs.build_spec(args.spec)
    profile = classify.classify_ring(ring)
    return {"command": "classify", "spec": ring.spec, **profile.snapshot()}


def _cmd_decompose(args) -> Dict[str, object]:
    ring = specs.build_spec(args.spec)
    elt = specs.resolve_element(ring, specs.parse_element_text(args.element))
    profile = classify.classify_element(ring, elt)
    return {"command": "decompose", "spec": ring.spec, **profile.snapshot()}


def _cmd_verify(args) -> Dict[str, object]:
    catalog = _load_catalog(args.catalog, args.budget)
    catalog.build()
    ctx = checks.SuiteContext(catalog)
    ids = [args.check] if args.check else None
    suite = checks.run_suite(ctx, ids)
    return {"command": "verify", **suite.snapshot()}


def _cmd_hunt(args) -> Dict[str, object]:
    catalog = _load_catalog(args.catalog, args.budget)
    catalog.build()
    rep = hunt_mod.hunt(args.target, catalog, max_zn=args.max_zn,
                        interpretation=args.interpretation,
                        include_derived=not args.no_derived)
    return {"command": "hunt", **rep.snapshot()}


def _cmd_catalog(args) -> Dict[str, object]:
    catalog = _load_catalog(args.catalog, args.budget)
    entries: List[Dict[str, object]] = []
    for e in catalog.entries:
        entries.append({"name": e.name, "spec": e.text,
                        "order_estimate": e.order_estimate,
                        "gated": e.order_estimate > catalog.budget})
    return {"command": "catalog", "budget": catalog.budget,
            "entries": entries}


def _cmd_dump_tables(args) -> Dict[str, object]:
    ring = specs.build_spec(args.spec)
    return {"command": "dump-tables", "spec": ring.spec,
            "order": ring.order, "zero": ring.zero, "one": ring.one,
            "add": ring.add.tolist(), "mul": ring.mul.tolist(),
            "element_labels": [ring.element_label(i)
                               for i in range(ring.order)]}


_RENDERERS = {
    "classify": report.profile_text,
    "decompose": report.element_text,
    "verify": report.suite_text,
    "hunt": report.hunt_text,
    "catalog": report.catalog_text,
    "dump-tables": report.tables_text,
}

_HANDLERS = {
    "classify": _cmd_classify,
    "decompose": _cmd_decompose,
    "verify": _cmd_verify,
    "hunt": _cmd_hunt,
    "catalog": _cmd_catalog,
    "dump-tables": _cmd_dump_tables,
}


def entry(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    fmt = getattr(args, "format_sub", None) or args.format
    try:
        doc = _HANDLERS[args.command](args)
    except FinRingError as exc:
        if fmt == "json":
            print(report.as_json({"command": args.command, "error": str(exc)}))
        else:
            print(f"error: {exc}", file=sys.stderr)
        return 2
    if fmt == "json":
        print(report.as_json(doc))
    else:
        print(_RENDERERS[args.command](doc))
    return int(doc.get("exit_code", 0))


def main() -> None:
    raise SystemExit(entry())


if __name__ == "__main__":
    main()
