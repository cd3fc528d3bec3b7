"""Rendering of report payloads.

Every command produces one JSON-serializable document; the text renderers
here are projections of that same document (they may aggregate or omit
detail, never invent it).
"""

from __future__ import annotations

import json
from collections import Counter, OrderedDict
from typing import Dict, List, Sequence


def _plain(value) -> object:
    if hasattr(value, "item"):  # numpy scalar
        return value.item()
    raise TypeError(f"not JSON-serializable: {value!r}")


def as_json(document: Dict[str, object]) -> str:
    return json.dumps(document, indent=2, default=_plain)


def _yesno(flag) -> str:
    return "yes" if flag else "no"


def _sign(s: int) -> str:
    return "+1" if s > 0 else "-1"


def witness_line(w: Dict[str, object]) -> str:
    tag = ", commuting" if w.get("commuting") else ""
    return f"({_sign(w['sign'])}) e={w['idempotent']} m={w['nilpotent']}{tag}"


# -- classify -----------------------------------------------------------------

_PROFILE_SECTIONS = (
    ("classes", ("nil_clean", "weakly_nil_clean", "strongly_nil_clean",
                 "strongly_weakly_nil_clean", "clean", "unc", "uwnc",
                 "uu", "wuu")),
    ("structure", ("local", "abelian", "reduced", "two_primal", "semipotent")),
)


def profile_text(doc: Dict[str, object]) -> str:
    lines = [f"ring {doc['spec']}  (order {doc['order']}, "
             f"characteristic {doc['characteristic']})"]
    for title, names in _PROFILE_SECTIONS:
        lines.append(f"  {title}:")
        for name in names:
            lines.append(f"    {name:<26s} {_yesno(doc[name])}")
    lines.append("  counts:")
    for name in ("unit_count", "idempotent_count", "nilpotent_count",
                 "jacobson_size"):
        lines.append(f"    {name:<26s} {doc[name]}")
    lines.append(f"    two_in_jacobson            {_yesno(doc['two_in_jacobson'])}")
    lines.append(f"    two_in_units               {_yesno(doc['two_in_units'])}")
    return "\n".join(lines)


# -- decompose ----------------------------------------------------------------


def element_text(doc: Dict[str, object]) -> str:
    lines = [f"element {doc['element']} = {doc['label']} in {doc['spec']}"]
    props = []
    for name in ("unit", "idempotent", "nilpotent", "unipotent", "central",
                 "clean", "nil_clean", "weakly_nil_clean",
                 "strongly_nil_clean", "strongly_weakly_nil_clean",
                 "uniquely_nil_clean"):
        props.append(f"{name}={_yesno(doc[name])}")
    lines.append("  " + " ".join(props[:5]))
    lines.append("  " + " ".join(props[5:]))
    if doc["unit"]:
        lines.append(f"  inverse: {doc['inverse']}")
    if doc["nilpotent"]:
        lines.append(f"  nilpotency index: {doc['nilpotency_index']}")
    nil_clean = [w for w in doc["witnesses"] if w["sign"] > 0]
    weak_only = [w for w in doc["witnesses"] if w["sign"] < 0]
    lines.append("  nil-clean witnesses: "
                 + ("; ".join(witness_line(w) for w in nil_clean)
                    if nil_clean else "none"))
    lines.append("  negative-sign weak witnesses: "
                 + ("; ".join(witness_line(w) for w in weak_only)
                    if weak_only else "none"))
    return "\n".join(lines)


# -- verify -------------------------------------------------------------------


def suite_text(doc: Dict[str, object]) -> str:
    counts = doc["counts"]
    lines = [f"suite over {doc['catalog_size']} catalog entries "
             f"(budget {doc['budget']}): "
             f"{counts['pass']} pass, {counts['fail']} fail, "
             f"{counts['skip']} skip  [{doc['runtime']:.1f}s]"]
    for err in doc["construction_errors"]:
        lines.append(f"  CONSTRUCTION ERROR {err['entry']}: {err['error']}")
    per_check: "OrderedDict[str, Counter]" = OrderedDict()
    for v in doc["verdicts"]:
        per_check.setdefault(v["check"], Counter())[v["outcome"]] += 1
    for check, tally in per_check.items():
        runtime = doc["check_runtimes"].get(check, 0.0)
        lines.append(f"  {check:<12s} pass={tally['pass']:<4d} "
                     f"fail={tally['fail']:<3d} skip={tally['skip']:<3d} "
                     f"[{runtime:.2f}s]")
    fails = [v for v in doc["verdicts"] if v["outcome"] == "fail"]
    for v in fails:
        lines.append(f"  FAIL {v['check']} on {v['subject']}: {v['detail']}")
        lines.append(f"       counterexample: {v.get('counterexample')}")
    skips = [v for v in doc["verdicts"] if v["outcome"] == "skip"]
    by_reason: "OrderedDict[tuple, List[str]]" = OrderedDict()
    for v in skips:
        by_reason.setdefault((v["check"], v["detail"]), []).append(v["subject"])
    for (check, reason), subjects in by_reason.items():
        shown = ", ".join(subjects[:3])
        more = f" (+{len(subjects) - 3} more)" if len(subjects) > 3 else ""
        lines.append(f"  skip {check}: {reason} -- {shown}{more}")
    lines.append(f"result: {'FAIL' if counts['fail'] else 'ok'} "
                 f"(exit {doc['exit_code']})")
    return "\n".join(lines)


# -- hunt ----------------------------------------------------------------------


def hunt_text(doc: Dict[str, object]) -> str:
    head = f"hunt {doc['target']}: {doc['statement']}"
    lines = [head]
    if "interpretation" in doc:
        lines.append(f"  interpretation: {doc['interpretation']}")
    lines.append(f"  scanned {doc['scanned']} rings, status "
                 f"{doc['status']}"
                 + (", PARTIAL (budget-gated members skipped)"
                    if doc["partial"] else "")
                 + f"  [{doc['runtime']:.1f}s]")
    if doc.get("note"):
        lines.append(f"  note: {doc['note']}")
    if doc["target"] == "PROB-5":
        for row in doc["rows"]:
            cands = ", ".join(f"{name}={_yesno(v)}"
                              for name, v in row["candidates"].items())
            lines.append(f"  {row['ring']:<24s} order {row['order']:<5d} "
                         f"UWNC={_yesno(row['matrix_uwnc'])}  [{cands}]")
    else:
        disagreeing = [r for r in doc["rows"] if not r["agree"]]
        lines.append(f"  rows in agreement: "
                     f"{doc['scanned'] - len(disagreeing)}/{doc['scanned']}")
        for row in disagreeing:
            detail = " ".join(f"{k}={_yesno(v)}" for k, v in row.items()
                              if isinstance(v, bool))
            lines.append(f"  disagree {row['ring']} (order {row['order']}): "
                         f"{detail}")
    for ce in doc["counterexamples"]:
        lines.append(f"  COUNTEREXAMPLE {ce['ring']}: {ce['description']}")
        if ce["elements"]:
            lines.append(f"    elements: {ce['elements']}")
        if ce["witness_data"]:
            lines.append(f"    data: {ce['witness_data']}")
    for sk in doc["skipped"]:
        lines.append(f"  skipped {sk['ring']}: {sk['reason']}")
    return "\n".join(lines)


# -- catalog list ---------------------------------------------------------------


def catalog_text(doc: Dict[str, object]) -> str:
    lines = [f"catalog: {len(doc['entries'])} entries, "
             f"budget {doc['budget']}"]
    for e in doc["entries"]:
        gate = "gated" if e["gated"] else "ok"
        name = e["name"] if e["name"] != e["spec"] else ""
        lines.append(f"  {gate:<6s} estimate {e['order_estimate']:<8d} "
                     f"{e['spec']}" + (f"  ({name})" if name else ""))
    return "\n".join(lines)


# -- dump-tables -----------------------------------------------------------------


def _table_text(name: str, table: Sequence[Sequence[int]]) -> List[str]:
    width = max(len(str(v)) for row in table for v in row)
    lines = [f"{name}:"]
    for row in table:
        lines.append("  " + " ".join(f"{v:>{width}d}" for v in row))
    return lines


def tables_text(doc: Dict[str, object]) -> str:
    lines = [f"ring {doc['spec']}  (order {doc['order']}, zero {doc['zero']}, "
             f"one {doc['one']})"]
    lines += _table_text("addition", doc["add"])
    lines += _table_text("multiplication", doc["mul"])
    if doc.get("element_labels"):
        lines.append("elements:")
        for i, label in enumerate(doc["element_labels"]):
            lines.append(f"  {i}: {label}")
    return "\n".join(lines)
