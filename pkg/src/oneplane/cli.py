"""Command-line interface.

Commands: validate, recover, light-edges, discharge, audit, gen, catalog.
Reports render as human-readable text (default) or canonical JSON; both
are byte-stable for identical inputs and flags.

Exit codes:
  0   success; for light-edges, a guaranteed witness was found
  1   invalid input drawing (validation violations, malformed rotation,
      non-sphere embedding) or unsatisfiable generator parameters
  2   guarantee hypothesis unmet (minimum degree too small)
  3   counterexample candidate or failed audit; on valid input this
      indicates a bug and should be reported
  64  usage error
  65  unreadable or unparseable input (diagnostic names the byte offset)
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import graphio
from .audit import audit as run_audit
from .discharging import apply_discharging, element_label, initial_charges, ledger_lines
from .embedding import Disconnected, MalformedRotation, NotPlane
from .generators import GenerationFailed, GeneratorParams, catalog, catalog_names, random_oneplane
from .lightedge import (
    DEFAULT_PROFILE,
    HYPOTHESIS_UNMET,
    PROFILES,
    WITNESS_FOUND,
    check_light_edge_guarantee,
    find_light_edges,
)
from .oneplanar import AssociatedPlaneGraph, drawing_diagnostics, recover_original, validate

EX_OK = 0
EX_INVALID = 1
EX_HYPOTHESIS = 2
EX_CANDIDATE = 3
EX_USAGE = 64
EX_DATA = 65


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # noqa: A003 - argparse API
        raise _UsageError(message)


def _build_parser() -> _Parser:
    parser = _Parser(prog="oneplane", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("input", help="graph JSON file")
        p.add_argument("--format", choices=("text", "json"), default="text")

    p = sub.add_parser("validate", help="check the crossing structure")
    common(p)

    p = sub.add_parser("recover", help="recover the original graph")
    common(p)

    p = sub.add_parser("light-edges", help="list light edges and the guarantee verdict")
    common(p)
    p.add_argument("--profile", choices=sorted(PROFILES), default=DEFAULT_PROFILE)

    p = sub.add_parser("discharge", help="run the discharging rules")
    common(p)
    p.add_argument("--ledger", metavar="PATH", help="write the transfer ledger here")

    p = sub.add_parser("audit", help="discharge and audit the ledger")
    common(p)

    p = sub.add_parser("gen", help="generate a seeded random drawing")
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--size", type=int, required=True)
    p.add_argument("--density", type=float, default=0.5)
    p.add_argument("--out", metavar="PATH", help="write here instead of stdout")

    p = sub.add_parser("catalog", help="emit a fixed catalog drawing")
    p.add_argument("name", choices=catalog_names())
    p.add_argument("--out", metavar="PATH", help="write here instead of stdout")

    return parser


def _load(path: str) -> AssociatedPlaneGraph:
    return graphio.load(path)


def _emit(report: dict, fmt: str) -> None:
    if fmt == "json":
        print(json.dumps(report, indent=2, sort_keys=True))
        return
    for line in _text_lines(report):
        print(line)


def _text_lines(report: dict, prefix: str = "") -> list[str]:
    lines = []
    for key, value in report.items():
        if isinstance(value, dict):
            lines.append(f"{prefix}{key}:")
            lines.extend(_text_lines(value, prefix + "  "))
        elif isinstance(value, list) and all(not isinstance(x, (dict, list)) for x in value):
            if all(isinstance(x, (int, float)) for x in value):
                lines.append(f"{prefix}{key}: {value}")
            else:
                lines.append(f"{prefix}{key} ({len(value)}):")
                lines.extend(f"{prefix}  {item}" for item in value)
        elif isinstance(value, list):
            lines.append(f"{prefix}{key} ({len(value)}):")
            for item in value:
                if isinstance(item, dict):
                    body = _text_lines(item, prefix + "    ")
                    lines.append(f"{prefix}  - {body[0].strip()}")
                    lines.extend(body[1:])
                else:
                    lines.append(f"{prefix}  {item}")
        else:
            lines.append(f"{prefix}{key}: {value}")
    return lines


def _validation_report(g: AssociatedPlaneGraph, path: str) -> tuple[dict, bool]:
    rep = validate(g)
    diag = drawing_diagnostics(g)
    doc = {
        "command": "validate",
        "input": path,
        "valid": rep.ok,
        "violations": [str(v) for v in rep.violations],
        "diagnostics": [str(f) for f in diag.flags],
    }
    return doc, rep.ok


def _cmd_validate(args) -> int:
    g = _load(args.input)
    doc, ok = _validation_report(g, args.input)
    _emit(doc, args.format)
    return EX_OK if ok else EX_INVALID


def _cmd_recover(args) -> int:
    g = _load(args.input)
    doc, ok = _validation_report(g, args.input)
    if not ok:
        doc["command"] = "recover"
        _emit(doc, args.format)
        return EX_INVALID
    view = recover_original(g)
    doc = {
        "command": "recover",
        "input": args.input,
        "vertices": len(view.vertices),
        "edges": [list(e) for e in view.edges],
        "degrees": {str(v): view.degree(v) for v in view.vertices},
        "min_degree": view.min_degree(),
    }
    _emit(doc, args.format)
    return EX_OK


def _witness_dict(w) -> dict:
    return {
        "edge": list(w.edge),
        "degrees": list(w.degrees),
        "type": w.light_type.tag,
    }


def _cmd_light_edges(args) -> int:
    g = _load(args.input)
    doc, ok = _validation_report(g, args.input)
    if not ok:
        doc["command"] = "light-edges"
        _emit(doc, args.format)
        return EX_INVALID
    verdict = check_light_edge_guarantee(g, args.profile)
    witnesses = find_light_edges(recover_original(g), args.profile)
    doc = {
        "command": "light-edges",
        "input": args.input,
        "profile": args.profile,
        "status": verdict.status,
        "min_degree": verdict.min_degree,
        "witness": _witness_dict(verdict.witness) if verdict.witness else None,
        "light_edges": [_witness_dict(w) for w in witnesses],
    }
    _emit(doc, args.format)
    if verdict.status == WITNESS_FOUND:
        return EX_OK
    if verdict.status == HYPOTHESIS_UNMET:
        return EX_HYPOTHESIS
    return EX_CANDIDATE


def _cmd_discharge(args) -> int:
    g = _load(args.input)
    doc, ok = _validation_report(g, args.input)
    if not ok:
        doc["command"] = "discharge"
        _emit(doc, args.format)
        return EX_INVALID
    init = initial_charges(g)
    final, transfers = apply_discharging(g)
    rule_counts: dict[str, int] = {}
    for t in transfers:
        rule_counts[t.rule] = rule_counts.get(t.rule, 0) + 1
    doc = {
        "command": "discharge",
        "input": args.input,
        "initial_total": str(init.total()),
        "final_total": str(final.total()),
        "conserved": final.total() == init.total(),
        "transfers": len(transfers),
        "rule_counts": dict(sorted(rule_counts.items())),
    }
    if args.ledger:
        Path(args.ledger).write_text("\n".join(ledger_lines(transfers)) + "\n", encoding="utf-8")
        doc["ledger"] = args.ledger
    _emit(doc, args.format)
    return EX_OK


def _cmd_audit(args) -> int:
    g = _load(args.input)
    doc, ok = _validation_report(g, args.input)
    if not ok:
        doc["command"] = "audit"
        _emit(doc, args.format)
        return EX_INVALID
    final, transfers = apply_discharging(g)
    report = run_audit(g, final, transfers)
    doc = {
        "command": "audit",
        "input": args.input,
        "initial_total": str(report.initial_total),
        "final_total": str(report.final_total),
        "conserved": report.conserved,
        "passed": report.passed,
        "checks": [
            {
                "name": c.name,
                "passed": c.passed,
                "instances": c.instances,
                "failures": list(c.failures),
            }
            for c in report.checks
        ],
        "negative_elements": [
            f"{element_label(el)} = {charge}" for el, charge in report.negative_elements
        ],
    }
    _emit(doc, args.format)
    return EX_OK if report.passed else EX_CANDIDATE


def _cmd_gen(args) -> int:
    try:
        g = random_oneplane(GeneratorParams(args.seed, args.size, args.density))
    except (GenerationFailed, ValueError) as err:
        print(f"generation failed: {err}", file=sys.stderr)
        return EX_INVALID
    text = graphio.dumps(g)
    if args.out:
        Path(args.out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)
    return EX_OK


def _cmd_catalog(args) -> int:
    text = graphio.dumps(catalog(args.name))
    if args.out:
        Path(args.out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)
    return EX_OK


_DISPATCH = {
    "validate": _cmd_validate,
    "recover": _cmd_recover,
    "light-edges": _cmd_light_edges,
    "discharge": _cmd_discharge,
    "audit": _cmd_audit,
    "gen": _cmd_gen,
    "catalog": _cmd_catalog,
}


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except _UsageError as err:
        print(f"usage error: {err}", file=sys.stderr)
        return EX_USAGE
    except SystemExit as err:  # --help
        return int(err.code or 0)

    try:
        return _DISPATCH[args.command](args)
    except graphio.GraphFormatError as err:
        print(f"input error at byte {err.byte_offset}: {err}", file=sys.stderr)
        return EX_DATA
    except OSError as err:
        print(f"input error at byte 0: {err}", file=sys.stderr)
        return EX_DATA
    except (MalformedRotation, Disconnected, NotPlane) as err:
        print(f"invalid drawing: {type(err).__name__}: {err}", file=sys.stderr)
        return EX_INVALID


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
