"""Command-line front end.

Exit codes: 0 ok, 1 parse error, 2 domain error, 3 size limit,
4 conjecture mismatch, 5 unsolvable equation.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Any, Dict, List, Optional

from . import algebra, equations, spaces
from .core import EMPTY, SigmaSet, anti_set, star_intersection
from .errors import DomainError, ParseError, SizeLimitError
from .textio import eval_trace, format_set, parse_expr, parse_set

EXIT_OK = 0
EXIT_PARSE = 1
EXIT_DOMAIN = 2
EXIT_SIZE = 3
EXIT_MISMATCH = 4
EXIT_UNSOLVABLE = 5

MAX_TABLE_SET = 5
MAX_LOOP_N = 8


class CommandResult:
    def __init__(self, result, lines, diagnostics=None, code=EXIT_OK):
        self.result = result
        self.lines = lines
        self.diagnostics = diagnostics or []
        self.code = code


def _yes(flag: bool) -> str:
    return "yes" if flag else "no"


# eval ------------------------------------------------------------------------


def cmd_eval(args) -> CommandResult:
    value, steps = eval_trace(parse_expr(args.expr))
    result: Dict[str, Any] = {"value": format_set(value)}
    lines = [format_set(value)]
    if args.show_annihilation:
        result["fusions"] = [
            {"expr": s.expr, "result": format_set(s.result), "annihilation": s.annihilation_count}
            for s in steps
        ]
        lines += [f"annihilation {s.expr} = {s.annihilation_count}" for s in steps]
    return CommandResult(result, lines)


# table -----------------------------------------------------------------------


def _cell_text(table, r, c) -> str:
    deco = table.empty_cell_decorations.get((r, c))
    if deco is not None:
        return f"{{}}^{deco[0]}_{deco[1]}"
    return format_set(table.cells[r][c].result)


def render_table(table) -> List[str]:
    grid = [["+"] + [format_set(s) for s in table.column_labels]]
    for r, label in enumerate(table.row_labels):
        grid.append(
            [format_set(label)] + [_cell_text(table, r, c) for c in range(len(table.column_labels))]
        )
    widths = [max(len(row[i]) for row in grid) for i in range(len(grid[0]))]
    return [" | ".join(cell.ljust(w) for cell, w in zip(row, widths)).rstrip() for row in grid]


def cmd_table(args) -> CommandResult:
    base = parse_set(args.set)
    inv = anti_set(base)
    if inv is None:
        raise DomainError(f"{format_set(base)} is not entire: it has no antiset")
    if len(base) > MAX_TABLE_SET:
        raise SizeLimitError(f"table is limited to sets of {MAX_TABLE_SET} atoms")
    # axes ordered by size then atoms, as in the published tables
    rows = sorted(spaces.power_set(inv), key=SigmaSet.sort_key)
    cols = sorted(spaces.power_set(base), key=SigmaSet.sort_key)
    table = algebra.fusion_table(rows, cols)
    result = {
        "rows": [format_set(s) for s in table.row_labels],
        "cols": [format_set(s) for s in table.column_labels],
        "cells": [
            [{"result": format_set(o.result), "annihilation": o.annihilation_count} for o in line]
            for line in table.cells
        ],
    }
    return CommandResult(result, render_table(table))


# space -----------------------------------------------------------------------


def cmd_space(args) -> CommandResult:
    base = parse_set(args.set)
    if args.zero_part is None:
        space = spaces.integer_space(base)
        base_json = {"set": format_set(base), "zero_part": None}
    else:
        zero = parse_set(args.zero_part)
        space = spaces.meta_space(zero, base)
        base_json = {"set": format_set(base), "zero_part": format_set(zero)}
    members = [format_set(s) for s in space.members]
    result = {"base": base_json, "cardinality": space.cardinality}
    if args.cardinality_only:
        return CommandResult(result, [str(space.cardinality)])
    result["members"] = members
    return CommandResult(result, [f"cardinality: {space.cardinality}"] + members)


# conjecture ------------------------------------------------------------------


def _params_text(params) -> str:
    return " ".join(f"{k}={v}" for k, v in params.items())


def _cardinality_cases(report) -> CommandResult:
    cases = [
        {"params": r.params, "observed": r.observed, "predicted": r.predicted, "match": r.match}
        for r in report.rows
    ]
    lines = [
        f"{_params_text(r.params)} observed={r.observed} predicted={r.predicted} "
        f"{'ok' if r.match else 'MISMATCH'}"
        for r in report.rows
    ]
    n_ok = sum(r.match for r in report.rows)
    lines.append(f"all match: {_yes(report.all_match)} ({n_ok}/{len(report.rows)})")
    code = EXIT_OK if report.all_match else EXIT_MISMATCH
    return CommandResult({"cases": cases, "all_match": report.all_match}, lines, code=code)


def _triple_text(t) -> str:
    return "(" + ", ".join(format_set(s) for s in t) + ")"


def _loop_cases(max_n: int, witnesses: int) -> CommandResult:
    if max_n > MAX_LOOP_N:
        raise SizeLimitError(f"loop check is limited to n <= {MAX_LOOP_N}")
    cases = []
    lines = []
    predicted = {"closure": True, "unique_identity": True, "unique_inverses": True,
                 "commutative": True}
    for n in range(max_n + 1):
        report = algebra.verify_loop_axioms(
            spaces.integer_space(spaces.naturals(n)), witness_limit=witnesses
        )
        inverse_is_antiset = report.inverses is not None and all(
            inv == anti_set(x) for x, inv in report.inverses.items()
        )
        observed = {
            "closure": report.closure_holds,
            "unique_identity": report.identity == EMPTY and report.identity_unique,
            "unique_inverses": report.inverses_unique and inverse_is_antiset,
            "commutative": report.commutative,
            "associative": report.associative,
            "associativity_sampled": report.sampled,
            "triples_checked": report.triples_checked,
            "witnesses": [[format_set(s) for s in t] for t in report.nonassociative_witnesses],
        }
        match = all(observed[k] == v for k, v in predicted.items())
        cases.append({"params": {"n": n}, "observed": observed, "predicted": predicted,
                      "match": match})
        line = (
            f"n={n} size={report.cardinality} closure={_yes(report.closure_holds)} "
            f"identity={_yes(observed['unique_identity'])} "
            f"inverses={_yes(observed['unique_inverses'])} "
            f"commutative={_yes(report.commutative)} "
            f"associative={_yes(report.associative)}"
        )
        if report.sampled:
            line += f" (sampled {report.triples_checked} triples)"
        if report.nonassociative_witnesses:
            line += " witness=" + _triple_text(report.nonassociative_witnesses[0])
        lines.append(line + (" ok" if match else " MISMATCH"))
    all_match = all(c["match"] for c in cases)
    lines.append(f"all match: {_yes(all_match)} ({sum(c['match'] for c in cases)}/{len(cases)})")
    code = EXIT_OK if all_match else EXIT_MISMATCH
    return CommandResult({"cases": cases, "all_match": all_match}, lines, code=code)


def cmd_conjecture(args) -> CommandResult:
    if args.which == "cardinality":
        return _cardinality_cases(spaces.check_cardinality_conjecture(args.max_n))
    if args.which == "meta":
        return _cardinality_cases(
            spaces.check_meta_conjecture(args.max_a, args.max_b, args.max_total)
        )
    return _loop_cases(args.max_n, args.witnesses)


# solve -----------------------------------------------------------------------


def cmd_solve(args) -> CommandResult:
    eq = equations.Equation(parse_set(args.universe), parse_set(args.m), parse_set(args.n))
    fusionable = equations.is_fusionable(eq.m, eq.n)
    diagnostics = []
    lines = []
    closed = None
    solutions = None
    exhaustive = args.exhaustive or not fusionable
    if exhaustive and len(eq.universe) > equations.MAX_EXHAUSTIVE_UNIVERSE:
        if args.exhaustive:
            raise SizeLimitError(
                f"exhaustive search is limited to universes of "
                f"{equations.MAX_EXHAUSTIVE_UNIVERSE} atoms"
            )
        exhaustive = False
        diagnostics.append("universe too large for an exhaustive check")

    if fusionable:
        lines.append("fusionable: yes")
        closed = equations.solve_closed_form(eq)
        if closed is None:
            diagnostics.append("closed-form candidates failed verification")
        else:
            lines += [f"S1: {format_set(closed[0])}", f"S2: {format_set(closed[1])}"]
    else:
        inter = star_intersection(eq.m, eq.n)
        lines.append(f"fusionable: no (M ^ N = {format_set(inter)})")
        diagnostics.append("not fusionable")

    if exhaustive:
        solutions = list(equations.solve_exhaustive(eq).solutions)
    elif closed is not None:
        solutions = sorted(set(closed), key=lambda s: s.sort_key())
    else:
        solutions = []

    if args.exhaustive:
        lines += [f"solution: {format_set(s)}" for s in solutions]
    if not solutions:
        lines.append("no solution")
    elif not fusionable:
        diagnostics.append("finding: a non-fusionable equation has solutions")

    code = EXIT_UNSOLVABLE if not fusionable and not solutions else EXIT_OK
    result = {
        "fusionable": fusionable,
        "closed_form": None if closed is None else {
            "s1": format_set(closed[0]), "s2": format_set(closed[1])},
        "solutions": [format_set(s) for s in solutions],
    }
    return CommandResult(result, lines, diagnostics, code)


# driver ----------------------------------------------------------------------


COMMANDS = {
    "eval": cmd_eval,
    "table": cmd_table,
    "space": cmd_space,
    "conjecture": cmd_conjecture,
    "solve": cmd_solve,
}


def build_parser() -> argparse.ArgumentParser:
    fmt = argparse.ArgumentParser(add_help=False)
    fmt.add_argument("--format", choices=["text", "json"], default=argparse.SUPPRESS)

    parser = argparse.ArgumentParser(
        prog="sigmaset", description="Sigma-set algebra with antielements."
    )
    parser.add_argument("--format", choices=["text", "json"], default="text")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("eval", parents=[fmt], help="evaluate a sigma-set expression")
    p.add_argument("expr")
    p.add_argument("--show-annihilation", action="store_true")

    p = sub.add_parser("table", parents=[fmt], help="fusion table of 2^(A-) x 2^A")
    p.add_argument("--set", required=True)

    p = sub.add_parser("space", parents=[fmt], help="enumerate an integer space or meta-space")
    p.add_argument("--set", required=True)
    p.add_argument("--zero-part")
    p.add_argument("--cardinality-only", action="store_true")

    p = sub.add_parser("conjecture", parents=[fmt], help="check a conjecture at desk scale")
    p.add_argument("which", choices=["cardinality", "meta", "loop"])
    p.add_argument("--max-n", type=int, default=5)
    p.add_argument("--max-a", type=int, default=2)
    p.add_argument("--max-b", type=int, default=2)
    p.add_argument("--max-total", type=int)
    p.add_argument("--witnesses", type=int, default=1)

    p = sub.add_parser("solve", parents=[fmt], help="solve X + M = N over 3^universe")
    p.add_argument("--universe", required=True)
    p.add_argument("--m", required=True)
    p.add_argument("--n", required=True)
    p.add_argument("--exhaustive", action="store_true")
    return parser


def _inputs(args) -> Dict[str, Any]:
    return {k: v for k, v in vars(args).items() if k not in ("command", "format")}


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    out = None
    error = None
    try:
        out = COMMANDS[args.command](args)
        code = out.code
    except ParseError as exc:
        code, error = EXIT_PARSE, f"parse error: {exc}"
    except DomainError as exc:
        code, error = EXIT_DOMAIN, f"domain error: {exc}"
    except SizeLimitError as exc:
        code, error = EXIT_SIZE, f"size limit: {exc}"

    if args.format == "json":
        doc = {
            "command": args.command,
            "inputs": _inputs(args),
            "result": out.result if out else None,
            "diagnostics": (out.diagnostics if out else []) + ([error] if error else []),
        }
        print(json.dumps(doc, indent=2, ensure_ascii=True))
    else:
        if out:
            for line in out.lines:
                print(line)
            for d in out.diagnostics:
                print(f"note: {d}", file=sys.stderr)
        if error:
            print(error, file=sys.stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())
