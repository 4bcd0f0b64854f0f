"""Command-line front end.

Wires spec parsing, state analysis, grammar compilation, rendering and
realization checks into file-to-file workflows. Exit status 0 means
success, 1 a semantic validation failure, 2 a usage, parse, or I/O
failure.
"""

from __future__ import annotations

import argparse
import math
import os
import re
import sys
from pathlib import Path

from .errors import (
    EmptyStateSetError,
    LogicFileError,
    NotSeparatingError,
    ValidationError,
)
from .grammar import (
    check_incidence,
    compile_grammar,
    derive,
    production_text,
    productions_json,
)
from .logic import (
    LogicFile,
    PartitionLogic,
    StateSet,
    is_separating,
    parse_logic_file,
    partition_representation,
    resolve_states,
)
from .orthorep import (
    VectorRealization,
    build_v_realization,
    load_vector_file,
    verify_faithful,
)
from .render import (
    Backend,
    RenderSpec,
    default_palette,
    emit_events,
    emit_logic_program,
    render_schema,
    render_text,
    render_tiles,
)

_PALETTE_FLAG_RE = re.compile(r"(?P<label>[A-Za-z_]\w*)=(?P<color>#[0-9A-Fa-f]{6})\Z")

_WORST_LABELS = {
    "context orthonormality": "max deviation",
    "basis completeness": "max size gap",
    "faithfulness": "min |dot|",
}


def _palette_override(text: str) -> tuple[str, str]:
    match = _PALETTE_FLAG_RE.match(text)
    if match is None:
        raise argparse.ArgumentTypeError(
            f"expected LABEL=#RRGGBB, got {text!r}"
        )
    return match.group("label"), match.group("color")


def _add_style_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--cell-size", type=int, default=20, metavar="PX",
        help="square edge length in pixels (default 20)",
    )
    parser.add_argument(
        "--cell-gap", type=int, default=2, metavar="PX",
        help="gap between squares in pixels (default 2)",
    )
    parser.add_argument(
        "--palette", action="append", type=_palette_override, default=None,
        metavar="LABEL=#RRGGBB", help="override one palette entry (repeatable)",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sglg",
        description="Compile finite partition logics into generative grammars "
        "and render the derived artifacts.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("states", help="print the two-valued state table")
    p.add_argument("spec", help="logic file (JSON)")

    p = sub.add_parser("grammar", help="print the compiled grammar")
    p.add_argument("spec", help="logic file (JSON)")
    p.add_argument("--format", choices=("text", "json"), default="text")

    p = sub.add_parser("render", help="render the derived artifact")
    p.add_argument("spec", help="logic file (JSON)")
    p.add_argument(
        "--format", required=True,
        choices=("svg-tiles", "ansi", "html", "logic-program", "events"),
    )
    p.add_argument("-o", "--output", metavar="FILE")
    _add_style_flags(p)

    p = sub.add_parser("schema", help="write the incidence schema (SVG)")
    p.add_argument("spec", help="logic file (JSON)")
    p.add_argument("-o", "--output", metavar="FILE")
    _add_style_flags(p)

    p = sub.add_parser(
        "verify-orthorep", help="verify a faithful orthogonal representation"
    )
    p.add_argument("spec", help="logic file (JSON)")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--vectors", metavar="FILE", help="vector file (JSON)")
    group.add_argument(
        "--theta", type=float, metavar="REAL",
        help="use the built-in two-basis realization at this angle",
    )
    p.add_argument("--tol", type=float, metavar="REAL", help="numerical tolerance")

    p = sub.add_parser("check", help="run every analysis; nonzero exit on failure")
    p.add_argument("spec", help="logic file (JSON)")
    return parser


def _validate_usage(args: argparse.Namespace, parser: argparse.ArgumentParser) -> None:
    if args.command == "render" and args.format == "svg-tiles" and not args.output:
        parser.error("--format svg-tiles writes an SVG document: -o FILE is required")
    if args.command == "schema" and not args.output:
        parser.error("schema writes an SVG document: -o FILE is required")
    if getattr(args, "cell_size", 1) <= 0:
        parser.error("--cell-size must be a positive integer")
    if getattr(args, "cell_gap", 0) < 0:
        parser.error("--cell-gap must be a non-negative integer")
    if getattr(args, "tol", None) is not None and args.tol <= 0:
        parser.error("--tol must be positive")


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        _validate_usage(args, parser)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        return _dispatch(args)
    except LogicFileError as exc:
        print(f"sglg: error: {exc}", file=sys.stderr)
        return 2
    except ValidationError as exc:
        print(f"sglg: error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"sglg: error: {exc}", file=sys.stderr)
        return 2


def _dispatch(args: argparse.Namespace) -> int:
    handler = {
        "states": _cmd_states,
        "grammar": _cmd_grammar,
        "render": _cmd_render,
        "schema": _cmd_schema,
        "verify-orthorep": _cmd_verify,
        "check": _cmd_check,
    }[args.command]
    return handler(args)


def _read_logic_file(path: str) -> LogicFile:
    return parse_logic_file(Path(path).read_text(encoding="utf-8"))


def _emit(text: str, output: str | None) -> None:
    if output:
        Path(output).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def _build_palette(logic_file: LogicFile, states: StateSet, args) -> dict[str, str]:
    palette = default_palette(states.labels())
    if logic_file.palette:
        palette.update(logic_file.palette)
    if args.palette:
        palette.update(dict(args.palette))
    return palette


def format_state_table(logic: PartitionLogic, states: StateSet) -> str:
    """The Table-I layout: one column per atom, one labeled row per state."""
    label_width = max((len(s.label) for s in states), default=0)
    lines = [
        " " * label_width + "".join(f"  {atom}" for atom in logic.atoms)
    ]
    for state in states:
        cells = "".join(
            f"  {value:>{len(atom)}}"
            for atom, value in zip(logic.atoms, state.values)
        )
        lines.append(f"{state.label:<{label_width}}" + cells)
    return "\n".join(lines) + "\n"


def _cmd_states(args) -> int:
    logic, states = resolve_states(_read_logic_file(args.spec))
    sys.stdout.write(format_state_table(logic, states))
    return 0


def _cmd_grammar(args) -> int:
    logic, states = resolve_states(_read_logic_file(args.spec))
    grammar = compile_grammar(logic, states)
    if args.format == "json":
        sys.stdout.write(productions_json(grammar))
    else:
        sys.stdout.write(production_text(grammar))
    return 0


def _cmd_render(args) -> int:
    logic_file = _read_logic_file(args.spec)
    logic, states = resolve_states(logic_file)
    grammar = compile_grammar(logic, states)
    derivation = derive(grammar)
    palette = _build_palette(logic_file, states, args)

    def spec(backend: Backend) -> RenderSpec:
        return RenderSpec(
            palette=palette,
            cell_size=args.cell_size,
            cell_gap=args.cell_gap,
            backend=backend,
        )

    if args.format == "svg-tiles":
        _emit(render_tiles(derivation, spec(Backend.SVG_TILES)), args.output)
    elif args.format == "ansi":
        color = "NO_COLOR" not in os.environ
        _emit(render_text(derivation, spec(Backend.ANSI), color=color), args.output)
    elif args.format == "html":
        _emit(render_text(derivation, spec(Backend.HTML)), args.output)
    elif args.format == "logic-program":
        _emit(emit_logic_program(grammar, spec(Backend.LOGIC_PROGRAM)), args.output)
    else:
        _emit(emit_events(derivation).to_jsonl(), args.output)
    return 0


def _cmd_schema(args) -> int:
    logic_file = _read_logic_file(args.spec)
    logic, states = resolve_states(logic_file)
    palette = _build_palette(logic_file, states, args)
    spec = RenderSpec(
        palette=palette,
        cell_size=args.cell_size,
        cell_gap=args.cell_gap,
        backend=Backend.SVG_SCHEMA,
    )
    _emit(render_schema(logic, states, spec), args.output)
    return 0


def _cmd_verify(args) -> int:
    logic, _states = resolve_states(_read_logic_file(args.spec))
    if args.vectors is not None:
        realization = load_vector_file(
            Path(args.vectors).read_text(encoding="utf-8")
        )
    else:
        realization = build_v_realization(args.theta)
    if args.tol is not None:
        realization = VectorRealization(
            realization.dimension, realization.vectors, args.tol
        )
    report = verify_faithful(logic, realization)
    for check in report.checks():
        verdict = "PASS" if check.passed else "FAIL"
        if check.name == "basis completeness":
            worst = f"{int(check.worst)}"
        elif math.isinf(check.worst):
            worst = "inf"
        else:
            worst = f"{check.worst:.3e}"
        print(f"[{verdict}] {check.name}: {_WORST_LABELS[check.name]} {worst}")
        for failure in check.failures:
            print(f"    - {failure}")
    return 0 if report.passed else 1


def _cmd_check(args) -> int:
    logic, states = resolve_states(_read_logic_file(args.spec))
    if len(states) == 0:
        raise EmptyStateSetError(f"logic {logic.name!r} admits no two-valued states")
    lines = [
        f"states: {len(states)} admissible ({states.order_source.value} order)"
    ]
    separation = is_separating(states, logic)
    if not separation:
        raise NotSeparatingError(*separation.witness)
    lines.append("separating: yes")
    representation = partition_representation(logic, states)
    lines.append(f"partition representation: ok ({len(representation)} contexts)")
    grammar = compile_grammar(logic, states)
    derivation = derive(grammar)
    lines.append(
        f"grammar: {len(grammar.productions)} productions, "
        f"{len(derivation.tokens)} derivation tokens"
    )
    report = check_incidence(derivation, logic, states)
    if not report.ok:
        for violation in report.violations:
            print(
                f"sglg: error: row {violation.row_index} ({violation.atom}) "
                f"misplaces {', '.join(violation.labels)}",
                file=sys.stderr,
            )
        return 1
    lines.append("incidence: ok")
    print("\n".join(lines))
    return 0
