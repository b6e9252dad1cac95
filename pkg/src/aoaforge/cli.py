"""Command line entry point: ``aoaforge <subcommand> ...``.

Exit codes: 0 success, 1 bad input, 2 internal invariant violation.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import aoa as aoa_mod
from .cpm import schedule
from .dot import render_dot
from .errors import AoaError, InputError, InvariantViolation
from .generate import generate_random_table
from .graph import group_levels, topological_levels
from .schedule import build_aon, emit_table, parse_schedule_table

EXIT_OK, EXIT_INPUT, EXIT_INTERNAL = 0, 1, 2


def _add_io(p: argparse.ArgumentParser, formats: tuple[str, ...], default: str) -> None:
    p.add_argument("path", nargs="?", help="input table (same as --input)")
    p.add_argument("-i", "--input", help="input CSV table, '-' for stdin")
    p.add_argument("-o", "--output", help="output file (default: stdout)")
    p.add_argument("--format", choices=formats, default=default)
    p.add_argument("--strict-alpha-omega", action="store_true",
                   help="require explicit α/ω (or START/END) rows instead of adding them")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="aoaforge", description="Convert AoN precedence tables to AoA networks.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("convert", help="build the AoA network")
    _add_io(p, ("json", "dot"), "json")
    p.add_argument("--stats", action="store_true", help="include network statistics")

    p = sub.add_parser("check", help="validate a table and certify its conversion")
    _add_io(p, ("json", "csv"), "csv")

    p = sub.add_parser("levels", help="topological levels of the AoN")
    _add_io(p, ("csv", "json", "dot"), "csv")

    p = sub.add_parser("cpm", help="critical path schedule")
    _add_io(p, ("json",), "json")
    p.add_argument("--stats", action="store_true")

    p = sub.add_parser("render", help="DOT drawing of the AoN or AoA")
    _add_io(p, ("dot",), "dot")
    p.add_argument("--graph", choices=("aoa", "aon"), default="aoa")

    p = sub.add_parser("gen", help="random schedule table")
    p.add_argument("-o", "--output")
    p.add_argument("--format", choices=("csv",), default="csv")
    p.add_argument("--nodes", type=int, default=10)
    p.add_argument("--density", type=float, default=0.2)
    p.add_argument("--seed", type=int, default=0)
    return parser


def _read_input(args) -> str:
    path = args.input or args.path
    if path is None or path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _write(args, text: str) -> None:
    if args.output and args.output != "-":
        with open(args.output, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _load(args):
    table = parse_schedule_table(_read_input(args))
    policy = "strict" if args.strict_alpha_omega else "auto"
    return table, policy


def cmd_convert(args) -> str:
    table, policy = _load(args)
    conv = aoa_mod.convert(table, policy)
    if args.format == "dot":
        return render_dot(conv.aoa)
    return aoa_mod.aoa_to_json(conv.aoa, conv.stats if args.stats else None, conv.dummies)


def cmd_check(args) -> str:
    table, policy = _load(args)
    conv = aoa_mod.convert(table, policy)
    s = conv.stats
    if args.format == "json":
        return json.dumps({"ok": True, "activities": len(table), "stats": s.to_dict()}, indent=2) + "\n"
    return (
        f"ok,{len(table)} activities,{s.event_count} events,"
        f"{s.dummy_arc_count} dummies,{s.bipartite_count} bipartites\n"
    )


def cmd_levels(args) -> str:
    table, policy = _load(args)
    g = build_aon(table, policy)
    levels = topological_levels(g)
    if args.format == "dot":
        return render_dot(g)
    rows = group_levels(levels)
    if args.format == "json":
        return json.dumps({str(i + 1): row for i, row in enumerate(rows)}, ensure_ascii=False, indent=2) + "\n"
    return "level,codes\n" + "".join(f"{i + 1},{';'.join(row)}\n" for i, row in enumerate(rows))


def cmd_cpm(args) -> str:
    table, policy = _load(args)
    conv = aoa_mod.convert(table, policy)
    result = schedule(conv.aoa)
    return aoa_mod.aoa_to_json(conv.aoa, conv.stats if args.stats else None, cpm=result.to_dict())


def cmd_render(args) -> str:
    table, policy = _load(args)
    if args.graph == "aon":
        return render_dot(build_aon(table, policy))
    return render_dot(aoa_mod.convert(table, policy).aoa)


def cmd_gen(args) -> str:
    if args.nodes < 1:
        raise InputError("--nodes must be at least 1")
    if not 0.0 <= args.density <= 1.0:
        raise InputError("--density must lie in [0, 1]")
    if args.seed < 0:
        raise InputError("--seed must be non-negative")
    return emit_table(generate_random_table(args.nodes, args.density, args.seed))


COMMANDS = {
    "convert": cmd_convert,
    "check": cmd_check,
    "levels": cmd_levels,
    "cpm": cmd_cpm,
    "render": cmd_render,
    "gen": cmd_gen,
}


def _error(message: str) -> None:
    tag = "error:"
    if sys.stderr.isatty() and not os.environ.get("AOAFORGE_NO_COLOR"):
        tag = "\033[31merror:\033[0m"
    print(f"aoaforge: {tag} {message}", file=sys.stderr)


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        text = COMMANDS[args.command](args)
        _write(args, text)
    except InvariantViolation as exc:
        _error(f"internal invariant violated: {exc}")
        return EXIT_INTERNAL
    except (InputError, OSError) as exc:
        _error(str(exc))
        return EXIT_INPUT
    except AoaError as exc:
        _error(str(exc))
        return EXIT_INPUT
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
