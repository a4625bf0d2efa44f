"""``nhs`` command-line front end.

Exit status: 0 success, 1 violations found, 2 unreadable or malformed input,
3 internal error, 4 rendering unsupported for the input.
"""

from __future__ import annotations

import argparse
import sys
from typing import Sequence

from .complex import validate_structure
from .document import ParseError, format_numberings, format_violations, parse_complex, parse_numbering
from .numbering import (NumberingDomainError, SearchLimitError, brute_force_numberings, enumerate_numberings,
                        validate_numbering)
from .reconstruction import InternalConsistencyError, invariants, reconstruct, trace_boundary
from .render import RenderUnsupported, render_svg

EXIT_OK, EXIT_VIOLATIONS, EXIT_INPUT, EXIT_INTERNAL, EXIT_UNSUPPORTED = 0, 1, 2, 3, 4

NEEDS_NUMBERING = ("reconstruct", "invariants", "render")


class _InputError(Exception):
    pass


class _Violations(Exception):
    def __init__(self, violations):
        self.violations = violations


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="nhs", description="Curve data, numberings and the surfaces they determine.")
    p.add_argument("subcommand", choices=("validate", "enumerate", "reconstruct", "invariants", "render"))
    p.add_argument("input", help="complex document (.nhs)")
    p.add_argument("--numbering", help="numbering file (region <id> = <int> lines)")
    p.add_argument("--max-level", type=int, help="largest value tried by enumerate")
    p.add_argument("--brute-force", action="store_true", help="enumerate by exhaustive search")
    p.add_argument("-o", "--output", help="write output here instead of stdout")
    return p


def _read(path: str) -> str:
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except (OSError, UnicodeDecodeError) as exc:
        raise _InputError(f"cannot read {path}: {exc}") from exc


def _load(args):
    text = _read(args.input)
    try:
        c = parse_complex(text)
    except ParseError as exc:
        raise _InputError(f"{args.input}: {exc}") from exc
    problems = validate_structure(c)
    n = None
    if args.numbering is not None:
        ntext = _read(args.numbering)
        try:
            n = parse_numbering(ntext, c)
        except ParseError as exc:
            raise _InputError(f"{args.numbering}: {exc}") from exc
        if not problems:
            try:
                problems = validate_numbering(c, n)
            except NumberingDomainError as exc:
                raise _InputError(f"{args.numbering}: {exc}") from exc
    return c, n, problems


def _reconstruct_report(s) -> str:
    lines = [f"cell {cell.id}" for cell in s.cells]
    for g in s.gluings:
        lines.append(f"glue {s.segments[g.a].id} {s.segments[g.b].id} {'reversed' if g.reversed else 'aligned'}")
    for seg, label in s.boundary:
        lines.append(f"boundary-segment {label.value} {s.segments[seg].id}")
    for vertex, a, b in s.twist_edges:
        lines.append(f"twist {vertex} {s.segments[a].id} {s.segments[b].id}")
    return "".join(line + "\n" for line in lines) + trace_boundary(s).format()


def _execute(args) -> tuple[int, str]:
    if args.subcommand in NEEDS_NUMBERING and args.numbering is None:
        raise _InputError(f"{args.subcommand} requires --numbering")
    if args.subcommand == "enumerate" and args.max_level is None:
        raise _InputError("enumerate requires --max-level")
    if args.max_level is not None and args.max_level < 0:
        raise _InputError("--max-level must be non-negative")
    c, n, problems = _load(args)
    if problems:
        raise _Violations(problems)

    if args.subcommand == "validate":
        return EXIT_OK, ""
    if args.subcommand == "enumerate":
        try:
            if args.brute_force:
                found = brute_force_numberings(c, args.max_level)
            else:
                found = enumerate_numberings(c, args.max_level)
        except SearchLimitError as exc:
            raise _InputError(str(exc)) from exc
        return EXIT_OK, format_numberings(found)
    s = reconstruct(c, n)
    if args.subcommand == "reconstruct":
        return EXIT_OK, _reconstruct_report(s)
    if args.subcommand == "invariants":
        return EXIT_OK, invariants(s).format() + "\n"
    return EXIT_OK, render_svg(c, n)


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        status, text = _execute(args)
    except _InputError as exc:
        print(f"nhs: error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except _Violations as exc:
        sys.stdout.write(format_violations(exc.violations))
        return EXIT_VIOLATIONS
    except RenderUnsupported as exc:
        print(f"nhs: unsupported: {exc}", file=sys.stderr)
        return EXIT_UNSUPPORTED
    except InternalConsistencyError as exc:
        print(f"nhs: internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    except Exception as exc:  # noqa: BLE001 - anything else is a bug
        print(f"nhs: internal error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    if args.output is not None:
        try:
            with open(args.output, "w", encoding="utf-8", newline="\n") as fh:
                fh.write(text)
        except OSError as exc:
            print(f"nhs: error: cannot write {args.output}: {exc}", file=sys.stderr)
            return EXIT_INPUT
    else:
        sys.stdout.write(text)
    return status


if __name__ == "__main__":
    sys.exit(main())
