"""Command line for directory files.

Subcommands: validate, convert, get, merge, check. Exit codes are fixed
for scripting: 0 ok, 1 invalid input, 2 I/O error, 3 not found.
Diagnostics go to stderr as ``LINE:CODE:MESSAGE``; results go to stdout.
``-`` names stdin.
"""

from __future__ import annotations

import argparse
import json
import sys

from .core import Dtry, merge_disjoint
from .errors import BadNameError, BadPathError
from .formats import (
    Diagnostic,
    ParseError,
    emit_flat,
    emit_nested,
    parse_flat,
    parse_nested,
    scan_flat,
)
from .paths import Name, Path

EXIT_OK = 0
EXIT_INVALID = 1
EXIT_IO = 2
EXIT_NOT_FOUND = 3


def _read(source: str) -> str:
    if source == "-":
        return sys.stdin.read()
    with open(source, encoding="utf-8") as fh:
        return fh.read()


def _report(diagnostics) -> None:
    for diag in diagnostics:
        print(diag, file=sys.stderr)


def _parse(text: str, fmt: str) -> Dtry:
    return parse_flat(text) if fmt == "flat" else parse_nested(text)


def _flat_value(value) -> str:
    # Nested leaves may be any JSON scalar or array; flat lines hold text.
    return value if isinstance(value, str) else json.dumps(value)


def cmd_validate(args) -> int:
    try:
        text = _read(args.file)
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO
    try:
        _parse(text, args.format)
    except ParseError as exc:
        _report(exc.diagnostics)
        return EXIT_INVALID
    return EXIT_OK


def cmd_convert(args) -> int:
    try:
        text = _read(args.file)
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO
    try:
        directory = _parse(text, args.from_)
    except ParseError as exc:
        _report(exc.diagnostics)
        return EXIT_INVALID
    if args.to == "nested":
        sys.stdout.write(emit_nested(directory))
    else:
        sys.stdout.write(emit_flat(directory.map_values(_flat_value)))
    return EXIT_OK


def cmd_get(args) -> int:
    try:
        path = Path.parse(args.path)
    except BadPathError as exc:
        print(Diagnostic(exc.code, 1, str(exc)), file=sys.stderr)
        return EXIT_INVALID
    try:
        text = _read(args.file)
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO
    try:
        directory = _parse(text, args.format)
    except ParseError as exc:
        _report(exc.diagnostics)
        return EXIT_INVALID
    found = directory.lookup(path)
    if found is None:
        print(f"error: no entry at {str(path)!r}", file=sys.stderr)
        return EXIT_NOT_FOUND
    if found.is_leaf:
        print(_flat_value(found.value))
    else:
        sys.stdout.write(emit_flat(found.map_values(_flat_value)))
    return EXIT_OK


def cmd_merge(args) -> int:
    entries: dict[Name, Dtry] = {}
    for binding in args.prefix:
        name_text, sep, file_name = binding.partition("=")
        if not sep:
            print(f"error: --prefix takes NAME=FILE, got {binding!r}", file=sys.stderr)
            return EXIT_INVALID
        try:
            name = Name(name_text)
        except BadNameError as exc:
            print(Diagnostic(exc.code, 1, str(exc)), file=sys.stderr)
            return EXIT_INVALID
        if name in entries:
            print(f"error: duplicate prefix {name!r}", file=sys.stderr)
            return EXIT_INVALID
        try:
            text = _read(file_name)
        except OSError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return EXIT_IO
        try:
            entries[name] = parse_flat(text)
        except ParseError as exc:
            _report(exc.diagnostics)
            return EXIT_INVALID
    sys.stdout.write(emit_flat(merge_disjoint(entries)))
    return EXIT_OK


def cmd_check(args) -> int:
    try:
        text = _read(args.file)
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO
    entries, diagnostics = scan_flat(text)
    problems = list(diagnostics)
    # Key discipline is checked pairwise on the raw lines, without the trie.
    for i, first in enumerate(entries):
        for second in entries[i + 1 :]:
            if first.path == second.path:
                problems.append(
                    Diagnostic(
                        "E_DUPLICATE_PATH",
                        second.line,
                        f"duplicate path '{second.path}'; first bound at line {first.line}",
                    )
                )
            elif first.path.is_prefix_of(second.path) or second.path.is_prefix_of(first.path):
                problems.append(
                    Diagnostic(
                        "E_PREFIX_CONFLICT",
                        second.line,
                        f"paths '{first.path}' (line {first.line}) and "
                        f"'{second.path}' conflict",
                    )
                )
    if problems:
        _report(sorted(problems, key=lambda d: d.line))
        return EXIT_INVALID
    return EXIT_OK


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dtry", description="Validate, convert, and query directory files."
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="parse a file; exit 0 iff it is a valid directory")
    p.add_argument("file", help="input file, or - for stdin")
    p.add_argument("--format", choices=("flat", "nested"), default="flat")
    p.set_defaults(run=cmd_validate)

    p = sub.add_parser("convert", help="convert between the flat and nested formats")
    p.add_argument("file", help="input file, or - for stdin")
    p.add_argument("--from", dest="from_", required=True, choices=("flat", "nested"))
    p.add_argument("--to", required=True, choices=("flat", "nested"))
    p.set_defaults(run=cmd_convert)

    p = sub.add_parser("get", help="print the subdirectory at a path")
    p.add_argument("path", help="dotted path; empty string for the whole directory")
    p.add_argument("file", help="input file, or - for stdin")
    p.add_argument("--format", choices=("flat", "nested"), default="flat")
    p.set_defaults(run=cmd_get)

    p = sub.add_parser("merge", help="combine files under distinct prefixes")
    p.add_argument(
        "--prefix",
        action="append",
        required=True,
        metavar="NAME=FILE",
        help="mount FILE under NAME; repeatable",
    )
    p.set_defaults(run=cmd_merge)

    p = sub.add_parser("check", help="report duplicate and prefix-conflicting keys")
    p.add_argument("file", help="input file, or - for stdin")
    p.set_defaults(run=cmd_check)

    return parser


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    return args.run(args)


if __name__ == "__main__":
    sys.exit(main())
