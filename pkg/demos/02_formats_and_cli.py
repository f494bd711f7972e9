"""The two file formats, their diagnostics, and the command line.

Run with: python3 demos/02_formats_and_cli.py
"""

import subprocess
import sys
import tempfile
from pathlib import Path as FsPath

from dtry import ParseError, emit_flat, emit_nested, parse_flat, parse_nested

FLAT = """\
# a small simulation setup
oscillator.mass.momentum = 0.0
oscillator.spring.displacement = 1.0
thermal_capacity.entropy = 16.56
"""

d = parse_flat(FLAT)
print("parsed", len(d), "entries from the flat form")

# The nested form is JSON: objects are subdirectories, everything else
# is a leaf. Emission is canonical (sorted keys, two-space indent).
print("\nnested form:")
print(emit_nested(d))

# Round trip: nested -> directory -> flat. Flat emission sorts lines.
back = emit_flat(parse_nested(emit_nested(d)))
print("flat again, canonically ordered:")
print(back)

# Parsing collects every problem before giving up, with line numbers.
BROKEN = """\
a.b = 1
no equals sign here
a.b = 2
9bad.name = 3
a = 4
"""
try:
    parse_flat(BROKEN)
except ParseError as exc:
    print("diagnostics for a broken file:")
    for diag in exc.diagnostics:
        print("  ", diag)

# The same machinery drives the dtry command. Exit codes are stable:
# 0 valid, 1 invalid, 2 I/O trouble, 3 path not found.
with tempfile.TemporaryDirectory() as tmp:
    target = FsPath(tmp) / "setup.dtry"
    target.write_text(FLAT, encoding="utf-8")

    def run(*argv):
        proc = subprocess.run(
            [sys.executable, "-m", "dtry", *argv], capture_output=True, text=True
        )
        print(f"  dtry {' '.join(argv)}  ->  exit {proc.returncode}")
        return proc

    print("\ncommand line:")
    run("validate", str(target))
    got = run("get", "oscillator.spring.displacement", str(target))
    print("    stdout:", got.stdout.strip())
    run("get", "oscillator.damping", str(target))
    run("validate", str(FsPath(tmp) / "missing.dtry"))
