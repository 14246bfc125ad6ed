"""The same computations driven from a JSON spec file.

Writes the bool4-nucleus and meetcell fixtures to a temporary directory,
runs their task lists and prints the text reports.  The JSON report of a
run is byte-for-byte reproducible.
"""
import tempfile
from pathlib import Path

from catkit.harness import (emit_report, emit_spec, generate_fixture, input_digest,
                            parse_spec_file, run_check_suite)

with tempfile.TemporaryDirectory() as tmp:
    for name in ("bool4-nucleus", "meetcell"):
        path = Path(tmp) / f"{name}.json"
        path.write_bytes(emit_spec(generate_fixture(name)))
        raw = path.read_bytes()
        spec = parse_spec_file(raw)
        report = run_check_suite(spec, digest=input_digest(raw))
        print(emit_report(report, "text").decode())
        again = run_check_suite(parse_spec_file(raw), digest=input_digest(raw))
        print("reproducible:", emit_report(report) == emit_report(again))
        print()
