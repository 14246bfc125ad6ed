"""The ``catkit`` command."""
import argparse
import json
import sys
from pathlib import Path

from catkit.errors import CatkitError, ResourceLimitError
from catkit.core import max_morphisms, morphism_limit
from catkit.harness.fixtures import FIXTURE_NAMES, generate_fixture
from catkit.harness.report import emit_report, input_digest, parse_report
from catkit.harness.runner import run_check_suite, validate_all
from catkit.harness.spec_file import SpecError, emit_spec, parse_spec_file

EXIT_PASS, EXIT_FAIL, EXIT_PARSE, EXIT_RESOURCE = 0, 1, 2, 3


def _parser():
    p = argparse.ArgumentParser(prog="catkit", description="Check finite category theory specs.")
    p.add_argument("--max-morphisms", type=int, help="size guard for constructed categories")
    sub = p.add_subparsers(dest="command", required=True)
    v = sub.add_parser("validate", help="parse a spec file and validate every declaration")
    v.add_argument("file")
    v.add_argument("--format", choices=("json", "text"), default="json")
    r = sub.add_parser("run", help="run the tasks of a spec file")
    r.add_argument("file")
    r.add_argument("--task", action="append", default=[], metavar="NAME",
                   help="task id, op or index to run (repeatable)")
    r.add_argument("--format", choices=("json", "text"), default="json")
    f = sub.add_parser("fixture", help="write a named fixture as a spec file")
    f.add_argument("--name", required=True, help=f"one of {', '.join(FIXTURE_NAMES)}")
    f.add_argument("--out", help="output path (default stdout)")
    rep = sub.add_parser("report", help="re-emit a JSON report")
    rep.add_argument("--format", choices=("json", "text"), default="text")
    rep.add_argument("--input", help="report file (default stdin)")
    return p


def _out(data):
    sys.stdout.buffer.write(data)
    sys.stdout.flush()


def _exit_for(report):
    if report.resource_limited:
        return EXIT_RESOURCE
    return EXIT_PASS if report.outcome == "pass" else EXIT_FAIL


def main(argv=None):
    args = _parser().parse_args(argv)
    limit = args.max_morphisms if args.max_morphisms is not None else max_morphisms()
    if limit < 1:
        print("catkit: --max-morphisms must be positive", file=sys.stderr)
        return EXIT_PARSE
    with morphism_limit(limit):
        return _dispatch(args)


def _dispatch(args):
    try:
        if args.command == "fixture":
            data = emit_spec(generate_fixture(args.name))
            if args.out:
                Path(args.out).write_bytes(data)
            else:
                _out(data)
            return EXIT_PASS
        if args.command == "report":
            raw = Path(args.input).read_bytes() if args.input else sys.stdin.buffer.read()
            _out(emit_report(parse_report(raw), args.format))
            return EXIT_PASS
        raw = Path(args.file).read_bytes()
        spec = parse_spec_file(raw)
        digest = input_digest(raw)
        if args.command == "validate":
            report = validate_all(spec, digest)
        else:
            report = run_check_suite(spec, args.task, digest)
        _out(emit_report(report, args.format))
        return _exit_for(report)
    except SpecError as e:
        print(json.dumps({"errors": [i.as_dict() for i in e.issues]}, indent=2), file=sys.stderr)
        return EXIT_PARSE
    except ResourceLimitError as e:
        print(f"catkit: {e}", file=sys.stderr)
        return EXIT_RESOURCE
    except (OSError, ValueError, KeyError, CatkitError) as e:
        print(f"catkit: {e}", file=sys.stderr)
        return EXIT_PARSE


if __name__ == "__main__":
    sys.exit(main())
