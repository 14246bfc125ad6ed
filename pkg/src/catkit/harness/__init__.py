"""Spec files, fixtures, check orchestration and reports."""
from catkit.harness.fixtures import FIXTURE_NAMES, fixture_document, generate_fixture
from catkit.harness.report import emit_report, input_digest, parse_report
from catkit.harness.runner import Report, TaskResult, run_check_suite, validate_all
from catkit.harness.spec_file import (E_JSON, E_REF, E_SCHEMA, Issue, SpecError, SpecFile,
                                      Task, emit_spec, parse_document, parse_spec_file)
