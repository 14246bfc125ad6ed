import json

import pytest

from catkit.errors import CatkitError
from catkit.core import morphism_limit
from catkit.harness import (E_JSON, E_REF, E_SCHEMA, FIXTURE_NAMES, SpecError, emit_report,
                            emit_spec, fixture_document, generate_fixture, input_digest,
                            parse_report, parse_spec_file, run_check_suite, validate_all)
from catkit.harness.cli import main

ALL_FIXTURES = [n for n in FIXTURE_NAMES if n != "id-monad(C)"] + [
    "id-monad(one)", "id-monad(two)", "id-monad(bool4)", "id-monad(z2)"]

TWO = {"objects": ["0", "1"],
       "morphisms": [{"id": "id0", "dom": "0", "cod": "0"}, {"id": "u", "dom": "0", "cod": "1"},
                     {"id": "id1", "dom": "1", "cod": "1"}],
       "identities": {"0": "id0", "1": "id1"},
       "composition": [{"g": "id0", "f": "id0", "eq": "id0"}, {"g": "u", "f": "id0", "eq": "u"},
                       {"g": "id1", "f": "u", "eq": "u"}, {"g": "id1", "f": "id1", "eq": "id1"}]}


def issues(doc):
    with pytest.raises(SpecError) as e:
        parse_spec_file(json.dumps(doc) if not isinstance(doc, (str, bytes)) else doc)
    return e.value.issues


def test_empty_object_is_an_empty_spec():
    s = parse_spec_file(b"{}")
    assert not s.categories and not s.tasks
    r = run_check_suite(s)
    assert r.outcome == "pass" and r.tasks == []


def test_small_category_parses():
    s = parse_spec_file(json.dumps({"categories": {"Two": TWO}}))
    assert len(s.categories["Two"].morphisms) == 3


def test_malformed_json_reports_line():
    (i,) = issues('{\n "categories": {,\n}')
    assert i.code == E_JSON and i.line == 2


def test_duplicate_keys_rejected():
    assert issues('{"tasks": [], "tasks": []}')[0].code == E_SCHEMA


def test_unknown_keys_rejected():
    (i,) = issues({"categories": {"Two": {**TWO, "extra": 1}}})
    assert i.code == E_SCHEMA and i.path == "$.categories.Two.extra"
    assert issues({"shapes": {}})[0].path == "$.shapes"


def test_dangling_composition_names_path():
    bad = dict(TWO, composition=TWO["composition"] + [{"g": "u", "f": "w", "eq": "u"}])
    (i,) = issues({"categories": {"Two": bad}})
    assert i.code == E_REF and i.path == "$.categories.Two.composition[4].f"


def test_dangling_functor_reference():
    doc = {"categories": {"Two": TWO},
           "monads": {"m": {"base": "Two", "endo": "nope", "mult": {}, "unit": {}}}}
    (i,) = issues(doc)
    assert i.code == E_REF and i.path == "$.monads.m.endo"


def test_unknown_task_and_argument():
    errs = issues({"tasks": [{"op": "frobnicate", "args": {}},
                             {"op": "em", "args": {"monad": "missing"}}]})
    assert [e.code for e in errs] == [E_SCHEMA, E_REF]


def test_not_utf8():
    assert issues(b"\xff\xfe")[0].code == E_JSON


@pytest.mark.parametrize("name", ALL_FIXTURES)
def test_fixture_round_trip(name):
    spec = generate_fixture(name)
    again = parse_spec_file(emit_spec(spec))
    assert spec.same_as(again)
    assert emit_spec(again) == emit_spec(spec)


def test_unknown_fixture():
    with pytest.raises(CatkitError):
        fixture_document("bool8")


def test_nucleus_fixture_shape():
    s = generate_fixture("bool4-nucleus")
    assert (len(s.categories), len(s.monads), len(s.parametric_adjunctions)) == (1, 1, 1)
    assert {t.op for t in s.tasks} >= {"validate-category", "em", "phi", "psi", "hopf-adj",
                                       "hopf-mnd", "fusion", "adjoint-object",
                                       "dinatural-extend", "antipode", "compare-phi",
                                       "fusion-hopf", "lift"}


def test_two_fixture():
    C = generate_fixture("two").categories["Two"]
    assert (len(C.objects), len(C.morphisms)) == (2, 3)


@pytest.mark.parametrize("name", ALL_FIXTURES)
def test_fixture_declarations_validate(name):
    assert validate_all(generate_fixture(name)).outcome == "pass"


def test_nucleus_pipeline_passes():
    r = run_check_suite(generate_fixture("bool4-nucleus"))
    assert r.outcome == "pass", [t.op for t in r.tasks if t.outcome != "pass"]


def test_meetcell_hopf_task_fails_with_witness():
    r = run_check_suite(generate_fixture("meetcell"), ["hopf-mnd"])
    (t,) = r.tasks
    assert t.outcome == "fail"
    (chk,) = [c for c in t.checks if not c["ok"]]
    assert chk["witness"] == ["(0,(1|id1))"]
    assert t.summary["witness"] == ["0", "(1|id1)"]


def test_resource_limit_is_a_task_error():
    spec = generate_fixture("bool4-nucleus")
    with morphism_limit(5):
        r = run_check_suite(spec, ["lift", "validate-category"])
    assert [t.outcome for t in r.tasks] == ["pass", "error"]
    assert r.tasks[1].error["code"] == "E_RESOURCE" and r.resource_limited


def test_precondition_failure_is_a_check_failure():
    spec = generate_fixture("meetcell")
    spec.tasks.append(type(spec.tasks[0])("lift", {"cell": "meetcell", "parametric": "min-imp"}))
    r = run_check_suite(spec, ["lift"])
    assert r.tasks[0].outcome == "fail"
    assert r.tasks[0].checks[0]["name"] == "precondition"


def test_report_round_trip_and_text():
    raw = emit_spec(generate_fixture("closure1"))
    r = run_check_suite(parse_spec_file(raw), digest=input_digest(raw))
    data = emit_report(r)
    assert emit_report(parse_report(data)) == data
    assert list(json.loads(data)) == sorted(json.loads(data))
    text = emit_report(r, "text").decode()
    assert "3 pass" in text and input_digest(raw) in text


def test_witnesses_serialized_sorted():
    from catkit.harness.runner import Report, TaskResult
    r = Report("0", "d", [TaskResult(0, "", "x", "fail",
                                     [{"name": "n", "ok": False, "witness": ["b", "a"]}])])
    assert json.loads(emit_report(r))["tasks"][0]["checks"][0]["witness"] == ["a", "b"]


def test_cli_round_trip(tmp_path, capsysbinary):
    out = tmp_path / "n.json"
    assert main(["fixture", "--name", "meetcell", "--out", str(out)]) == 0
    assert main(["validate", str(out)]) == 0
    capsysbinary.readouterr()
    assert main(["run", str(out), "--task", "hopf-mnd"]) == 1
    report = capsysbinary.readouterr().out
    assert json.loads(report)["outcome"] == "fail"
    rfile = tmp_path / "r.json"
    rfile.write_bytes(report)
    assert main(["report", "--format", "text", "--input", str(rfile)]) == 0
    assert b"hopf-invertible fails" in capsysbinary.readouterr().out


def test_cli_exit_codes(tmp_path, capsysbinary):
    bad = tmp_path / "bad.json"
    bad.write_text("{")
    assert main(["validate", str(bad)]) == 2
    good = tmp_path / "g.json"
    assert main(["fixture", "--name", "bool4-nucleus", "--out", str(good)]) == 0
    assert main(["--max-morphisms", "20", "run", str(good)]) == 3
    assert main(["run", str(good), "--task", "lift", "--format", "text"]) == 0
    assert b"[PASS ] #15 lift" in capsysbinary.readouterr().out
