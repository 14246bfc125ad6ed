import pytest

from catkit import zoo
from catkit.hopf import lift_parametric_adjunction

nucleus_cell = zoo.nucleus_meet_cell
nucleus_parametric = zoo.meet_implication
meet_cell = zoo.closure_meet_cell
meet_parametric = zoo.two_meet_implication
lift_cell = zoo.lift_to_algebras


@pytest.fixture(scope="session")
def ncell():
    return nucleus_cell()


@pytest.fixture(scope="session")
def npa():
    return nucleus_parametric()


@pytest.fixture(scope="session")
def nlift(ncell, npa):
    return lift_parametric_adjunction(ncell, npa)


@pytest.fixture(scope="session")
def mcell():
    return meet_cell()


@pytest.fixture(scope="session")
def mpa():
    return meet_parametric()


# one line per acceptance criterion at the end of the run

_criteria = {}


def pytest_runtest_logreport(report):
    if "test_acceptance.py::test_criterion_" not in report.nodeid:
        return
    if report.when == "call" or (report.when == "setup" and report.outcome != "passed"):
        _criteria[report.nodeid] = report.outcome


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for nodeid in sorted(_criteria):
        name = nodeid.split("::test_criterion_")[1]
        num, _, what = name.partition("_")
        state = "PASS" if _criteria[nodeid] == "passed" else "FAIL"
        terminalreporter.write_line(f"criterion {int(num):2d} {state}: {what.replace('_', ' ')}")
