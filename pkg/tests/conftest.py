import pytest

from corpus import corpus, fixture_graphs, random_graphs


@pytest.fixture(scope="session")
def graph_corpus():
    return corpus()


@pytest.fixture(scope="session")
def fixtures():
    return fixture_graphs()


@pytest.fixture(scope="session")
def random_corpus():
    return random_graphs()


_CRITERIA: dict[str, list[str]] = {}


def pytest_runtest_logreport(report):
    if "test_acceptance.py::test_criterion_" not in report.nodeid:
        return
    if report.when == "call" or (report.when == "setup" and report.outcome != "passed"):
        name = report.nodeid.split("::")[-1][len("test_criterion_"):]
        _CRITERIA.setdefault(name, []).append("PASS" if report.outcome == "passed" else "FAIL")


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for name in sorted(_CRITERIA):
        outcome = "FAIL" if "FAIL" in _CRITERIA[name] else "PASS"
        number, _, label = name.partition("_")
        terminalreporter.write_line(f"criterion {number.lstrip('0'):<4} {outcome}  {label.replace('_', ' ')}")
