import pytest

from chromakac.corpus import corpus

_acceptance = []


@pytest.fixture(scope="session")
def corpus_graphs():
    return corpus()


def pytest_runtest_logreport(report):
    if report.when == "call" and "test_acceptance.py::test_criterion" in report.nodeid:
        _acceptance.append((report.nodeid.split("::")[-1], report.passed))


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for name, ok in sorted(_acceptance):
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {name}")
