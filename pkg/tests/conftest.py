from fractions import Fraction

import pytest
from hypothesis import settings

from biquad import QuadExt

settings.register_profile("default", deadline=None, max_examples=100)
settings.load_profile("default")

_acceptance: list[tuple[str, str]] = []


def pytest_runtest_logreport(report):
    if "test_acceptance.py" not in report.nodeid:
        return
    if report.when == "call" or report.outcome != "passed":
        _acceptance.append((report.nodeid.split("::")[-1], report.outcome))


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for name, outcome in _acceptance:
        terminalreporter.write_line(f"{'PASS' if outcome == 'passed' else 'FAIL'}  {name}")


@pytest.fixture
def golden():
    return QuadExt(Fraction(1, 2), Fraction(1, 2), 5)
