import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from sigmaset import kernels  # noqa: E402
from sigmaset.textio import parse_set  # noqa: E402

GOLDEN = Path(__file__).parent / "golden"

_acceptance = {}


@pytest.fixture
def S():
    return parse_set


@pytest.fixture(params=sorted(kernels.available()))
def impl(request):
    return kernels.available()[request.param]


def pytest_runtest_logreport(report):
    if report.when != "call" or "test_acceptance" not in report.nodeid:
        return
    _acceptance[report.nodeid.split("::")[-1]] = report.outcome


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for name, outcome in _acceptance.items():
        terminalreporter.write_line(f"{'PASS' if outcome == 'passed' else 'FAIL'}  {name}")
