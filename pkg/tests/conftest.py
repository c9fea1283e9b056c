import sys

import pytest

from lamespec import Cubic

CUBIC_ROOTS = [(1.0, 0.0, -1.0), (2.0, 0.0, -1.0), (5.0, 1.0, -3.0)]


@pytest.fixture(params=CUBIC_ROOTS, ids=lambda r: "Q(%g,%g,%g)" % r)
def cubic(request):
    return Cubic(*request.param)


@pytest.fixture
def symmetric():
    return Cubic(1.0, 0.0, -1.0)


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance") or sys.modules.get("tests.test_acceptance")
    results = getattr(mod, "RESULTS", None)
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(results):
        terminalreporter.write_line(results[key])
