import re

import pytest

_CRITERION = re.compile(r"test_acceptance\.py::test_criterion_(\d+)_(\w+)")
_OUTCOMES = {}
_NOTES = []


def pytest_runtest_logreport(report):
    m = _CRITERION.search(report.nodeid)
    if not m:
        return
    key = (int(m.group(1)), m.group(2).replace("_", " "))
    if report.when == "call" or report.failed:
        if _OUTCOMES.get(key) != "FAIL":
            _OUTCOMES[key] = "PASS" if report.passed else ("SKIP" if report.skipped else "FAIL")


@pytest.fixture
def note():
    """Append a line to the acceptance summary printed at the end of the run."""
    return _NOTES.append


def pytest_terminal_summary(terminalreporter):
    if not _OUTCOMES:
        return
    tr = terminalreporter
    tr.section("acceptance criteria")
    for (num, title), outcome in sorted(_OUTCOMES.items()):
        tr.write_line(f"[{outcome}] criterion {num}: {title}")
    for line in _NOTES:
        tr.write_line(f"  note: {line}")
