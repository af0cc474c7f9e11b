from __future__ import annotations

import re

_CRITERION = re.compile(r"test_acceptance\.py::test_criterion_(\d+)_(\w+)")
_outcomes: dict[int, tuple[str, str]] = {}


def pytest_runtest_logreport(report):
    m = _CRITERION.search(report.nodeid)
    if not m:
        return
    n = int(m.group(1))
    if report.failed:
        _outcomes[n] = (m.group(2), "FAIL")
    elif report.when == "call" and n not in _outcomes:
        _outcomes[n] = (m.group(2), "PASS")


def pytest_terminal_summary(terminalreporter):
    if not _outcomes:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(_outcomes):
        label, status = _outcomes[n]
        terminalreporter.write_line(f"criterion {n} ({label.replace('_', ' ')}): {status}")
