from __future__ import annotations

import re

_CRITERIA: dict[int, tuple[str, str]] = {}


def pytest_runtest_logreport(report):
    m = re.search(r"test_criterion_(\d+)", report.nodeid)
    if not m:
        return
    n = int(m.group(1))
    failed = report.failed or (report.when == "call" and not report.passed)
    status = "FAIL" if failed else "PASS"
    previous = _CRITERIA.get(n)
    if previous and previous[0] == "FAIL":
        return
    if report.when == "call" or failed:
        _CRITERIA[n] = (status, _DESCRIPTIONS.get(n, ""))


_DESCRIPTIONS: dict[int, str] = {}


def pytest_collection_modifyitems(items):
    for item in items:
        m = re.search(r"test_criterion_(\d+)", item.name)
        if m and item.function.__doc__:
            _DESCRIPTIONS[int(m.group(1))] = item.function.__doc__.strip().splitlines()[0]


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(_CRITERIA):
        status, desc = _CRITERIA[n]
        terminalreporter.write_line(f"criterion {n:2d}: {status}  {desc}")
