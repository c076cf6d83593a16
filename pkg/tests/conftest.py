import os
import sys

import pytest

sys.path.insert(0, os.path.dirname(__file__))

SLOW = os.environ.get("MOTIVE_FORGE_SLOW") == "1"

_criteria = []


def pytest_runtest_logreport(report):
    if report.when == "call" and "test_acceptance.py" in report.nodeid:
        _criteria.append((report.nodeid.split("::", 1)[1], report.outcome))
    elif report.when == "setup" and report.skipped and "test_acceptance.py" in report.nodeid:
        _criteria.append((report.nodeid.split("::", 1)[1], "skipped"))


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for name, outcome in _criteria:
        verdict = {"passed": "PASS", "failed": "FAIL"}.get(outcome, outcome.upper())
        terminalreporter.write_line(f"{verdict:<8} {name}")


@pytest.fixture(autouse=True)
def _no_cap_env(monkeypatch):
    monkeypatch.delenv("MOTIVE_FORGE_CAP", raising=False)
