"""Shared fixtures plus a terminal summary for the acceptance suite."""

import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))  # for the exhaustive helpers

#: (label, passed, detail) rows registered by tests/test_acceptance.py.
ACCEPTANCE_RESULTS: list[tuple[str, bool, str]] = []


def record_acceptance(label: str, passed: bool, detail: str) -> None:
    ACCEPTANCE_RESULTS.append((label, passed, detail))


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for label, passed, detail in ACCEPTANCE_RESULTS:
        status = "PASS" if passed else "FAIL"
        terminalreporter.write_line(f"{status}  {label}: {detail}")


@pytest.fixture
def run_model_24():
    from mdepbounds import consecutive_run_model
    return consecutive_run_model(24)
