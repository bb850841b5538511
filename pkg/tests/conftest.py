"""Shared test helpers and the acceptance summary section.

test_acceptance.py appends one (criterion, status, detail) row per check;
printing them from the terminal-summary hook keeps the lines visible even
though pytest captures ordinary stdout.
"""

from __future__ import annotations

ACCEPTANCE_LINES: list[tuple[str, str, str]] = []


def record_criterion(criterion: str, passed: bool, detail: str) -> None:
    ACCEPTANCE_LINES.append((criterion, "PASS" if passed else "FAIL", detail))


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for criterion, status, detail in ACCEPTANCE_LINES:
        terminalreporter.write_line(f"{criterion:4s} {status:4s}  {detail}")
