"""Shared pytest plumbing for the acceptance summary.

The acceptance tests are named test_criterion_NN_<slug>; this hook collects
their outcomes and prints one PASS/FAIL line per criterion at the end of the
run, so the verdicts stay readable inside a long -v listing.
"""
from __future__ import annotations

import re

_CRITERION = re.compile(r"test_criterion_(\d+)_([a-z0-9_]+)")
_outcomes: dict = {}


def pytest_runtest_logreport(report):
    match = _CRITERION.search(report.nodeid)
    if match is None:
        return
    key = (int(match.group(1)), match.group(2))
    if report.when == "call":
        _outcomes[key] = report.outcome
    elif report.outcome != "passed" and key not in _outcomes:
        # setup or teardown blew up before/without a call phase
        _outcomes[key] = report.outcome


def pytest_terminal_summary(terminalreporter):
    if not _outcomes:
        return
    terminalreporter.write_line("")
    terminalreporter.write_line("acceptance criteria summary:")
    for (number, slug), outcome in sorted(_outcomes.items()):
        verdict = "PASS" if outcome == "passed" else "FAIL"
        terminalreporter.write_line(f"  criterion {number:02d} {slug}: {verdict}")
