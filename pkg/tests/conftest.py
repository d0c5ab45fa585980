import os
import sys

sys.path.insert(0, os.path.dirname(__file__))

import pytest  # noqa: E402

_verdicts: list[str] = []


@pytest.fixture
def verdict():
    """Record one PASS/FAIL line per acceptance criterion, then assert."""
    def record(n: int, ok: bool, detail: str):
        line = f"{'PASS' if ok else 'FAIL'} criterion {n}: {detail}"
        print(line)
        _verdicts.append(line)
        assert ok, line
    return record


def pytest_terminal_summary(terminalreporter):
    if _verdicts:
        terminalreporter.section("acceptance")
        for line in _verdicts:
            terminalreporter.write_line(line)
