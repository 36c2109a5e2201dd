import pytest

ACCEPTANCE_LINES = []


@pytest.fixture
def criterion():
    """Record one pass/fail line per acceptance criterion and assert it."""

    def _criterion(num, desc, ok):
        line = f"[{'PASS' if ok else 'FAIL'}] criterion {num:2d}: {desc}"
        ACCEPTANCE_LINES.append(line)
        print(line)
        assert ok, line

    return _criterion


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(line)
