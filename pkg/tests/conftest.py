import contextlib

import pytest

ACCEPTANCE_LINES = []


@pytest.fixture
def criterion():
    """Record a pass/fail line for an acceptance criterion."""

    @contextlib.contextmanager
    def record(label, detail=""):
        info = {"detail": detail}
        try:
            yield info
        except BaseException:
            ACCEPTANCE_LINES.append(f"FAIL  {label}  {info['detail']}")
            raise
        ACCEPTANCE_LINES.append(f"PASS  {label}  {info['detail']}")

    return record


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
