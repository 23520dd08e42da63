import os

import pytest

from cyclelink.extremal import generate

ACCEPTANCE_LINES = []


@pytest.fixture
def criterion():
    """Record one PASS/FAIL line per acceptance criterion; the lines are
    echoed in the terminal summary."""

    def _record(num: int, ok: bool, detail: str) -> None:
        line = f"criterion {num}: {'PASS' if ok else 'FAIL'} - {detail}"
        ACCEPTANCE_LINES.append(line)
        assert ok, line

    return _record


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(line)

CORPUS = os.path.join(os.path.dirname(__file__), "..", "data", "connected_upto6.g6")


@pytest.fixture(scope="session")
def corpus_path():
    return os.path.abspath(CORPUS)


@pytest.fixture(scope="session")
def e0():
    """The 7-vertex core: roots, apex pair, no tight components."""
    return generate([])


@pytest.fixture(scope="session")
def e1():
    """10 vertices: one triangle component attached to {a, b, x1, x3}."""
    return generate([(1, 3)])


@pytest.fixture(scope="session")
def e2():
    """13 vertices: triangle components at attachment indices 1 and 2."""
    return generate([(1, 3), (2, 3)])
