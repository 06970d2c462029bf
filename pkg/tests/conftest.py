import pytest

from tough_cycles.enumeration import connected_graphs

CRITERION_LINES = []


@pytest.fixture
def criterion():
    """Record one PASS/FAIL line per acceptance criterion; the lines are
    echoed in the terminal summary so capture cannot hide them."""
    def _record(num: int, ok: bool, detail: str):
        line = f"criterion {num}: {'PASS' if ok else 'FAIL'} - {detail}"
        CRITERION_LINES.append(line)
        print(line)
        assert ok, line
    return _record


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if CRITERION_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(set(CRITERION_LINES)):
            terminalreporter.write_line(line)


@pytest.fixture(scope="session")
def corpus_n6():
    """All connected graphs on 1..6 vertices (canonical representatives)."""
    out = []
    for n in range(1, 7):
        out.extend(connected_graphs(n))
    return out
