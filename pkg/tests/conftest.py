import pytest

from sexpansion import LieAlgebra


def levi_civita_so3():
    """so(3) with [X_i, X_j] = eps_ijk X_k."""
    entries = [(0, 1, 2, 1), (1, 2, 0, 1), (2, 0, 1, 1)]
    return LieAlgebra.from_entries(3, entries, name="so3-eps")


@pytest.fixture
def so3_eps():
    return levi_civita_so3()


# one PASS/FAIL line per acceptance criterion, printed after the run
ACCEPTANCE_LINES: dict[int, str] = {}


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for k in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(ACCEPTANCE_LINES[k])
