import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent))

from acceptance_log import RESULTS  # noqa: E402


def pytest_terminal_summary(terminalreporter):
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in RESULTS:
            terminalreporter.write_line(line)


import pytest  # noqa: E402

from cubiclam.pullback import enumerate_dendritic_portraits  # noqa: E402


@pytest.fixture(scope="session")
def small_corpus():
    """A handful of generated cubic dendritic marked laminations at depth 5."""
    return enumerate_dendritic_portraits(2, 2, 8, depth=5, seed=7)
