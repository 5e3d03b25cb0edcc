import pytest

from pfafftoda.taueval import clear_memo


@pytest.fixture(autouse=True)
def _fresh_memo():
    clear_memo()
    yield


def pytest_terminal_summary(terminalreporter):
    from test_acceptance import LINES
    if LINES:
        terminalreporter.section("acceptance criteria")
        for n in sorted(LINES):
            terminalreporter.write_line(LINES[n])
