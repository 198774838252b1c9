import pytest

from sp6boundary.spectral import run_pipeline


@pytest.fixture(scope="session")
def pipeline():
    return run_pipeline()


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
