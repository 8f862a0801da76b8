import pytest

VERDICTS: dict[int, str] = {}


@pytest.fixture
def verdicts():
    return VERDICTS


def pytest_terminal_summary(terminalreporter):
    if not VERDICTS:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(VERDICTS):
        terminalreporter.write_line(VERDICTS[n])
