import pytest

ACCEPTANCE_LINES: dict[int, str] = {}


@pytest.fixture
def criterion_log():
    def log(number: int, passed: bool, detail: str) -> None:
        ACCEPTANCE_LINES[number] = f"criterion {number}: {'PASS' if passed else 'FAIL'} ({detail})"
        print(ACCEPTANCE_LINES[number])
    return log


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for n in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(ACCEPTANCE_LINES[n])
