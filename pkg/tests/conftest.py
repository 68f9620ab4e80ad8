import pytest

from ringline.ring import materialize

ACCEPTANCE_LINES: list[str] = []


@pytest.fixture(scope="session")
def ring():
    cache = {}

    def get(text):
        if text not in cache:
            cache[text] = materialize(text)
        return cache[text]
    return get


@pytest.fixture
def acceptance_line():
    def record(criterion: str, ok: bool, detail: str = ""):
        ACCEPTANCE_LINES.append(f"{'PASS' if ok else 'FAIL'}  {criterion}" + (f"  ({detail})" if detail else ""))
    return record


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
