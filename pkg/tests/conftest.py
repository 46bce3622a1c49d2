import pytest

ACCEPTANCE_RESULTS: list[tuple[str, bool]] = []


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for name, ok in ACCEPTANCE_RESULTS:
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {name}")


@pytest.fixture
def record_criterion():
    def _record(name: str, ok: bool) -> None:
        ACCEPTANCE_RESULTS.append((name, ok))
        print(f"{'PASS' if ok else 'FAIL'}  {name}")
        assert ok, name

    return _record
