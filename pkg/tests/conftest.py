import pytest

_CRITERIA = []


@pytest.fixture
def criterion(request):
    """Record one acceptance line: ``criterion(passed, detail)``."""

    def record(passed, detail=""):
        _CRITERIA.append((request.node.name, bool(passed), detail))
        return passed

    return record


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for name, passed, detail in _CRITERIA:
        terminalreporter.write_line(f"{'PASS' if passed else 'FAIL'}  {name}  {detail}")
