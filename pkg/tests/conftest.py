import pytest

_ACCEPTANCE = {}


@pytest.fixture
def criterion(request):
    """Record the outcome of one acceptance criterion for the summary table."""
    name = request.node.name
    _ACCEPTANCE[name] = ("FAIL", request.function.__doc__.strip().splitlines()[0], "")

    def record(detail):
        _ACCEPTANCE[name] = ("PASS", _ACCEPTANCE[name][1], detail)

    return record


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for status, title, detail in _ACCEPTANCE.values():
        line = f"[{status}] {title}"
        terminalreporter.write_line(f"{line}  {detail}" if detail else line)
