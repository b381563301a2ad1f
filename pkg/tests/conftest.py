import pytest

_details = {}
_outcomes = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(n, title): acceptance criterion number n")


@pytest.fixture
def record(request):
    """record(detail) attaches a one-line summary to the current criterion."""
    marker = request.node.get_closest_marker("criterion")

    def _record(detail):
        _details[marker.args[0]] = detail
    return _record


def pytest_runtest_makereport(item, call):
    marker = item.get_closest_marker("criterion")
    if marker is None or call.when != "call":
        return
    n, title = marker.args
    prev = _outcomes.get(n, (title, True))
    _outcomes[n] = (title, prev[1] and call.excinfo is None)


def pytest_terminal_summary(terminalreporter):
    if not _outcomes:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(_outcomes):
        title, ok = _outcomes[n]
        detail = _details.get(n, "")
        line = f"criterion {n} [{title}]: {'PASS' if ok else 'FAIL'}"
        terminalreporter.write_line(line + (f" ({detail})" if detail else ""))
