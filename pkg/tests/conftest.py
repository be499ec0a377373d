import pytest

from reproaxb.ratmat import Mat

_criteria: dict[int, tuple[str, list[str]]] = {}


@pytest.fixture
def worked():
    """A = [1 2], B = [1 3]^T, C = [12] and the particular solution X0."""
    return (
        Mat([[1, 2]]),
        Mat([[1], [3]]),
        Mat([[12]]),
        Mat([[84, -24], [-36, 12]]),
    )


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None or report.when != "call" and not report.failed:
        return
    number, title = marker.args
    entry = _criteria.setdefault(number, (title, []))
    entry[1].append(report.outcome)


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_criteria):
        title, outcomes = _criteria[number]
        status = "PASS" if outcomes and all(o == "passed" for o in outcomes) else "FAIL"
        terminalreporter.write_line(f"[{status}] criterion {number}: {title}")
