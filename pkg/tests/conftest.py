import pytest

from collabdist import build_graph


_acceptance_results = {}


@pytest.fixture
def illustration():
    """A wrote 2 papers with B, B wrote 4 with C."""
    return build_graph([("A", "B", 2), ("B", "C", 4)])


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("acceptance")
    if marker is None:
        return
    number, title = marker.args
    if report.when == "call" or (report.when == "setup" and report.outcome != "passed"):
        _acceptance_results[number] = (title, report.outcome, report.duration)


def pytest_terminal_summary(terminalreporter):
    if not _acceptance_results:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_acceptance_results):
        title, outcome, duration = _acceptance_results[number]
        status = "PASS" if outcome == "passed" else "FAIL"
        terminalreporter.write_line(f"AC{number} {status}  {title}  ({duration:.2f}s)")
