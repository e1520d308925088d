import pytest

from projtrees import Digraph, parse_arc_list

EXAMPLE_ARC_LIST = "n 6\n2 3\n2 6\n3 6\n4 1\n4 2\n5 2\n5 4\n"

EXAMPLE_MATRIX = """\
0 0 0 0 0 0
0 0 1 0 0 1
0 0 0 0 0 1
1 1 0 0 0 0
0 1 0 1 0 0
0 0 0 0 0 0
"""


@pytest.fixture
def example_graph():
    return parse_arc_list(EXAMPLE_ARC_LIST)


@pytest.fixture
def path_graph():
    return Digraph(3, ((1, 2), (2, 3)))


@pytest.fixture
def four_graph():
    return Digraph(4, ((1, 2), (1, 3), (2, 3), (2, 4), (3, 4)))


_acceptance = {}


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("acceptance")
    if marker is None:
        return
    if report.when == "call" or (report.when == "setup" and report.failed):
        _acceptance[marker.args[0]] = (marker.args[1], report.outcome, report.duration)


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_acceptance):
        title, outcome, duration = _acceptance[number]
        verdict = "PASS" if outcome == "passed" else "FAIL"
        terminalreporter.write_line(f"[{verdict}] criterion {number}: {title} ({duration:.1f}s)")
