import sys
from pathlib import Path

import pytest

# make the oracle helpers importable as a plain module
sys.path.insert(0, str(Path(__file__).parent))

_results = pytest.StashKey[dict]()


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion covered by the test")
    config.stash[_results] = {}


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None or report.when != "call":
        return
    number, title = marker.args
    if report.passed and not hasattr(report, "wasxfail"):
        status = "PASS"
    else:
        status = "FAIL"
    # several tests may cover one criterion; any failure fails the criterion
    prev = item.config.stash[_results].get(number)
    reason = getattr(report, "wasxfail", "")
    if prev and prev[0] == "FAIL":
        status, reason = "FAIL", prev[2] or reason
    item.config.stash[_results][number] = (status, title, reason)


def pytest_terminal_summary(terminalreporter, config):
    results = config.stash.get(_results, {})
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(results):
        status, title, reason = results[number]
        line = f"criterion {number}: {status}  {title}"
        if reason:
            line += f"  [{reason}]"
        terminalreporter.write_line(line)
