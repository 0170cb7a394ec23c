import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from ru4.gray import GRAY_BLOCKS  # noqa: E402

_RESULTS = {}


def pytest_sessionstart(session):
    # the Gray map must hit all 16 four-bit words exactly once
    if len(set(GRAY_BLOCKS)) != 16:
        raise pytest.UsageError("Gray map R -> F2^4 is not a bijection")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("acceptance")
    if marker is None:
        return
    number, title = marker.args
    failed = report.failed or (report.when == "call" and report.skipped)
    if report.when == "call" or failed:
        prev = _RESULTS.get(number, (title, True))
        _RESULTS[number] = (title, prev[1] and not failed)


def pytest_terminal_summary(terminalreporter):
    if not _RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_RESULTS):
        title, ok = _RESULTS[number]
        terminalreporter.write_line(f"criterion {number:>2}: {'PASS' if ok else 'FAIL'}  {title}")
