import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from ratgauge.simplicial import BUILTINS, builtin  # noqa: E402

CORPUS = tuple(BUILTINS)


@pytest.fixture(scope="session")
def corpus():
    return {name: builtin(name) for name in CORPUS}


_acceptance = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "acceptance(number, title): exit criterion")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("acceptance")
    if marker is None:
        return
    number, title = marker.args
    if report.when == "call" or (report.when == "setup" and not report.passed):
        _acceptance[number] = (title, report.passed)


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_acceptance):
        title, ok = _acceptance[number]
        terminalreporter.write_line(f"[{'PASS' if ok else 'FAIL'}] {number}. {title}")
