import sys
from collections import defaultdict
from pathlib import Path

import pytest
from hypothesis import settings

sys.path.insert(0, str(Path(__file__).parent))

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")

_ACCEPTANCE = defaultdict(list)
_DESCRIPTIONS = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "acceptance(number, description): exit criterion")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    marker = item.get_closest_marker("acceptance")
    if marker is None or rep.when != "call":
        return
    number, description = marker.args
    _DESCRIPTIONS[number] = description
    _ACCEPTANCE[number].append((item.name, rep.passed))


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    tr = terminalreporter
    tr.section("acceptance criteria")
    for number in sorted(_ACCEPTANCE):
        results = _ACCEPTANCE[number]
        ok = all(passed for _, passed in results)
        tr.write_line(f"criterion {number}: {'PASS' if ok else 'FAIL'}  {_DESCRIPTIONS[number]}"
                      f"  ({sum(p for _, p in results)}/{len(results)} checks)")
        for name, passed in results:
            if not passed:
                tr.write_line(f"    failed: {name}")
