import os

import pytest

from wgideals.coxeter import TypeA
from wgideals.ideal import regular_ideal, specht_ideal
from wgideals.wgraph import build_wgraph


def pytest_collection_modifyitems(config, items):
    if os.environ.get("WGRAPH_SLOW"):
        return
    skip = pytest.mark.skip(reason="slow; set WGRAPH_SLOW=1 to run")
    for item in items:
        if "slow" in item.keywords:
            item.add_marker(skip)


@pytest.fixture(scope="session")
def specht331():
    return build_wgraph(specht_ideal((3, 3, 1)))


@pytest.fixture(scope="session")
def regular_s4():
    return build_wgraph(regular_ideal(TypeA(4)))


ACCEPTANCE: dict[str, tuple[str, str]] = {}


@pytest.fixture
def record():
    """Record one acceptance line: record("3", passed, detail); passed=None marks a skip."""

    def _record(key, passed, detail=""):
        ACCEPTANCE[key] = ("SKIP" if passed is None else "PASS" if passed else "FAIL", detail)

    return _record


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(ACCEPTANCE, key=lambda k: (int(k.rstrip("*")), k)):
        status, detail = ACCEPTANCE[key]
        terminalreporter.write_line(f"criterion {key}: {status}" + (f" - {detail}" if detail else ""))
