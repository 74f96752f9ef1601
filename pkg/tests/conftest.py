from __future__ import annotations

import pytest

from duval.ade import AdeType

_acceptance: dict[str, str] = {}


def all_ade_types(max_a: int = 8, max_d: int = 8) -> list[AdeType]:
    return (
        [AdeType("A", n) for n in range(1, max_a + 1)]
        + [AdeType("D", n) for n in range(4, max_d + 1)]
        + [AdeType("E", n) for n in (6, 7, 8)]
    )


@pytest.fixture
def ade_types() -> list[AdeType]:
    return all_ade_types()


def pytest_runtest_logreport(report):
    if "test_acceptance.py" not in report.nodeid:
        return
    name = report.nodeid.split("::")[-1]
    if report.when == "call" or report.failed:
        if _acceptance.get(name) != "FAIL":
            _acceptance[name] = "PASS" if report.passed else "FAIL"


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for name, verdict in _acceptance.items():
        terminalreporter.write_line(f"{verdict}  {name}")
