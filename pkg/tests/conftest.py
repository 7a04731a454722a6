from __future__ import annotations

import re
from functools import cache

import pytest
from hypothesis import HealthCheck, settings

from terminvar.actions import action_group
from terminvar.groups import ActionGroup, parse_spec

settings.register_profile(
    "default", deadline=None, suppress_health_check=[HealthCheck.too_slow], derandomize=True
)
settings.load_profile("default")


@cache
def catalog(ident: str) -> ActionGroup:
    return action_group(ident)


@cache
def linear(model: str, *symbols: str, n: int = 2) -> ActionGroup:
    return parse_spec({"model": model, "n": n, "generators": [{"m": s} for s in symbols]})


@pytest.fixture(scope="session")
def g216() -> ActionGroup:
    return catalog("k2/216,153")


# one summary line per acceptance criterion
_CRITERIA: dict[int, tuple[str, str]] = {}


def pytest_runtest_logreport(report):
    m = re.search(r"test_acceptance\.py::test_criterion_(\d+)", report.nodeid)
    if not m:
        return
    if report.when == "call" or report.outcome != "passed":
        detail = dict(report.user_properties).get("detail", "")
        status = "PASS" if report.outcome == "passed" else report.outcome.upper()
        if status == "FAILED":
            status = "FAIL"
        _CRITERIA[int(m.group(1))] = (status, detail)


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.write_sep("=", "acceptance criteria")
    for k in sorted(_CRITERIA):
        status, detail = _CRITERIA[k]
        terminalreporter.write_line(f"criterion {k}: {status}" + (f"  ({detail})" if detail else ""))
