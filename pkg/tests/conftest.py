from __future__ import annotations

import pytest

ACCEPTANCE: dict[int, tuple[str, str]] = {}


@pytest.fixture
def criterion(request):
    """Record a PASS/FAIL line for an acceptance criterion; usage:
    ``criterion(3, "description")`` at the start of the test."""
    slot = {}

    def register(number: int, title: str):
        slot["n"] = number
        slot["title"] = title

    yield register
    if "n" in slot:
        rep = getattr(request.node, "rep_call", None)
        status = "PASS" if rep is not None and rep.passed else "FAIL"
        ACCEPTANCE[slot["n"]] = (status, slot["title"])


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    if rep.when == "call":
        item.rep_call = rep


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(ACCEPTANCE):
        status, title = ACCEPTANCE[n]
        terminalreporter.write_line(f"criterion {n:2d}: {status}  {title}")
