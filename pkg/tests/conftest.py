from __future__ import annotations

import pytest

from feecsphere.notation import parse_form


def form(text: str, n: int = 2):
    return parse_form(text, n)


def poly(text: str, n: int = 2):
    f = parse_form(text, n)
    assert f.degree == 0
    return f.coefficient(())


@pytest.fixture
def F():
    return form


@pytest.fixture
def Pn():
    return poly


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
