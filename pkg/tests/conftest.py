import pytest

from pbwt import Alphabet

ACCEPTANCE_LOG = []


def pstr(text, statics="$", params="xyz"):
    """Single-character p-string helper: ``pstr("xAy$", "$A", "xy")``."""
    return Alphabet(tuple(statics), tuple(params)).pstring(text)


@pytest.fixture
def table1():
    return pstr("xyxzzxxyx$")


@pytest.fixture
def report():
    def _report(criterion, ok, detail=""):
        line = f"criterion {criterion}: {'PASS' if ok else 'FAIL'}  {detail}".rstrip()
        ACCEPTANCE_LOG.append(line)
        print(line)
        return ok

    return _report


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LOG:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LOG:
            terminalreporter.write_line(line)
