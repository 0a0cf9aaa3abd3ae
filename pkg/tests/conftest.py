import pytest

from pinchukmaps.fieldext import derive_R
from pinchukmaps.pinchuk import build_core


@pytest.fixture(scope="session")
def core():
    return build_core()


@pytest.fixture(scope="session")
def R():
    return derive_R()


def pytest_terminal_summary(terminalreporter):
    mod = __import__("sys").modules.get("test_acceptance") or __import__("sys").modules.get("tests.test_acceptance")
    if mod is None or not mod.VERDICTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in mod.verdict_lines():
        terminalreporter.write_line(line)
