import pathlib

import hypothesis
import pytest

from parwb import workbench as wb

hypothesis.settings.register_profile("default", max_examples=60, deadline=None)
hypothesis.settings.register_profile("fast", max_examples=10, deadline=None)
hypothesis.settings.load_profile("default")

ROOT = pathlib.Path(__file__).resolve().parent.parent
FIXTURES = ROOT / "fixtures"
GOLDEN = pathlib.Path(__file__).resolve().parent / "golden"


@pytest.fixture(scope="session")
def registry():
    return wb.fixture_registry()


@pytest.fixture(scope="session")
def ex1():
    return wb.fixture_ex1()


@pytest.fixture(scope="session")
def ex2():
    return wb.fixture_ex2()


@pytest.fixture(scope="session")
def ex3():
    return wb.fixture_ex3()


@pytest.fixture(scope="session")
def ex3s():
    return wb.fixture_ex3_semigroup()


def pytest_terminal_summary(terminalreporter):
    import sys

    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in mod.summary_lines():
        terminalreporter.write_line(line)
