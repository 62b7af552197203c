import functools

import pytest

ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@functools.lru_cache(maxsize=None)
def basic(n: int = 2):
    from quasiline.bosonization import basic_bosonization

    return basic_bosonization(n)


@pytest.fixture(scope="session")
def basic2():
    return basic(2)


@pytest.fixture(scope="session")
def basic3():
    return basic(3)


@pytest.fixture(scope="session")
def iterated2():
    from quasiline.bosonization import build_iterated_example

    return build_iterated_example(2, verify=False)
