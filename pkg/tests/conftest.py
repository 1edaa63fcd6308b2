import pytest

from deckcensus.census import enumerate_graphs


@pytest.fixture(scope="session")
def family5():
    return enumerate_graphs(5)


@pytest.fixture(scope="session")
def family6():
    return enumerate_graphs(6)


@pytest.fixture(scope="session")
def family7():
    return enumerate_graphs(7)


@pytest.fixture(scope="session")
def family8():
    return enumerate_graphs(8)


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    import sys

    mod = sys.modules.get("test_acceptance") or sys.modules.get(
        "tests.test_acceptance"
    )
    if mod is None or not getattr(mod, "RESULTS", None):
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(mod.CRITERIA):
        status = mod.RESULTS.get(num, "FAIL")
        terminalreporter.write_line(f"{status} criterion {num}: {mod.CRITERIA[num]}")
