import pytest

from scgs.samples import example_grammar
from scgs.transform import reduce_to_degree2, transform_csg_to_scgs


@pytest.fixture(scope="session")
def example():
    return example_grammar()


@pytest.fixture(scope="session")
def example_system(example):
    return transform_csg_to_scgs(example)


@pytest.fixture(scope="session")
def example_system_d2(example_system):
    return reduce_to_degree2(example_system)


def words(*items):
    """Words written as strings of one-character terminals."""
    return frozenset(tuple(w) for w in items)


def pytest_terminal_summary(terminalreporter):
    import sys

    module = sys.modules.get("test_acceptance") or sys.modules.get("tests.test_acceptance")
    if module is None or not module.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(module.RESULTS):
        terminalreporter.write_line(module.RESULTS[n])
