import numpy as np
import pytest

from fdalg import catalog


@pytest.fixture
def rng():
    return np.random.default_rng(20261016)


ALGEBRAS = catalog.algebras()
SEMIGROUPS = catalog.semigroups()


def algebra_params():
    return pytest.mark.parametrize("name", list(ALGEBRAS))


def semigroup_params():
    return pytest.mark.parametrize("name", list(SEMIGROUPS))


def pytest_terminal_summary(terminalreporter):
    import sys

    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(mod.RESULTS):
        terminalreporter.write_line(mod.RESULTS[k])
