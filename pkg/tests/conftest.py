import sys

import numpy as np
import pytest

from cesarospec import parse_alpha


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    # acceptance-gate lines are echoed after capture so they always show
    mod = sys.modules.get("test_acceptance") \
        or sys.modules.get("tests.test_acceptance")
    if mod is None:
        return
    for line in getattr(mod, "CRITERION_LINES", ()):
        terminalreporter.write_line(line)


@pytest.fixture(scope="session")
def linear():
    return parse_alpha("linear")


@pytest.fixture(scope="session")
def log2():
    return parse_alpha("log:beta=2")


@pytest.fixture(scope="session")
def tower():
    return parse_alpha("tower")


@pytest.fixture()
def rng():
    return np.random.default_rng(20260814)
