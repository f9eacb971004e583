import os
import sys

import pytest

sys.path.insert(0, os.path.dirname(__file__))

from cellua.alpha import AlphaConstruction  # noqa: E402
from cellua.field import GF  # noqa: E402
from cellua.ingest import builtin  # noqa: E402

DATA = os.path.join(os.path.dirname(os.path.dirname(__file__)), "data")


@pytest.fixture(scope="session")
def path_con():
    alg, ad = builtin("path-example")
    return AlphaConstruction(alg, ad)


@pytest.fixture(scope="session")
def path_con_f23():
    alg, ad = builtin("path-example", GF(23))
    return AlphaConstruction(alg, ad)


@pytest.fixture(scope="session")
def matrix_con():
    alg, ad = builtin("matrix:n=4,b=2")
    return AlphaConstruction(alg, ad)


@pytest.fixture(scope="session")
def constant_con():
    alg, ad = builtin("path-example:alpha=constant")
    return AlphaConstruction(alg, ad)


@pytest.fixture(scope="session")
def data_dir():
    return DATA


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod is None or not getattr(mod, "RESULTS", None):
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(mod.RESULTS):
        terminalreporter.write_line(mod.RESULTS[n])
