import sys
from pathlib import Path

import pytest

HERE = Path(__file__).parent
FIXTURES = HERE / "fixtures"
sys.path.insert(0, str(HERE))
sys.path.insert(0, str(FIXTURES))

from wsregress.suite import parse_suite  # noqa: E402
from wsregress.wsdl import load_wsdl  # noqa: E402


@pytest.fixture(scope="session")
def fx() -> Path:
    return FIXTURES


@pytest.fixture(scope="session")
def wsdl():
    cache = {}

    def get(name):
        if name not in cache:
            cache[name] = load_wsdl(FIXTURES / "wsdl" / f"{name}.wsdl")
        return cache[name]

    return get


@pytest.fixture(scope="session")
def suite():
    def get(name):
        return parse_suite((FIXTURES / "suites" / name).read_bytes())

    return get
