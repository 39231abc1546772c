import pytest

from lowerk import registry
from lowerk.coxeter import parse_diagram


@pytest.fixture(scope="session")
def diagrams():
    return {name: parse_diagram(name) for name in registry.names()}
