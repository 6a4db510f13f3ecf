import pytest

from gcgraph.aut import automorphisms, s6_automorphisms
from gcgraph.group import dihedral, symmetric


@pytest.fixture(scope="session")
def S3():
    return symmetric(3)


@pytest.fixture(scope="session")
def S4():
    return symmetric(4)


@pytest.fixture(scope="session")
def S5():
    return symmetric(5)


@pytest.fixture(scope="session")
def S6():
    return symmetric(6)


@pytest.fixture(scope="session")
def D8():
    return dihedral(8)


@pytest.fixture(scope="session")
def aut_S4(S4):
    return automorphisms(S4)


@pytest.fixture(scope="session")
def aut_S6(S6):
    return s6_automorphisms(S6)
