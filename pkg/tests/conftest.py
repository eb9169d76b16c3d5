from fractions import Fraction

import pytest

from ghckit import rootsys


def V(*coords):
    return tuple(Fraction(c) for c in coords)


def neg(v):
    return tuple(-c for c in v)


@pytest.fixture(scope="session")
def a1():
    return rootsys.build("A", 1)


@pytest.fixture(scope="session")
def a2():
    return rootsys.build("A", 2)


@pytest.fixture(scope="session")
def a3():
    return rootsys.build("A", 3)


@pytest.fixture(scope="session")
def c2():
    return rootsys.build("C", 2)
