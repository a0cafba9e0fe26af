import os

import numpy as np
import pytest

from hopfcyc import library
from hopfcyc.algebra import exactlin as el
from hopfcyc.algebra.hopf_core import dual_hopf, group_algebra, trivial_hopf

FIXTURES = os.path.join(os.path.dirname(__file__), "fixtures")


@pytest.fixture
def rng():
    return np.random.default_rng(0)


@pytest.fixture(scope="session")
def QQ_field():
    return el.rational()


@pytest.fixture(scope="session")
def F2():
    return el.prime(2)


@pytest.fixture(scope="session")
def kc2(QQ_field):
    return group_algebra(2, QQ_field)


@pytest.fixture(scope="session")
def kc3(QQ_field):
    return group_algebra(3, QQ_field)


@pytest.fixture(scope="session")
def f2c2(F2):
    return group_algebra(2, F2, name="f2c2")


@pytest.fixture(scope="session")
def f2c2_dual(f2c2):
    return dual_hopf(f2c2)


@pytest.fixture(scope="session")
def ground(QQ_field):
    return trivial_hopf(QQ_field)


@pytest.fixture(scope="session")
def kc2_defs():
    return library.load_bundled("kc2")


@pytest.fixture(scope="session")
def f2c2_defs():
    return library.load_bundled("f2c2")


@pytest.fixture(scope="session")
def sweedler_defs():
    return library.load_bundled("sweedler")


@pytest.fixture(scope="session")
def sweedler(sweedler_defs):
    return sweedler_defs.get("sweedler", "hopf")


@pytest.fixture(scope="session")
def bundled_hopf_algebras(kc2, kc3, f2c2, f2c2_dual, sweedler):
    return {
        "kc2": kc2,
        "kc3": kc3,
        "f2c2": f2c2,
        "f2c2_dual": f2c2_dual,
        "kc2_dual": dual_hopf(kc2),
        "sweedler": sweedler,
    }


@pytest.fixture
def fixture_path():
    def path(name: str) -> str:
        return os.path.join(FIXTURES, name)

    return path
