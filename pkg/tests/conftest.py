import pytest

from sostar.bases import (basis_sostar4_A, basis_sostar6_complex,
                          basis_sostar6_quat, basis_su2_sl2_S, basis_su31)
from sostar.clifford import spin26_generators
from sostar.triality import transformed_spin_reps


@pytest.fixture(scope="session")
def spin():
    return spin26_generators()


@pytest.fixture(scope="session")
def spin_reps(spin):
    return transformed_spin_reps(spin)


@pytest.fixture(scope="session")
def a_basis():
    return basis_sostar4_A()


@pytest.fixture(scope="session")
def s_basis():
    return basis_su2_sl2_S()


@pytest.fixture(scope="session")
def su31():
    return basis_su31()


@pytest.fixture(scope="session")
def so6_quat():
    return basis_sostar6_quat()


@pytest.fixture(scope="session")
def so6_complex():
    return basis_sostar6_complex()
