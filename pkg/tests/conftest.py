import pytest
from fractions import Fraction

from hyperbessel import derive_params, riney_coeffs, stirling_matching_coeffs


@pytest.fixture(scope="session")
def table1_params():
    return derive_params(3, (Fraction(2, 3), Fraction(5, 6)), precision=50)


@pytest.fixture(scope="session")
def table1_stirling(table1_params):
    return stirling_matching_coeffs(table1_params, 26)


@pytest.fixture(scope="session")
def table1_riney(table1_params):
    return riney_coeffs(table1_params, 26)
