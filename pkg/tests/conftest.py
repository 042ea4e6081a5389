import numpy as np
import pytest

from models import DensityMatrix, PureState
from quantum.state_core import state_from_basis_terms


def ghz(n: int) -> PureState:
    return state_from_basis_terms(n, [("0" * n, 1), ("1" * n, 1)])


def w_state(n: int) -> PureState:
    return state_from_basis_terms(n, [("0" * p + "1" + "0" * (n - 1 - p), 1) for p in range(n)])


def product_zero(n: int) -> PureState:
    return state_from_basis_terms(n, [("0" * n, 1)])


def random_mixed_two_qubit(rng: np.random.Generator, rank: int) -> DensityMatrix:
    g = rng.standard_normal((4, rank)) + 1j * rng.standard_normal((4, rank))
    rho = g @ g.conj().T
    rho = (rho + rho.conj().T) / 2
    return DensityMatrix(qubit_labels=(0, 1), matrix=rho / np.trace(rho).real)


@pytest.fixture
def saturating() -> PureState:
    return state_from_basis_terms(4, [("0000", 1), ("1001", 1)])


@pytest.fixture
def phi() -> PureState:
    return state_from_basis_terms(4, [("0000", 1), ("0010", 1), ("1010", 1)])


@pytest.fixture
def bell() -> PureState:
    return state_from_basis_terms(2, [("00", 1), ("11", 1)])


@pytest.fixture
def example1() -> PureState:
    return state_from_basis_terms(6, [("000000", 1), ("101000", 1)])


@pytest.fixture
def example2() -> PureState:
    return state_from_basis_terms(6, [("000000", 1), ("001100", 1)])
