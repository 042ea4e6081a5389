"""Concurrence family: pure bipartite, two-qubit Wootters, assistance, three-tangle."""

from collections.abc import Iterable

import numpy as np

from exceptions import InvalidPartitionError, InvalidStateError, NotPositiveSemidefiniteError, QubitCountError
from models import ConcurrenceValue, DensityMatrix, Partition, PureState
from quantum.state_core import partial_trace
from tolerances import PSD_TOL, RANK_TOL

SIGMA_Y = np.array([[0, -1j], [1j, 0]], dtype=np.complex128)
SIGMA_YY = np.kron(SIGMA_Y, SIGMA_Y)


def schmidt_weights(state: PureState, side: Iterable[int]) -> np.ndarray:
    """Squared Schmidt coefficients of the state across side | rest."""
    side = sorted(side)
    psi = np.moveaxis(state.tensor(), side, list(range(len(side))))
    return np.linalg.svd(psi.reshape(2 ** len(side), -1), compute_uv=False) ** 2


def concurrence_pure_squared(state: PureState, partition: Partition) -> float:
    """C^2 = 2 T(rho_left) = 4 sum_{i<j} p_i p_j over the Schmidt weights p.

    The pairwise form has no cancellation, so product cuts come out at rounding level
    instead of the square root of it.
    """
    if not partition.covers(state.n_qubits):
        raise InvalidPartitionError(
            f"partition {sorted(partition.left)}|{sorted(partition.right)} does not cover {state.n_qubits} qubits"
        )
    weights = schmidt_weights(state, partition.left)
    return 4.0 * float(np.sum(np.triu(np.outer(weights, weights), k=1)))


def concurrence_pure(state: PureState, partition: Partition) -> float:
    return float(np.sqrt(concurrence_pure_squared(state, partition)))


def require_two_qubits(dm: DensityMatrix) -> None:
    if dm.n_qubits != 2:
        raise QubitCountError(f"two-qubit density matrix required, got {dm.n_qubits} qubits")


def spin_flip(dm: DensityMatrix) -> np.ndarray:
    """(sigma_y x sigma_y) rho* (sigma_y x sigma_y)."""
    require_two_qubits(dm)
    return SIGMA_YY @ dm.matrix.conj() @ SIGMA_YY


def square_root_factor(dm: DensityMatrix) -> np.ndarray:
    # columns sqrt(mu_j) |e_j>, so that W W^dagger = rho
    eigenvalues, eigenvectors = np.linalg.eigh(dm.matrix)
    if eigenvalues[0] < -PSD_TOL:
        raise NotPositiveSemidefiniteError(f"eigenvalue {eigenvalues[0]:.3e} below -{PSD_TOL}")
    eigenvalues = np.where(eigenvalues < RANK_TOL, 0.0, eigenvalues)
    return eigenvectors * np.sqrt(eigenvalues)


def wootters_lambdas(dm: DensityMatrix) -> np.ndarray:
    """Descending square roots of the eigenvalues of sqrt(rho) rho~ sqrt(rho).

    They are computed as the singular values of tau = W^T (sigma_y x sigma_y) W, whose
    Gram matrix tau^dagger tau has the same spectrum; no square root of a noisy
    eigenvalue is ever taken.
    """
    require_two_qubits(dm)
    w = square_root_factor(dm)
    return np.linalg.svd(w.T @ SIGMA_YY @ w, compute_uv=False)


def wootters_concurrence(dm: DensityMatrix) -> float:
    lam = wootters_lambdas(dm)
    return float(max(0.0, lam[0] - lam[1] - lam[2] - lam[3]))


def concurrence_of_assistance(dm: DensityMatrix) -> float:
    return float(np.sum(wootters_lambdas(dm)))


def pair_measures(state: PureState, p: int, q: int) -> tuple[ConcurrenceValue, ConcurrenceValue]:
    """Wootters concurrence and concurrence of assistance of the (p, q) marginal."""
    if p == q:
        raise InvalidPartitionError(f"pair needs two distinct qubits, got ({p}, {q})")
    lam = wootters_lambdas(partial_trace(state, {p, q}))
    mixed = ConcurrenceValue(value=max(0.0, float(lam[0] - lam[1] - lam[2] - lam[3])), kind="mixed-two-qubit")
    assistance = ConcurrenceValue(value=float(np.sum(lam)), kind="assistance")
    return mixed, assistance


def three_tangle(state: PureState, focus: int) -> float:
    """C^2(focus|rest) - C^2(rho_focus,o1) - C^2(rho_focus,o2) for a three-qubit pure state."""
    if state.n_qubits != 3:
        raise QubitCountError(f"three-tangle needs exactly 3 qubits, got {state.n_qubits}")
    if focus not in (0, 1, 2):
        raise InvalidStateError(f"focus qubit {focus} is not one of 0, 1, 2")
    others = [q for q in range(3) if q != focus]
    tangle = concurrence_pure_squared(state, Partition(left={focus}, right=set(others)))
    for other in others:
        tangle -= wootters_concurrence(partial_trace(state, {focus, other})) ** 2
    return tangle
