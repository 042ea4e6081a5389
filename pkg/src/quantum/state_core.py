"""Dense multi-qubit states: construction, reduction, sampling and the state file format."""

import logging
import string
from collections.abc import Iterable, Sequence
from pathlib import Path

import numpy as np
from pydantic import ValidationError

from exceptions import InvalidPartitionError, InvalidStateError, OutputWriteError, QubitCountError, StateFileError
from models import DensityMatrix, PureState, StateDocument
from tolerances import FILE_NORM_TOL, MAX_QUBITS
from utils import format_float

logger = logging.getLogger(__name__)


def _check_qubit_count(n: int) -> None:
    if not 1 <= n <= MAX_QUBITS:
        raise QubitCountError(f"qubit count must be within 1..{MAX_QUBITS}, got {n}")


def state_from_basis_terms(n: int, terms: Sequence[tuple[str, complex]]) -> PureState:
    """Normalized superposition of computational basis kets given as bit strings.

    The leftmost character of each label is qubit 0 (role A).
    """
    _check_qubit_count(n)
    if not terms:
        raise InvalidStateError("at least one basis term is required")

    amplitudes = np.zeros(2**n, dtype=np.complex128)
    for label, coefficient in terms:
        if len(label) != n or set(label) - {"0", "1"}:
            raise InvalidStateError(f"basis label {label!r} is not a {n}-bit string")
        amplitudes[int(label, 2)] += coefficient

    norm = np.linalg.norm(amplitudes)
    if norm == 0.0:
        raise InvalidStateError("basis terms cancel to the zero vector")
    return PureState(n_qubits=n, amplitudes=amplitudes / norm)


def _trace_out(matrix: np.ndarray, n_labels: int, positions: list[int]) -> np.ndarray:
    rows = list(string.ascii_letters[:n_labels])
    cols = list(string.ascii_letters[n_labels : 2 * n_labels])
    for p in range(n_labels):
        if p not in positions:
            cols[p] = rows[p]
    kept = [rows[p] for p in positions] + [cols[p] for p in positions]
    subscripts = f"{''.join(rows)}{''.join(cols)}->{''.join(kept)}"
    reduced = np.einsum(subscripts, matrix.reshape((2,) * (2 * n_labels)))
    dim = 2 ** len(positions)
    return reduced.reshape(dim, dim)


def partial_trace(source: PureState | DensityMatrix, keep: Iterable[int]) -> DensityMatrix:
    """Reduced state on `keep`, labels in ascending order."""
    kept = sorted(set(keep))
    if not kept:
        raise InvalidPartitionError("cannot reduce to an empty set of qubits")

    labels = tuple(range(source.n_qubits)) if isinstance(source, PureState) else source.qubit_labels
    unknown = set(kept) - set(labels)
    if unknown:
        raise InvalidPartitionError(f"qubits {sorted(unknown)} are not part of {labels}")
    positions = [labels.index(q) for q in kept]

    if isinstance(source, PureState):
        psi = np.moveaxis(source.tensor(), positions, list(range(len(positions))))
        psi = psi.reshape(2 ** len(positions), -1)
        rho = psi @ psi.conj().T
    else:
        rho = _trace_out(source.matrix, len(labels), positions)

    rho = (rho + rho.conj().T) / 2
    return DensityMatrix(qubit_labels=tuple(kept), matrix=rho)


def linear_entropy(dm: DensityMatrix) -> float:
    """T(rho) = 1 - Tr(rho^2)."""
    purity = float(np.sum(np.abs(dm.matrix) ** 2))
    return max(0.0, 1.0 - purity)


def random_haar_state(n: int, seed: int) -> PureState:
    """Unitarily invariant random state: a normalized vector of standard complex Gaussians."""
    _check_qubit_count(n)
    if not 0 <= seed < 2**64:
        raise InvalidStateError(f"seed must be a 64-bit unsigned integer, got {seed}")
    rng = np.random.default_rng(seed)
    z = rng.standard_normal(2**n) + 1j * rng.standard_normal(2**n)
    return PureState(n_qubits=n, amplitudes=z / np.linalg.norm(z))


def random_unitary(dim: int, rng: np.random.Generator) -> np.ndarray:
    """Haar-random dim x dim unitary: QR of a complex Gaussian matrix with R's diagonal phases removed."""
    z = rng.standard_normal((dim, dim)) + 1j * rng.standard_normal((dim, dim))
    q, r = np.linalg.qr(z)
    diagonal = np.diag(r)
    return q * (diagonal / np.abs(diagonal))


def apply_local_unitaries(state: PureState, unitaries: Sequence[np.ndarray]) -> PureState:
    """Apply unitaries[q] to qubit q."""
    if len(unitaries) != state.n_qubits:
        raise InvalidStateError(f"need {state.n_qubits} single-qubit unitaries, got {len(unitaries)}")
    psi = state.tensor()
    for q, u in enumerate(unitaries):
        u = np.asarray(u, dtype=np.complex128)
        if u.shape != (2, 2) or not np.allclose(u @ u.conj().T, np.eye(2), atol=1e-10):
            raise InvalidStateError(f"operator for qubit {q} is not a 2x2 unitary")
        psi = np.moveaxis(np.tensordot(u, psi, axes=([1], [q])), 0, q)
    amplitudes = psi.reshape(-1)
    return PureState(n_qubits=state.n_qubits, amplitudes=amplitudes / np.linalg.norm(amplitudes))


def permute_qubits(state: PureState, order: Sequence[int]) -> PureState:
    """State whose qubit k is qubit order[k] of `state`; used to assign physical qubits to roles."""
    if sorted(order) != list(range(state.n_qubits)):
        raise InvalidPartitionError(f"{list(order)} is not a permutation of the {state.n_qubits} qubits")
    amplitudes = np.transpose(state.tensor(), list(order)).reshape(-1)
    return PureState(n_qubits=state.n_qubits, amplitudes=amplitudes)


# State file format
def serialize_state(state: PureState) -> str:
    pairs = ",\n".join(
        f"    [{format_float(a.real)}, {format_float(a.imag)}]" for a in state.amplitudes
    )
    return f'{{\n  "n_qubits": {state.n_qubits},\n  "amplitudes": [\n{pairs}\n  ]\n}}\n'


def parse_state(content: str) -> PureState:
    try:
        document = StateDocument.model_validate_json(content)
    except ValidationError as exc:
        raise StateFileError(f"malformed state document: {exc.error_count()} error(s)", code="E_MALFORMED") from exc

    expected = 2**document.n_qubits
    if len(document.amplitudes) != expected:
        raise StateFileError(
            f"{document.n_qubits} qubits need {expected} amplitudes, got {len(document.amplitudes)}",
            code="E_LENGTH",
        )
    amplitudes = np.array([complex(re, im) for re, im in document.amplitudes], dtype=np.complex128)
    norm = float(np.vdot(amplitudes, amplitudes).real)
    if not abs(norm - 1.0) <= FILE_NORM_TOL:
        raise StateFileError(f"squared norm {norm!r} deviates from 1 by more than {FILE_NORM_TOL}", code="E_NORM")
    return PureState(n_qubits=document.n_qubits, amplitudes=amplitudes / np.sqrt(norm))


def read_state_file(path: Path) -> PureState:
    logger.info("reading state file %s", path)
    try:
        content = Path(path).read_text(encoding="utf-8")
    except (OSError, UnicodeDecodeError) as exc:
        raise StateFileError(f"cannot read {path}: {exc}", code="E_MALFORMED") from exc
    return parse_state(content)


def write_state_file(path: Path, state: PureState) -> None:
    try:
        Path(path).parent.mkdir(parents=True, exist_ok=True)
        Path(path).write_text(serialize_state(state), encoding="utf-8", newline="\n")
    except OSError as exc:
        raise OutputWriteError(f"cannot write {path}: {exc}") from exc
    logger.info("wrote %d-qubit state to %s", state.n_qubits, path)
