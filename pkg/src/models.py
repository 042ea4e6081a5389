from pathlib import Path
from typing import Literal, Optional

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from tolerances import (
    ENSEMBLE_PROB_TOL,
    EQUALITY_TOL,
    HERMITIAN_TOL,
    MAX_QUBITS,
    NORM_TOL,
    PSD_TOL,
    SATISFIED_TOL,
    TRACE_TOL,
)


def _frozen_array(value, ndim: int) -> np.ndarray:
    arr = np.array(value, dtype=np.complex128)
    if arr.ndim != ndim:
        raise ValueError(f"expected a {ndim}-dimensional array, got shape {arr.shape}")
    arr.flags.writeable = False
    return arr


# Models for states and subsystems
class PureState(BaseModel):
    """Normalized amplitude vector; qubit 0 is the most significant bit of the index."""

    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    n_qubits: int = Field(ge=1, le=MAX_QUBITS, description="Number of qubits")
    amplitudes: np.ndarray = Field(description="Complex amplitudes, length 2**n_qubits")

    @field_validator("amplitudes", mode="before")
    @classmethod
    def _as_vector(cls, value):
        return _frozen_array(value, ndim=1)

    @model_validator(mode="after")
    def _check_norm(self):
        if self.amplitudes.shape[0] != 2**self.n_qubits:
            raise ValueError(
                f"{self.n_qubits} qubits need {2**self.n_qubits} amplitudes, got {self.amplitudes.shape[0]}"
            )
        norm = float(np.vdot(self.amplitudes, self.amplitudes).real)
        if abs(norm - 1.0) > NORM_TOL:
            raise ValueError(f"squared norm {norm!r} deviates from 1")
        return self

    def tensor(self) -> np.ndarray:
        return self.amplitudes.reshape((2,) * self.n_qubits)


class DensityMatrix(BaseModel):
    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    qubit_labels: tuple[int, ...] = Field(description="Qubit indices in matrix order")
    matrix: np.ndarray = Field(description="Hermitian PSD trace-one matrix of dimension 2**len(qubit_labels)")

    @field_validator("matrix", mode="before")
    @classmethod
    def _as_matrix(cls, value):
        return _frozen_array(value, ndim=2)

    @model_validator(mode="after")
    def _check_invariants(self):
        k = len(self.qubit_labels)
        if k == 0 or len(set(self.qubit_labels)) != k:
            raise ValueError(f"qubit labels must be non-empty and distinct: {self.qubit_labels}")
        if self.matrix.shape != (2**k, 2**k):
            raise ValueError(f"matrix shape {self.matrix.shape} does not match {k} qubits")
        deviation = np.max(np.abs(self.matrix - self.matrix.conj().T))
        if deviation > HERMITIAN_TOL:
            raise ValueError(f"matrix is not Hermitian (max deviation {deviation:.3e})")
        trace = np.trace(self.matrix)
        if abs(trace - 1.0) > TRACE_TOL:
            raise ValueError(f"trace {trace!r} deviates from 1")
        lowest = np.linalg.eigvalsh(self.matrix)[0]
        if lowest < -PSD_TOL:
            raise ValueError(f"matrix is not positive semidefinite (eigenvalue {lowest:.3e})")
        return self

    @property
    def n_qubits(self) -> int:
        return len(self.qubit_labels)

    @classmethod
    def from_pure(cls, state: PureState) -> "DensityMatrix":
        psi = state.amplitudes
        return cls(qubit_labels=tuple(range(state.n_qubits)), matrix=np.outer(psi, psi.conj()))


class Partition(BaseModel):
    model_config = ConfigDict(frozen=True)

    left: frozenset[int]
    right: frozenset[int]

    @model_validator(mode="after")
    def _check_sides(self):
        if not self.left or not self.right:
            raise ValueError("both sides of a partition must be non-empty")
        if self.left & self.right:
            raise ValueError(f"partition sides overlap on {sorted(self.left & self.right)}")
        if min(self.left | self.right) < 0:
            raise ValueError("qubit indices must be non-negative")
        return self

    def covers(self, n_qubits: int) -> bool:
        return self.left | self.right == frozenset(range(n_qubits))

    def swapped(self) -> "Partition":
        return Partition(left=self.right, right=self.left)


class EnsembleDecomposition(BaseModel):
    """Pure-state ensemble {p_i, |psi_i>} realizing a mixed state."""

    members: list[tuple[float, PureState]] = Field(min_length=1)

    @model_validator(mode="after")
    def _check_members(self):
        sizes = {state.n_qubits for _, state in self.members}
        if len(sizes) != 1:
            raise ValueError(f"ensemble members have mixed qubit counts {sorted(sizes)}")
        probabilities = np.array([p for p, _ in self.members])
        if np.any(probabilities <= 0.0) or np.any(probabilities > 1.0 + ENSEMBLE_PROB_TOL):
            raise ValueError("ensemble probabilities must lie in (0, 1]")
        if abs(probabilities.sum() - 1.0) > ENSEMBLE_PROB_TOL:
            raise ValueError(f"ensemble probabilities sum to {probabilities.sum()!r}")
        return self

    def density_matrix(self) -> np.ndarray:
        return sum(p * np.outer(s.amplitudes, s.amplitudes.conj()) for p, s in self.members)


class ConcurrenceValue(BaseModel):
    model_config = ConfigDict(frozen=True)

    value: float = Field(ge=0.0)
    kind: Literal["pure-bipartite", "mixed-two-qubit", "assistance"]

    @model_validator(mode="after")
    def _check_range(self):
        ceiling = np.sqrt(2.0) if self.kind == "pure-bipartite" else 1.0
        if self.value > ceiling + EQUALITY_TOL:
            raise ValueError(f"{self.kind} concurrence {self.value!r} exceeds {ceiling}")
        return self


# Models for bound evaluation
class TriangleVectors(BaseModel):
    model_config = ConfigDict(frozen=True)

    a_vec: tuple[float, float] = Field(description="Planar vector of length C^2(A|rest)")
    b_vec: tuple[float, float] = Field(description="Planar vector of length C^2(B|rest)")
    c_vec: tuple[float, float] = Field(description="Planar vector of length C^2(AB|rest), equal to a_vec + b_vec")


class InequalityEntry(BaseModel):
    """One inequality `lhs <= rhs`; slack = rhs - lhs."""

    inequality: str
    lhs: float
    rhs: float
    slack: float
    satisfied: bool

    @classmethod
    def compare(cls, inequality: str, lhs: float, rhs: float, tolerance: float = SATISFIED_TOL) -> "InequalityEntry":
        slack = float(rhs - lhs)
        return cls(inequality=inequality, lhs=float(lhs), rhs=float(rhs), slack=slack, satisfied=slack >= -tolerance)


class BoundReport(BaseModel):
    state_id: str
    n_qubits: int
    entries: list[InequalityEntry] = Field(default_factory=list)
    components: dict[str, float] = Field(
        default_factory=dict, description="Every C^2 / Ca^2 value referenced by an entry"
    )

    def entry(self, name: str) -> InequalityEntry:
        for item in self.entries:
            if item.inequality == name:
                return item
        raise KeyError(name)

    def names(self) -> list[str]:
        return [item.inequality for item in self.entries]

    @property
    def all_satisfied(self) -> bool:
        return all(item.satisfied for item in self.entries)

    def violations(self) -> list[InequalityEntry]:
        return [item for item in self.entries if not item.satisfied]


# Models for files and the command-line harness
class StateDocument(BaseModel):
    """On-disk form of a PureState: amplitudes as [re, im] pairs, big-endian index order."""

    n_qubits: int = Field(ge=1, le=MAX_QUBITS)
    amplitudes: list[tuple[float, float]]


class RunConfig(BaseModel):
    command: Literal["check", "fuzz", "reproduce-paper", "wclass-scan"]
    qubits: Optional[int] = Field(default=None, ge=3, le=MAX_QUBITS)
    count: int = Field(default=1, ge=1)
    seed: int = Field(default=0, ge=0, lt=2**64)
    tolerance: float = Field(default=SATISFIED_TOL, gt=0.0)
    out: Optional[Path] = None
    format: Literal["json", "csv"] = "json"
    state_file: Optional[Path] = None

    @model_validator(mode="after")
    def _check_command_inputs(self):
        if self.command == "check" and self.state_file is None:
            raise ValueError("check needs a state file")
        if self.command in ("fuzz", "wclass-scan") and self.qubits is None:
            raise ValueError(f"{self.command} needs a qubit count")
        return self


class ExpectedValue(BaseModel):
    quantity: str
    expected: float
    tolerance: float = Field(default=EQUALITY_TOL, gt=0.0)
    provenance: str = Field(min_length=1, description="Which worked example and statement the value comes from")


class PaperCase(BaseModel):
    case_id: str
    n_qubits: int = Field(ge=1, le=MAX_QUBITS)
    basis_terms: Optional[list[tuple[str, complex]]] = None
    w_coefficients: Optional[list[complex]] = None
    expected: list[ExpectedValue] = Field(min_length=1)

    @model_validator(mode="after")
    def _check_constructor(self):
        if (self.basis_terms is None) == (self.w_coefficients is None):
            raise ValueError(f"case {self.case_id} needs exactly one of basis_terms or w_coefficients")
        return self


class CaseOutcome(BaseModel):
    case_id: str
    quantity: str
    expected: float
    computed: float
    tolerance: float
    provenance: str
    matched: bool


class FuzzSummary(BaseModel):
    n_qubits: int
    count: int
    seed: int
    tolerance: float
    min_slack: dict[str, float]
    violations: int
    violation_files: list[str] = Field(default_factory=list)


class WClassRow(BaseModel):
    sample: int
    i: int
    j: int
    coefficients: list[complex]
    lower: float
    mid: float
    upper: float

    @property
    def lower_gap(self) -> float:
        return self.mid - self.lower

    @property
    def upper_gap(self) -> float:
        return self.upper - self.mid


class ReproduceReport(BaseModel):
    outcomes: list[CaseOutcome]

    @property
    def all_matched(self) -> bool:
        return all(outcome.matched for outcome in self.outcomes)
