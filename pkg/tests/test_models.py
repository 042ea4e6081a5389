import numpy as np
import pytest
from pydantic import ValidationError

from models import (
    BoundReport,
    ConcurrenceValue,
    DensityMatrix,
    EnsembleDecomposition,
    ExpectedValue,
    InequalityEntry,
    PaperCase,
    Partition,
    PureState,
    RunConfig,
    WClassRow,
)
from utils import derive_seed, format_float, role_label, roles_label


class TestPureState:
    def test_amplitudes_are_read_only(self, bell):
        with pytest.raises(ValueError):
            bell.amplitudes[0] = 1

    def test_norm_enforced(self):
        with pytest.raises(ValidationError):
            PureState(n_qubits=1, amplitudes=[1, 1])

    def test_length_enforced(self):
        with pytest.raises(ValidationError):
            PureState(n_qubits=2, amplitudes=[1, 0])

    def test_qubit_range(self):
        with pytest.raises(ValidationError):
            PureState(n_qubits=13, amplitudes=np.eye(1, 2**13)[0])


class TestDensityMatrix:
    def test_not_hermitian(self):
        with pytest.raises(ValidationError):
            DensityMatrix(qubit_labels=(0,), matrix=[[0.5, 0.1], [0.0, 0.5]])

    def test_trace(self):
        with pytest.raises(ValidationError):
            DensityMatrix(qubit_labels=(0,), matrix=np.eye(2))

    def test_shape_matches_labels(self):
        with pytest.raises(ValidationError):
            DensityMatrix(qubit_labels=(0, 1), matrix=np.eye(2) / 2)

    def test_duplicate_labels(self):
        with pytest.raises(ValidationError):
            DensityMatrix(qubit_labels=(1, 1), matrix=np.eye(4) / 4)

    def test_small_negative_eigenvalue_tolerated(self):
        rho = DensityMatrix(qubit_labels=(0,), matrix=np.diag([1 + 1e-11, -1e-11]))
        assert rho.n_qubits == 1


class TestPartition:
    def test_overlap_rejected(self):
        with pytest.raises(ValidationError):
            Partition(left={0, 1}, right={1, 2})

    def test_empty_side_rejected(self):
        with pytest.raises(ValidationError):
            Partition(left=set(), right={1})

    def test_covers_and_swap(self):
        partition = Partition(left={0}, right={1, 2})
        assert partition.covers(3)
        assert not partition.covers(4)
        assert partition.swapped().left == frozenset({1, 2})


class TestEnsembleAndValues:
    def test_probabilities_must_sum_to_one(self, bell):
        with pytest.raises(ValidationError):
            EnsembleDecomposition(members=[(0.5, bell), (0.4, bell)])

    def test_density_matrix(self, bell):
        ensemble = EnsembleDecomposition(members=[(0.5, bell), (0.5, bell)])
        np.testing.assert_allclose(ensemble.density_matrix(), np.outer(bell.amplitudes, bell.amplitudes))

    def test_concurrence_ranges(self):
        ConcurrenceValue(value=np.sqrt(2), kind="pure-bipartite")
        with pytest.raises(ValidationError):
            ConcurrenceValue(value=1.1, kind="assistance")
        with pytest.raises(ValidationError):
            ConcurrenceValue(value=-0.1, kind="mixed-two-qubit")


class TestReports:
    def test_entry_sign_convention(self):
        entry = InequalityEntry.compare("x", lhs=1.0, rhs=1.0 - 5e-8)
        assert entry.slack == pytest.approx(-5e-8)
        assert entry.satisfied
        assert not InequalityEntry.compare("x", lhs=1.0, rhs=0.9).satisfied

    def test_report_lookup(self):
        report = BoundReport(
            state_id="s",
            n_qubits=3,
            entries=[InequalityEntry.compare("a", 0, 1), InequalityEntry.compare("b", 1, 0)],
        )
        assert report.names() == ["a", "b"]
        assert report.entry("b").slack == -1
        assert not report.all_satisfied
        assert [entry.inequality for entry in report.violations()] == ["b"]
        with pytest.raises(KeyError):
            report.entry("c")

    def test_serialized_field_names(self):
        report = BoundReport(state_id="s", n_qubits=3, entries=[InequalityEntry.compare("a", 0, 1)])
        dumped = report.model_dump()
        assert set(dumped["entries"][0]) == {"inequality", "lhs", "rhs", "slack", "satisfied"}
        assert "components" in dumped

    def test_wclass_row_gaps(self):
        row = WClassRow(sample=0, i=0, j=1, coefficients=[1, 0, 0], lower=0.1, mid=0.5, upper=0.7)
        assert row.lower_gap == pytest.approx(0.4)
        assert row.upper_gap == pytest.approx(0.2)


class TestRunConfig:
    def test_check_needs_file(self):
        with pytest.raises(ValidationError):
            RunConfig(command="check")

    def test_fuzz_needs_qubits(self):
        with pytest.raises(ValidationError):
            RunConfig(command="fuzz", count=3)

    @pytest.mark.parametrize(
        "fields",
        [{"qubits": 2}, {"qubits": 13}, {"count": 0}, {"tolerance": 0.0}, {"seed": -1}, {"seed": 2**64}],
    )
    def test_invariants(self, fields):
        with pytest.raises(ValidationError):
            RunConfig(**{"command": "fuzz", "qubits": 4, **fields})

    def test_reproduce_needs_nothing(self):
        assert RunConfig(command="reproduce-paper").format == "json"


class TestPaperCaseModel:
    def test_exactly_one_constructor(self):
        expected = [ExpectedValue(quantity="C[0,1]", expected=0.0, provenance="x")]
        with pytest.raises(ValidationError):
            PaperCase(case_id="c", n_qubits=3, expected=expected)
        with pytest.raises(ValidationError):
            PaperCase(case_id="c", n_qubits=3, basis_terms=[("000", 1)], w_coefficients=[1, 0, 0], expected=expected)

    def test_provenance_required(self):
        with pytest.raises(ValidationError):
            ExpectedValue(quantity="C[0,1]", expected=0.0, provenance="")


class TestUtils:
    def test_role_labels(self):
        assert [role_label(q) for q in range(4)] == ["A", "B", "C1", "C2"]
        assert roles_label([3, 0]) == "AC2"

    def test_format_float(self):
        assert format_float(0.1) == "0.10000000000000001"
        assert format_float(1.0) == "1"

    def test_derive_seed(self):
        assert derive_seed(7, 0) == derive_seed(7, 0)
        assert derive_seed(7, 0) != derive_seed(7, 1)
        assert 0 <= derive_seed(2**64 - 1, 5) < 2**64
