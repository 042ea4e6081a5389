import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from numpy.testing import assert_allclose

from conftest import ghz, product_zero, random_mixed_two_qubit, w_state
from exceptions import InvalidPartitionError, NotPositiveSemidefiniteError, QubitCountError
from models import DensityMatrix, Partition
from quantum.entanglement import (
    concurrence_of_assistance,
    concurrence_pure,
    concurrence_pure_squared,
    pair_measures,
    spin_flip,
    three_tangle,
    wootters_concurrence,
    wootters_lambdas,
)
from quantum.state_core import apply_local_unitaries, partial_trace, random_haar_state, random_unitary

seeds = st.integers(min_value=0, max_value=2**64 - 1)


def cut(left, n):
    return Partition(left=frozenset(left), right=frozenset(range(n)) - frozenset(left))


class TestConcurrencePure:
    def test_saturating_ab_cd(self, saturating):
        assert concurrence_pure(saturating, cut({0, 1}, 4)) == pytest.approx(1.0, abs=1e-12)

    def test_phi_ab_cd(self, phi):
        assert concurrence_pure(phi, cut({0, 1}, 4)) == pytest.approx(2 / 3, abs=1e-12)

    def test_phi_single_qubit_cuts(self, phi):
        # rho_A = [[2/3, 1/3], [1/3, 1/3]]; qubit B is |0> throughout
        assert concurrence_pure(phi, cut({0}, 4)) == pytest.approx(2 / 3, abs=1e-12)
        assert concurrence_pure(phi, cut({1}, 4)) == pytest.approx(0.0, abs=1e-12)

    @pytest.mark.parametrize("left", [{0}, {0, 1}, {1, 3}])
    def test_product_state(self, left):
        assert concurrence_pure(product_zero(4), cut(left, 4)) == pytest.approx(0.0, abs=1e-15)

    def test_partition_must_cover(self, phi):
        with pytest.raises(InvalidPartitionError):
            concurrence_pure(phi, Partition(left={0}, right={1, 2}))

    @given(seed=seeds, n=st.integers(min_value=2, max_value=6), data=st.data())
    @settings(max_examples=40, deadline=None)
    def test_symmetric_and_matches_linear_entropy(self, seed, n, data):
        state = random_haar_state(n, seed)
        left = data.draw(st.sets(st.integers(0, n - 1), min_size=1, max_size=n - 1))
        partition = cut(left, n)
        assert abs(concurrence_pure(state, partition) - concurrence_pure(state, partition.swapped())) <= 1e-10
        rho = partial_trace(state, left).matrix
        entropy = 1 - np.sum(np.abs(rho) ** 2)
        assert concurrence_pure_squared(state, partition) == pytest.approx(2 * entropy, abs=1e-12)


class TestSpinFlip:
    def test_bell_projector_invariant(self, bell):
        rho = DensityMatrix.from_pure(bell)
        assert_allclose(spin_flip(rho), rho.matrix, atol=1e-15)

    def test_zero_zero_to_one_one(self):
        rho = DensityMatrix(qubit_labels=(0, 1), matrix=np.diag([1, 0, 0, 0]))
        assert_allclose(spin_flip(rho), np.diag([0, 0, 0, 1]), atol=1e-15)

    def test_maximally_mixed(self):
        rho = DensityMatrix(qubit_labels=(0, 1), matrix=np.eye(4) / 4)
        assert_allclose(spin_flip(rho), np.eye(4) / 4, atol=1e-15)

    def test_needs_two_qubits(self):
        with pytest.raises(QubitCountError):
            spin_flip(DensityMatrix(qubit_labels=(0,), matrix=np.eye(2) / 2))


class TestTwoQubitMeasures:
    def test_bell(self, bell):
        rho = DensityMatrix.from_pure(bell)
        assert wootters_concurrence(rho) == pytest.approx(1.0, abs=1e-12)
        assert concurrence_of_assistance(rho) == pytest.approx(1.0, abs=1e-12)

    def test_saturating_marginals(self, saturating):
        assert wootters_concurrence(partial_trace(saturating, {0, 3})) == pytest.approx(1.0, abs=1e-12)
        assert concurrence_of_assistance(partial_trace(saturating, {0, 3})) == pytest.approx(1.0, abs=1e-12)
        assert wootters_concurrence(partial_trace(saturating, {0, 2})) == pytest.approx(0.0, abs=1e-12)
        assert concurrence_of_assistance(partial_trace(saturating, {1, 2})) == pytest.approx(0.0, abs=1e-12)
        assert concurrence_of_assistance(partial_trace(saturating, {1, 3})) == pytest.approx(0.0, abs=1e-12)

    def test_w3_pair(self):
        assert wootters_concurrence(partial_trace(w_state(3), {0, 1})) == pytest.approx(2 / 3, abs=1e-10)

    def test_ghz3_pair(self):
        rho = partial_trace(ghz(3), {0, 1})
        assert wootters_concurrence(rho) == pytest.approx(0.0, abs=1e-12)
        assert concurrence_of_assistance(rho) == pytest.approx(1.0, abs=1e-12)

    def test_maximally_mixed(self):
        rho = DensityMatrix(qubit_labels=(0, 1), matrix=np.eye(4) / 4)
        assert wootters_concurrence(rho) == 0.0
        assert concurrence_of_assistance(rho) == pytest.approx(1.0, abs=1e-12)

    def test_werner_state(self):
        # p |Phi+><Phi+| + (1 - p) I/4 has C = max(0, (3p - 1)/2)
        phi_plus = np.zeros(4)
        phi_plus[[0, 3]] = 1 / np.sqrt(2)
        for p in (0.2, 1 / 3, 0.6, 0.9):
            rho = DensityMatrix(qubit_labels=(0, 1), matrix=p * np.outer(phi_plus, phi_plus) + (1 - p) * np.eye(4) / 4)
            assert wootters_concurrence(rho) == pytest.approx(max(0.0, (3 * p - 1) / 2), abs=1e-12)

    def test_lambdas_descending(self):
        lam = wootters_lambdas(random_mixed_two_qubit(np.random.default_rng(1), 4))
        assert lam.shape == (4,)
        assert np.all(np.diff(lam) <= 0)

    def test_not_psd_rejected(self):
        # Hermitian, trace one, eigenvalue -0.1 passes neither DensityMatrix nor the measure
        matrix = np.diag([0.6, 0.5, 0.0, -0.1])
        with pytest.raises(ValueError):
            DensityMatrix(qubit_labels=(0, 1), matrix=matrix)
        rho = DensityMatrix.model_construct(qubit_labels=(0, 1), matrix=matrix)
        with pytest.raises(NotPositiveSemidefiniteError):
            wootters_concurrence(rho)

    @given(seed=seeds)
    @settings(max_examples=50, deadline=None)
    def test_pure_collapse(self, seed):
        state = random_haar_state(2, seed)
        rho = DensityMatrix.from_pure(state)
        pure = concurrence_pure(state, cut({0}, 2))
        assert abs(wootters_concurrence(rho) - pure) <= 1e-10
        assert abs(concurrence_of_assistance(rho) - pure) <= 1e-10

    @given(seed=seeds, rank=st.integers(min_value=1, max_value=4))
    @settings(max_examples=50, deadline=None)
    def test_assistance_dominates_and_ranges(self, seed, rank):
        rho = random_mixed_two_qubit(np.random.default_rng(seed), rank)
        c, ca = wootters_concurrence(rho), concurrence_of_assistance(rho)
        assert 0.0 <= c <= 1.0
        assert ca <= 1.0 + 1e-10
        assert ca >= c - 1e-10

    def test_pair_measures_kinds(self, saturating):
        mixed, assistance = pair_measures(saturating, 3, 0)
        assert mixed.kind == "mixed-two-qubit"
        assert assistance.kind == "assistance"
        assert mixed.value == pytest.approx(1.0, abs=1e-12)

    def test_pair_measures_needs_distinct_qubits(self, saturating):
        with pytest.raises(InvalidPartitionError):
            pair_measures(saturating, 1, 1)


class TestThreeTangle:
    def test_ghz(self):
        assert three_tangle(ghz(3), 0) == pytest.approx(1.0, abs=1e-10)

    def test_w(self):
        assert three_tangle(w_state(3), 0) == pytest.approx(0.0, abs=1e-10)

    def test_product(self):
        assert three_tangle(product_zero(3), 0) == pytest.approx(0.0, abs=1e-12)

    def test_needs_three_qubits(self, phi):
        with pytest.raises(QubitCountError):
            three_tangle(phi, 0)

    @given(seed=seeds)
    @settings(max_examples=50, deadline=None)
    def test_focus_independent_and_nonnegative(self, seed):
        state = random_haar_state(3, seed)
        tangles = [three_tangle(state, focus) for focus in range(3)]
        assert min(tangles) >= -1e-8
        assert max(tangles) - min(tangles) <= 1e-8

    @given(seed=seeds)
    @settings(max_examples=50, deadline=None)
    def test_assistance_identity(self, seed):
        # Ca^2(rho_AB) = C^2(rho_AB) + tau for three-qubit pure states
        state = random_haar_state(3, seed)
        mixed, assistance = pair_measures(state, 0, 1)
        assert abs(assistance.value**2 - mixed.value**2 - three_tangle(state, 2)) <= 1e-8

    @pytest.mark.slow
    def test_assistance_identity_sweep(self):
        for seed in range(500):
            state = random_haar_state(3, seed)
            mixed, assistance = pair_measures(state, 0, 1)
            residual = assistance.value**2 - mixed.value**2 - three_tangle(state, 2)
            assert abs(residual) <= 1e-8, (seed, residual)


class TestMonogamyRelations:
    @given(seed=seeds, n=st.integers(min_value=3, max_value=6))
    @settings(max_examples=40, deadline=None)
    def test_ckw_and_dual(self, seed, n):
        state = random_haar_state(n, seed)
        total = concurrence_pure_squared(state, cut({0}, n))
        pairs = [pair_measures(state, 0, q) for q in range(1, n)]
        assert total >= sum(m.value**2 for m, _ in pairs) - 1e-8
        assert total <= sum(a.value**2 for _, a in pairs) + 1e-8

    @given(seed=seeds)
    @settings(max_examples=25, deadline=None)
    def test_local_unitary_invariance(self, seed):
        state = random_haar_state(4, seed)
        rng = np.random.default_rng(seed)
        rotated = apply_local_unitaries(state, [random_unitary(2, rng) for _ in range(4)])
        for left in ({0}, {0, 1}):
            assert abs(concurrence_pure(rotated, cut(left, 4)) - concurrence_pure(state, cut(left, 4))) <= 1e-9
        for p, q in ((0, 1), (1, 3)):
            for before, after in zip(pair_measures(state, p, q), pair_measures(rotated, p, q)):
                assert abs(before.value - after.value) <= 1e-9
        three = random_haar_state(3, seed)
        rotated_three = apply_local_unitaries(three, [random_unitary(2, rng) for _ in range(3)])
        assert abs(three_tangle(three, 0) - three_tangle(rotated_three, 0)) <= 1e-9
