"""Monogamy bounds on C^2 of an N-qubit pure state under the AB|C1...C(N-2) and ABC1|C2...C(N-2) cuts.

Roles are positional: qubit 0 is A, qubit 1 is B, qubit k >= 2 is C(k-1).
Lower bounds are returned raw (possibly negative); pass clamp=True for max(0, .).
"""

import logging
from collections.abc import Iterable, Sequence

import numpy as np

from exceptions import InvalidPartitionError, InvalidStateError, NotWClassError, QubitCountError
from models import BoundReport, InequalityEntry, Partition, PureState, TriangleVectors
from quantum.entanglement import concurrence_pure_squared, pair_measures
from quantum.state_core import permute_qubits
from tolerances import MAX_QUBITS, SATISFIED_TOL, WCLASS_NORM_TOL, WCLASS_SUPPORT_TOL
from utils import roles_label

logger = logging.getLogger(__name__)

A, B, C1 = 0, 1, 2


class Marginals:
    """Per-state cache of pair concurrences and cut concurrences.

    Every value read through it is recorded in `components` under a readable name,
    so a report built from one instance lists exactly the quantities it used.
    """

    def __init__(self, state: PureState):
        self.state = state
        self.n = state.n_qubits
        self.components: dict[str, float] = {}
        self._pairs: dict[tuple[int, int], tuple[float, float]] = {}
        self._cuts: dict[frozenset[int], float] = {}

    def _pair(self, p: int, q: int) -> tuple[float, float]:
        key = (min(p, q), max(p, q))
        if key not in self._pairs:
            mixed, assistance = pair_measures(self.state, *key)
            self._pairs[key] = (mixed.value**2, assistance.value**2)
        return self._pairs[key]

    def c2(self, p: int, q: int) -> float:
        value = self._pair(p, q)[0]
        self.components[f"C^2({roles_label((p, q))})"] = value
        return value

    def ca2(self, p: int, q: int) -> float:
        value = self._pair(p, q)[1]
        self.components[f"Ca^2({roles_label((p, q))})"] = value
        return value

    def cut2(self, qubits: Iterable[int]) -> float:
        """C^2 of the pure state across qubits | rest."""
        side = frozenset(qubits)
        if side not in self._cuts:
            rest = frozenset(range(self.n)) - side
            self._cuts[side] = concurrence_pure_squared(self.state, Partition(left=side, right=rest))
        rest = set(range(self.n)) - side
        self.components[f"C^2({roles_label(side)}|{roles_label(rest)})"] = self._cuts[side]
        return self._cuts[side]

    @property
    def cs(self) -> range:
        return range(2, self.n)


def _require_qubits(state: PureState, minimum: int) -> None:
    if not minimum <= state.n_qubits <= MAX_QUBITS:
        raise QubitCountError(f"needs {minimum}..{MAX_QUBITS} qubits, got {state.n_qubits}")


def _clamped(value: float, clamp: bool) -> float:
    return max(0.0, value) if clamp else value


# AB | C1...C(N-2)
def _theorem1_branches(m: Marginals) -> tuple[float, float]:
    branch_a = sum(m.c2(A, c) - m.ca2(B, c) for c in m.cs)
    branch_b = sum(m.c2(B, c) - m.ca2(A, c) for c in m.cs)
    return branch_a, branch_b


def _theorem2(m: Marginals) -> float:
    return 2 * m.ca2(A, B) + sum(m.ca2(A, c) + m.ca2(B, c) for c in m.cs)


def _chain(m: Marginals) -> tuple[float, float, float]:
    a, b = m.cut2({A}), m.cut2({B})
    return abs(a - b), m.cut2({A, B}), a + b


def theorem1_lower(state: PureState, clamp: bool = False) -> float:
    _require_qubits(state, 3)
    return _clamped(max(_theorem1_branches(Marginals(state))), clamp)


def theorem2_upper(state: PureState) -> float:
    _require_qubits(state, 3)
    return _theorem2(Marginals(state))


def inequality_chain(state: PureState) -> tuple[float, float, float]:
    """(|C^2_A|rest - C^2_B|rest|, C^2_AB|rest, C^2_A|rest + C^2_B|rest)."""
    _require_qubits(state, 3)
    return _chain(Marginals(state))


def triangle_from_lengths(a: float, b: float, c: float) -> TriangleVectors:
    """c_vec along the first axis, a_vec above it, b_vec = c_vec - a_vec."""
    if c <= 1e-12:
        # the chain forces a == b here; any antiparallel pair closes the triangle
        return TriangleVectors(a_vec=(a, 0.0), b_vec=(-b, 0.0), c_vec=(0.0, 0.0))
    a_x = (c * c + a * a - b * b) / (2 * c)
    a_y = float(np.sqrt(max(0.0, a * a - a_x * a_x)))
    return TriangleVectors(a_vec=(a_x, a_y), b_vec=(c - a_x, -a_y), c_vec=(c, 0.0))


def triangle_vectors(state: PureState) -> TriangleVectors:
    """Planar a_vec + b_vec = c_vec with lengths C^2_A|rest, C^2_B|rest, C^2_AB|rest."""
    _require_qubits(state, 3)
    m = Marginals(state)
    return triangle_from_lengths(m.cut2({A}), m.cut2({B}), m.cut2({A, B}))


def triangle_discriminant(state: PureState) -> float:
    """a^2 - a_x^2 of the triangle construction; >= 0 up to rounding whenever the chain holds."""
    _require_qubits(state, 3)
    m = Marginals(state)
    a, b, c = m.cut2({A}), m.cut2({B}), m.cut2({A, B})
    if c <= 1e-12:
        return 0.0
    a_x = (c * c + a * a - b * b) / (2 * c)
    return a * a - a_x * a_x


# ABC1 | C2...C(N-2)
def _j_sum(m: Marginals) -> float:
    return sum(m.ca2(C1, j) for j in range(m.n) if j != C1)


def _corollary1(m: Marginals) -> float:
    return max(_theorem1_branches(m)) - _j_sum(m)


def _corollary2_lower(m: Marginals) -> float:
    gain = m.c2(A, C1) + m.c2(B, C1) + sum(m.c2(C1, c) for c in m.cs if c != C1)
    loss = 2 * m.ca2(A, B) + sum(m.ca2(A, c) + m.ca2(B, c) for c in m.cs)
    return gain - loss


def _corollary2_upper(m: Marginals) -> float:
    return _theorem2(m) + _j_sum(m)


def corollary1_lower(state: PureState, clamp: bool = False) -> float:
    _require_qubits(state, 4)
    return _clamped(_corollary1(Marginals(state)), clamp)


def corollary1_paper_tally(state: PureState) -> float:
    """`corollary1_lower` with the j = A term left out of the J-sum.

    This is how the six-qubit worked example arrives at its value; it is not a valid
    lower bound in general and is never part of a BoundReport.
    """
    _require_qubits(state, 4)
    m = Marginals(state)
    return _corollary1(m) + m.ca2(C1, A)


def corollary2_lower(state: PureState, clamp: bool = False) -> float:
    _require_qubits(state, 4)
    return _clamped(_corollary2_lower(Marginals(state)), clamp)


def corollary2_upper(state: PureState) -> float:
    _require_qubits(state, 4)
    return _corollary2_upper(Marginals(state))


# generalized W-class states
def wclass_state(coefficients: Sequence[complex]) -> PureState:
    """a_1|10...0> + a_2|010...0> + ... + a_N|0...01>."""
    n = len(coefficients)
    if not 3 <= n <= MAX_QUBITS:
        raise QubitCountError(f"W-class states need 3..{MAX_QUBITS} qubits, got {n}")
    coefficients = np.asarray(coefficients, dtype=np.complex128)
    norm = float(np.sum(np.abs(coefficients) ** 2))
    if abs(norm - 1.0) > WCLASS_NORM_TOL:
        raise InvalidStateError(f"W-class coefficients have squared norm {norm!r}")
    amplitudes = np.zeros(2**n, dtype=np.complex128)
    for p, a in enumerate(coefficients):
        amplitudes[1 << (n - 1 - p)] = a
    return PureState(n_qubits=n, amplitudes=amplitudes / np.sqrt(norm))


def wclass_coefficients(state: PureState) -> np.ndarray:
    return np.array([state.amplitudes[1 << (state.n_qubits - 1 - p)] for p in range(state.n_qubits)])


def is_wclass(state: PureState) -> bool:
    if state.n_qubits < 3:
        return False
    weights = np.array([bin(index).count("1") for index in range(2**state.n_qubits)])
    return bool(np.max(np.abs(state.amplitudes[weights != 1]), initial=0.0) <= WCLASS_SUPPORT_TOL)


def sample_wclass_coefficients(n: int, rng: np.random.Generator) -> np.ndarray:
    """Squared moduli uniform on the simplex, phases uniform."""
    moduli = np.sqrt(rng.dirichlet(np.ones(n)))
    return moduli * np.exp(2j * np.pi * rng.random(n))


def _wclass_bounds(m: Marginals, i: int, j: int) -> tuple[float, float, float]:
    others = [t for t in range(m.n) if t not in (i, j)]
    lower = abs(sum(m.c2(i, t) - m.c2(j, t) for t in others))
    upper = 2 * m.c2(i, j) + sum(m.c2(i, t) + m.c2(j, t) for t in others)
    return lower, m.cut2({i, j}), upper


def wclass_bounds(state: PureState, i: int, j: int) -> tuple[float, float, float]:
    """(lower, C^2(A_iA_j|rest), upper) for a generalized W-class state; 0-based i < j."""
    if not is_wclass(state):
        raise NotWClassError("state is not supported on Hamming-weight-1 basis states")
    if not 0 <= i < j < state.n_qubits:
        raise InvalidPartitionError(f"need 0 <= i < j < {state.n_qubits}, got ({i}, {j})")
    return _wclass_bounds(Marginals(state), i, j)


def wclass_bounds_all(state: PureState) -> dict[tuple[int, int], tuple[float, float, float]]:
    """wclass_bounds for every pair i < j, sharing one set of marginals."""
    if not is_wclass(state):
        raise NotWClassError("state is not supported on Hamming-weight-1 basis states")
    m = Marginals(state)
    return {(i, j): _wclass_bounds(m, i, j) for i in range(m.n - 1) for j in range(i + 1, m.n)}


# full report
def evaluate_all(
    state: PureState,
    state_id: str = "state",
    tolerance: float = SATISFIED_TOL,
    roles: Sequence[int] | None = None,
) -> BoundReport:
    """Every inequality applicable at the state's size, as `lhs <= rhs` entries.

    `roles[k]` is the physical qubit playing role k (A, B, C1, ...); identity order by default.
    """
    _require_qubits(state, 3)
    if roles is not None:
        state = permute_qubits(state, roles)
    m = Marginals(state)
    entries: list[InequalityEntry] = []

    def add(name: str, lhs: float, rhs: float) -> None:
        entries.append(InequalityEntry.compare(name, lhs, rhs, tolerance))

    ab = m.cut2({A, B})
    branch_a, branch_b = _theorem1_branches(m)
    theorem1 = max(branch_a, branch_b)
    add("theorem1_lower", theorem1, ab)
    add("theorem1_lower_clamped", max(0.0, theorem1), ab)
    add("theorem1_branch_a", branch_a, ab)
    add("theorem1_branch_b", branch_b, ab)
    add("theorem2_upper", ab, _theorem2(m))

    lower, mid, upper = _chain(m)
    add("chain_lower", lower, mid)
    add("chain_upper", mid, upper)

    for focus, label in ((A, "A"), (B, "B")):
        others = [q for q in range(m.n) if q != focus]
        add(f"dual_monogamy_{label}", m.cut2({focus}), sum(m.ca2(focus, q) for q in others))
        add(f"ckw_{label}", sum(m.c2(focus, q) for q in others), m.cut2({focus}))

    # linear entropy T = C^2 / 2 on the (A, B) pair
    t_a, t_b, t_ab = m.cut2({A}) / 2, m.cut2({B}) / 2, ab / 2
    add("linear_entropy_triangle_lower", abs(t_a - t_b), t_ab)
    add("linear_entropy_triangle_upper", t_ab, t_a + t_b)

    if m.n >= 4:
        abc1 = m.cut2({A, B, C1})
        corollary1 = _corollary1(m)
        corollary2 = _corollary2_lower(m)
        add("corollary1_lower", corollary1, abc1)
        add("corollary1_lower_clamped", max(0.0, corollary1), abc1)
        add("corollary2_lower", corollary2, abc1)
        add("corollary2_lower_clamped", max(0.0, corollary2), abc1)
        add("corollary2_upper", abc1, _corollary2_upper(m))

        a, b, c1 = m.cut2({A}), m.cut2({B}), m.cut2({C1})
        ac1, bc1 = m.cut2({A, C1}), m.cut2({B, C1})
        add("abc1_split_ac1_b", abs(ac1 - b), abc1)
        add("abc1_split_a_bc1", abs(a - bc1), abc1)
        add("abc1_split_ab_c1", ab - c1, abc1)
        add("abc1_split_upper", abc1, min(a + bc1, ac1 + b))

    if is_wclass(state):
        for i in range(m.n - 1):
            for j in range(i + 1, m.n):
                w_lower, w_mid, w_upper = _wclass_bounds(m, i, j)
                add(f"wclass_lower_{i}_{j}", w_lower, w_mid)
                add(f"wclass_upper_{i}_{j}", w_mid, w_upper)

    report = BoundReport(state_id=state_id, n_qubits=m.n, entries=entries, components=dict(m.components))
    for entry in report.violations():
        logger.warning("%s violated on %s: lhs=%r rhs=%r slack=%r", entry.inequality, state_id, entry.lhs, entry.rhs, entry.slack)
    return report


