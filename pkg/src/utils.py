from collections.abc import Iterable

import numpy as np


def role_label(qubit: int) -> str:
    """A, B, C1, C2, ... for qubits 0, 1, 2, 3, ..."""
    if qubit == 0:
        return "A"
    if qubit == 1:
        return "B"
    return f"C{qubit - 1}"


def roles_label(qubits: Iterable[int]) -> str:
    return "".join(role_label(q) for q in sorted(qubits))


def format_float(value: float) -> str:
    # locale-independent, 17 significant digits
    return format(float(value), ".17g")


def derive_seed(seed: int, index: int) -> int:
    """Independent 64-bit seed for iteration `index` of a run seeded with `seed`."""
    sequence = np.random.SeedSequence([seed, index])
    return int(sequence.generate_state(1, dtype=np.uint64)[0])
