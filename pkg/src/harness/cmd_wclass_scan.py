import logging

import numpy as np

from harness.report_io import csv_text, emit
from models import RunConfig, WClassRow
from quantum.monogamy import sample_wclass_coefficients, wclass_bounds_all, wclass_coefficients, wclass_state
from utils import derive_seed

logger = logging.getLogger(__name__)


def scan_rows(n: int, count: int, seed: int) -> list[WClassRow]:
    """Sample 0 is the uniform vector, samples 1..count are Dirichlet draws seeded by derive_seed(seed, k)."""
    samples = [np.full(n, 1 / np.sqrt(n), dtype=np.complex128)]
    for k in range(1, count + 1):
        samples.append(sample_wclass_coefficients(n, np.random.default_rng(derive_seed(seed, k))))

    rows = []
    for sample, coefficients in enumerate(samples):
        state = wclass_state(coefficients)
        for (i, j), (lower, mid, upper) in wclass_bounds_all(state).items():
            rows.append(
                WClassRow(
                    sample=sample,
                    i=i,
                    j=j,
                    coefficients=[complex(a) for a in wclass_coefficients(state)],
                    lower=lower,
                    mid=mid,
                    upper=upper,
                )
            )
    return rows


def rows_csv(n: int, rows: list[WClassRow]) -> str:
    header = ["sample", "i", "j"]
    for p in range(n):
        header += [f"a{p}_re", f"a{p}_im"]
    header += ["lower", "mid", "upper", "lower_gap", "upper_gap"]

    def cells(row: WClassRow) -> list[object]:
        parts: list[object] = [row.sample, row.i, row.j]
        for a in row.coefficients:
            parts += [float(a.real), float(a.imag)]
        return parts + [row.lower, row.mid, row.upper, row.lower_gap, row.upper_gap]

    return csv_text(header, (cells(row) for row in rows))


def cmd_wclass_scan(config: RunConfig) -> int:
    rows = scan_rows(config.qubits, config.count, config.seed)
    emit(rows_csv(config.qubits, rows), config.out)

    broken = [row for row in rows if row.lower_gap < -config.tolerance or row.upper_gap < -config.tolerance]
    for row in broken:
        logger.error("sample %d pair (%d, %d): %r <= %r <= %r fails", row.sample, row.i, row.j, row.lower, row.mid, row.upper)
    return 2 if broken else 0
