import logging
from pathlib import Path

from harness.report_io import csv_text, emit, to_json
from models import FuzzSummary, RunConfig
from quantum.monogamy import evaluate_all
from quantum.state_core import random_haar_state, write_state_file
from utils import derive_seed

logger = logging.getLogger(__name__)

PROGRESS_EVERY = 100


def violation_path(config: RunConfig, index: int) -> Path:
    directory = config.out.parent if config.out is not None else Path.cwd()
    return directory / f"violation-{config.seed}-{index}.json"


def run_fuzz(config: RunConfig) -> FuzzSummary:
    """Evaluate `count` Haar states seeded from derive_seed(seed, i); track the minimum slack per inequality."""
    min_slack: dict[str, float] = {}
    violation_files: list[str] = []
    violations = 0

    for index in range(config.count):
        state = random_haar_state(config.qubits, derive_seed(config.seed, index))
        report = evaluate_all(state, state_id=f"fuzz-{config.seed}-{index}", tolerance=config.tolerance)
        for entry in report.entries:
            min_slack[entry.inequality] = min(entry.slack, min_slack.get(entry.inequality, entry.slack))
        if not report.all_satisfied:
            violations += 1
            path = violation_path(config, index)
            write_state_file(path, state)
            violation_files.append(str(path))
        if (index + 1) % PROGRESS_EVERY == 0:
            logger.info("fuzz n=%d: %d/%d states, %d violating", config.qubits, index + 1, config.count, violations)

    return FuzzSummary(
        n_qubits=config.qubits,
        count=config.count,
        seed=config.seed,
        tolerance=config.tolerance,
        min_slack=min_slack,
        violations=violations,
        violation_files=violation_files,
    )


def cmd_fuzz(config: RunConfig) -> int:
    summary = run_fuzz(config)
    if config.format == "csv":
        text = csv_text(["inequality", "min_slack"], sorted(summary.min_slack.items()))
    else:
        text = to_json(summary)
    emit(text, config.out)

    if summary.violations:
        logger.error("%d of %d fuzzed states violate an inequality", summary.violations, summary.count)
        return 2
    return 0
