import logging

from harness.report_io import emit, report_csv, to_json
from models import RunConfig
from quantum.monogamy import evaluate_all
from quantum.state_core import read_state_file

logger = logging.getLogger(__name__)


def cmd_check(config: RunConfig) -> int:
    """Evaluate every applicable inequality on one state file. 0 when all hold, 2 otherwise."""
    state = read_state_file(config.state_file)
    report = evaluate_all(state, state_id=config.state_file.stem, tolerance=config.tolerance)
    emit(report_csv(report) if config.format == "csv" else to_json(report), config.out)

    if report.all_satisfied:
        logger.info("%s: %d inequalities satisfied", report.state_id, len(report.entries))
        return 0
    logger.error("%s: %d of %d inequalities violated", report.state_id, len(report.violations()), len(report.entries))
    return 2
