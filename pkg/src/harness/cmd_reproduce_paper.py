"""Regression suite over every worked example: evaluate each PaperCase quantity and compare."""

import logging
import re
from collections.abc import Callable

from exceptions import MonogamyError
from harness.report_io import emit, to_json
from models import CaseOutcome, Partition, PaperCase, PureState, ReproduceReport, RunConfig
from paper_cases import PAPER_CASES, PAPER_TRIANGLE_LENGTHS
from quantum.entanglement import concurrence_pure, pair_measures
from quantum.monogamy import (
    corollary1_lower,
    corollary1_paper_tally,
    corollary2_lower,
    corollary2_upper,
    evaluate_all,
    inequality_chain,
    theorem1_lower,
    theorem2_upper,
    triangle_from_lengths,
    triangle_vectors,
    wclass_bounds,
    wclass_state,
)
from quantum.state_core import linear_entropy, partial_trace, state_from_basis_terms

logger = logging.getLogger(__name__)

_PAIR = re.compile(r"^(C|Ca)\[(\d+),(\d+)\]$")
_CUT = re.compile(r"^C\[(\d+(?:,\d+)*)\|rest\]$")
_ENTROPY = re.compile(r"^T\[(\d+(?:,\d+)*)\]$")
_WCLASS = re.compile(r"^wclass_(lower|mid|upper)\[(\d+),(\d+)\]$")

_WCLASS_PART = {"lower": 0, "mid": 1, "upper": 2}


def _slack(name: str) -> Callable[[PureState], float]:
    return lambda state: evaluate_all(state).entry(name).slack


def _triangle_component(vector: str, axis: int, paper: bool) -> Callable[[PureState], float]:
    def component(state: PureState) -> float:
        vectors = triangle_from_lengths(*PAPER_TRIANGLE_LENGTHS) if paper else triangle_vectors(state)
        return getattr(vectors, f"{vector}_vec")[axis]

    return component


SCALARS: dict[str, Callable[[PureState], float]] = {
    "theorem1_lower": theorem1_lower,
    "theorem1_lower_clamped": lambda state: theorem1_lower(state, clamp=True),
    "theorem2_upper": theorem2_upper,
    "theorem1_slack": _slack("theorem1_lower"),
    "theorem2_slack": _slack("theorem2_upper"),
    "chain_lower": lambda state: inequality_chain(state)[0],
    "chain_mid": lambda state: inequality_chain(state)[1],
    "chain_upper": lambda state: inequality_chain(state)[2],
    "corollary1_lower": corollary1_lower,
    "corollary1_lower_clamped": lambda state: corollary1_lower(state, clamp=True),
    "corollary1_lower_paper_tally": corollary1_paper_tally,
    "corollary2_lower": corollary2_lower,
    "corollary2_lower_clamped": lambda state: corollary2_lower(state, clamp=True),
    "corollary2_upper": corollary2_upper,
}
for _vector in ("a", "b", "c"):
    for _axis, _name in enumerate(("x", "y")):
        SCALARS[f"{_vector}_vec_{_name}"] = _triangle_component(_vector, _axis, paper=False)
        SCALARS[f"paper_{_vector}_vec_{_name}"] = _triangle_component(_vector, _axis, paper=True)


def _indices(text: str) -> list[int]:
    return [int(part) for part in text.split(",")]


def evaluate_quantity(state: PureState, quantity: str) -> float:
    """Value of one quantity key (grammar in paper_cases) on `state`."""
    if quantity in SCALARS:
        return float(SCALARS[quantity](state))
    if match := _PAIR.match(quantity):
        mixed, assistance = pair_measures(state, int(match[2]), int(match[3]))
        return mixed.value if match[1] == "C" else assistance.value
    if match := _CUT.match(quantity):
        side = frozenset(_indices(match[1]))
        rest = frozenset(range(state.n_qubits)) - side
        return concurrence_pure(state, Partition(left=side, right=rest))
    if match := _ENTROPY.match(quantity):
        return linear_entropy(partial_trace(state, _indices(match[1])))
    if match := _WCLASS.match(quantity):
        return wclass_bounds(state, int(match[2]), int(match[3]))[_WCLASS_PART[match[1]]]
    raise MonogamyError(f"unknown quantity {quantity!r}", code="E_CASE")


def build_state(case: PaperCase) -> PureState:
    if case.basis_terms is not None:
        return state_from_basis_terms(case.n_qubits, case.basis_terms)
    return wclass_state(case.w_coefficients)


def run_cases(cases: list[PaperCase] = PAPER_CASES) -> ReproduceReport:
    outcomes = []
    for case in cases:
        state = build_state(case)
        for item in case.expected:
            computed = evaluate_quantity(state, item.quantity)
            matched = abs(computed - item.expected) <= item.tolerance
            if not matched:
                logger.warning("%s %s: expected %r, computed %r", case.case_id, item.quantity, item.expected, computed)
            outcomes.append(
                CaseOutcome(
                    case_id=case.case_id,
                    quantity=item.quantity,
                    expected=item.expected,
                    computed=computed,
                    tolerance=item.tolerance,
                    provenance=item.provenance,
                    matched=matched,
                )
            )
    return ReproduceReport(outcomes=outcomes)


def format_table(report: ReproduceReport) -> str:
    header = f"{'case':<18} {'quantity':<30} {'expected':>22} {'computed':>22} {'|diff|':>10}  status"
    lines = [header, "-" * len(header)]
    for o in report.outcomes:
        status = "ok" if o.matched else "MISMATCH"
        lines.append(
            f"{o.case_id:<18} {o.quantity:<30} {o.expected:>22.15g} {o.computed:>22.15g} "
            f"{abs(o.computed - o.expected):>10.2e}  {status}"
        )
    matched = sum(o.matched for o in report.outcomes)
    lines.append(f"{matched}/{len(report.outcomes)} quantities match")
    return "\n".join(lines) + "\n"


def cmd_reproduce_paper(config: RunConfig) -> int:
    report = run_cases()
    print(format_table(report), end="")
    if config.out is not None:
        emit(to_json(report), config.out)
    return 0 if report.all_matched else 2
