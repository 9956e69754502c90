"""Verification graph: load inputs, plan identity checks, run them one by one.

Flow:
1. Load or generate the inputs of the target
2. Plan the identity checks for the target
3. Run checks, looping on the same node until none is left
4. Render a one-line report per identity
"""

import logging
from typing import Any, Literal, Optional

from langgraph.graph import END, StateGraph
from langgraph.types import Command

from app.config import config
from app.graphs.identities import load_inputs, plan_checks
from app.models.state import VerificationReport, VerifyState, get_initial_verify_state

logger = logging.getLogger(__name__)


# Node V0: Load inputs
def verify_load_inputs(state: VerifyState) -> dict:
    """Read input documents or draw seeded random inputs."""
    target = state["target"]
    degree = state["degree"]
    inputs = load_inputs(target, degree, state.get("params", {}))
    return {"inputs": inputs, "status": "running"}


# Node V1: Plan identity checks
def verify_plan_identities(state: VerifyState) -> Command[Literal["verify_run_identity", "verify_render_report"]]:
    """List the names of the identity checks for the target."""
    checks = plan_checks(state["target"], state.get("inputs", {}), state["degree"])
    logger.info(f"[verify_plan_identities] {state['target']}: {len(checks)} identities")
    return Command(
        update={"pending": [check.name for check in checks], "results": []},
        goto="verify_run_identity" if checks else "verify_render_report",
    )


# Node V2: Run the next identity check
def verify_run_identity(state: VerifyState) -> Command[Literal["verify_run_identity", "verify_render_report"]]:
    """Run the first pending check and loop while checks remain.

    Checks are rebuilt from the stored inputs; state only carries their names.
    """
    pending = list(state.get("pending", []))
    results = list(state.get("results", []))
    name = pending.pop(0)
    checks = plan_checks(state["target"], state.get("inputs", {}), state["degree"])
    check = next(check for check in checks if check.name == name)
    result = check.run()
    if result.passed:
        logger.info(f"[verify_run_identity] PASS {result.name} ({result.checked} checked)")
    else:
        logger.warning(f"[verify_run_identity] {result.line()}")
    results.append(result)
    return Command(
        update={"pending": pending, "results": results},
        goto="verify_run_identity" if pending else "verify_render_report",
    )


# Node V3: Render the report
def verify_render_report(state: VerifyState) -> dict:
    """One line per identity, and the overall status."""
    results = state.get("results", [])
    passed = all(result.passed for result in results)
    return {
        "report": [result.line() for result in results],
        "status": "passed" if passed else "failed",
    }


def create_verify_graph() -> StateGraph:
    """Create the verification graph."""
    builder = StateGraph(VerifyState)

    builder.add_node("verify_load_inputs", verify_load_inputs)
    builder.add_node("verify_plan_identities", verify_plan_identities)
    builder.add_node("verify_run_identity", verify_run_identity)
    builder.add_node("verify_render_report", verify_render_report)

    builder.set_entry_point("verify_load_inputs")
    builder.add_edge("verify_load_inputs", "verify_plan_identities")
    builder.add_edge("verify_render_report", END)

    # Note:
    # - verify_plan_identities and verify_run_identity route with Command

    return builder


verify_graph = create_verify_graph().compile()


def run_verification(target: str, degree: int, params: Optional[dict[str, Any]] = None) -> VerifyState:
    """Run one verification target to completion and return the final state."""
    state = get_initial_verify_state(target, degree, params)
    return verify_graph.invoke(state, {"recursion_limit": config.RECURSION_LIMIT})


def build_report(state: VerifyState) -> VerificationReport:
    """Machine-readable report of a finished run."""
    results = state.get("results", [])
    return VerificationReport(
        target=state["target"],
        degree=state["degree"],
        passed=state.get("status") == "passed",
        identities=results,
    )
