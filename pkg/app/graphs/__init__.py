"""LangGraph workflow that checks identities of the free-product calculus."""

from app.graphs.verify_graph import (
    build_report,
    create_verify_graph,
    run_verification,
    verify_graph,
)

__all__ = [
    "build_report",
    "create_verify_graph",
    "run_verification",
    "verify_graph",
]
