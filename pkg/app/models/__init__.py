"""Value types and workflow state."""

from app.models.distribution import JointDistribution
from app.models.partition import NCPartition, Permutation
from app.models.power_series import NCSeries, SSeries, Word
from app.models.state import (
    IdentityResult,
    VerificationReport,
    VerifyState,
    get_initial_verify_state,
)

__all__ = [
    "IdentityResult",
    "JointDistribution",
    "NCPartition",
    "NCSeries",
    "Permutation",
    "SSeries",
    "VerificationReport",
    "VerifyState",
    "Word",
    "get_initial_verify_state",
]
