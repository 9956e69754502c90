"""State and result types for the verification workflow.

- IdentityResult: outcome of checking one identity
- VerificationReport: the machine-readable report of a run
- VerifyState: state carried through the verification graph
"""

from typing import Any, Literal, Optional, TypedDict

from pydantic import BaseModel, Field

Target = Literal["thm14", "app16", "app110", "app111", "app113", "lemma410"]

TARGETS: tuple[str, ...] = ("thm14", "app16", "app110", "app111", "app113", "lemma410")


class Counterexample(BaseModel):
    """The first place where the two sides of an identity differ."""

    label: str = Field(description="Word or instance where the sides differ")
    lhs: str
    rhs: str


class IdentityResult(BaseModel):
    """Outcome of one identity check."""

    name: str
    passed: bool
    checked: int = Field(description="Number of coefficients or instances compared")
    counterexample: Optional[Counterexample] = None

    def line(self) -> str:
        verdict = "PASS" if self.passed else "FAIL"
        text = f"{verdict} {self.name} ({self.checked} checked)"
        if self.counterexample is not None:
            c = self.counterexample
            text += f": first mismatch at {c.label}: lhs={c.lhs} rhs={c.rhs}"
        return text


class VerificationReport(BaseModel):
    target: str
    degree: int
    passed: bool
    identities: list[IdentityResult] = Field(default_factory=list)


class VerifyState(TypedDict, total=False):
    """State for the verification graph."""

    status: Literal["loading", "running", "passed", "failed"]
    target: Target
    degree: int
    # Raw CLI-level parameters: paths, scalars as strings, seed, n
    params: dict[str, Any]
    # Plain input data keyed by role: distribution documents for "a" and "b",
    # "p/q" strings for "s" and "alpha", ints for "p" and "seed"
    inputs: dict[str, Any]
    # Names of the checks still to run
    pending: list[str]
    results: list[IdentityResult]
    report: list[str]


def get_initial_verify_state(target: str, degree: int, params: Optional[dict[str, Any]] = None) -> VerifyState:
    """Initial state for one verification run."""
    return {
        "status": "loading",
        "target": target,
        "degree": degree,
        "params": dict(params or {}),
        "inputs": {},
        "pending": [],
        "results": [],
        "report": [],
    }
