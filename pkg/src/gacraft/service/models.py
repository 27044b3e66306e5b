"""Wire models for the HTTP service."""
from __future__ import annotations

from pydantic import BaseModel, Field


class TaskSubmission(BaseModel):
    """A natural language request to plan, compile, and execute."""

    description: str = Field(min_length=1)
    formula: str = ""
    space: str = "cga3d"
    language: str = "python"


class CompileRequest(BaseModel):
    """Script text to compile and run directly, bypassing the planner.

    `bindings` overrides input values discovered in the script, which is
    how a client re-runs the same program with different parameters.
    """

    script: str = Field(min_length=1)
    space: str = "cga3d"
    bindings: dict[str, float] = Field(default_factory=dict)


class CompileResponse(BaseModel):
    """Everything a client needs to render and steer a compiled script."""

    code: str
    scene: dict
    inputs: dict[str, float | None]
    outputs: dict[str, dict[str, float]]
    warnings: list[dict]


class TaskSummary(BaseModel):
    id: str
    status: str
    description: str
    created: float


class HealthResponse(BaseModel):
    status: str
    version: str
