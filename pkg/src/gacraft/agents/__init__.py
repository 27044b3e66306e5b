"""Deterministic multi-stage pipeline turning task descriptions into scenes.

A request is decomposed into categorized subtask records, each subtask is
analyzed into registry function calls, worker stages expand those calls into
script sections, a validation stage blames and retries faulty sections, and
the final script is compiled and executed into a scene document.
"""
from .records import (
    Call,
    ExtractedElements,
    FunctionSpec,
    Param,
    Plan,
    PlanRequest,
    ReActStep,
    ReActTrace,
    SubtaskCategory,
    SubtaskRecord,
)
from .registry import Registry, load_registry, registry_from_json
from .planner import UnrecognizedIntent, plan
from .workers import (
    AgentError,
    FinalScript,
    MissingValue,
    NoMatchingFunction,
    UnknownColor,
    Verdict,
    analysis_agent,
    assignment_agent,
    code_agent,
    format_agent,
    validate_agent,
    visualization_agent,
)
from .pipeline import (
    MAX_RETRIES,
    PipelineConfig,
    PipelineFailed,
    PipelineResult,
    SubtaskOutcome,
    execute_plan,
    run_request,
)
from .backend import (
    BackendUnavailable,
    PlannerBackend,
    SchemaViolation,
    external_plan,
    plan_from_json,
    plan_to_json,
)

__all__ = [
    "AgentError",
    "BackendUnavailable",
    "Call",
    "ExtractedElements",
    "FinalScript",
    "FunctionSpec",
    "MAX_RETRIES",
    "MissingValue",
    "NoMatchingFunction",
    "Param",
    "Plan",
    "PlanRequest",
    "PlannerBackend",
    "PipelineConfig",
    "PipelineFailed",
    "PipelineResult",
    "ReActStep",
    "ReActTrace",
    "Registry",
    "SchemaViolation",
    "SubtaskCategory",
    "SubtaskOutcome",
    "SubtaskRecord",
    "UnknownColor",
    "UnrecognizedIntent",
    "Verdict",
    "analysis_agent",
    "assignment_agent",
    "code_agent",
    "execute_plan",
    "external_plan",
    "format_agent",
    "load_registry",
    "plan",
    "plan_from_json",
    "plan_to_json",
    "registry_from_json",
    "run_request",
    "validate_agent",
    "visualization_agent",
]
