"""Data records shared by the planning and execution stages."""
from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum


class SubtaskCategory(Enum):
    """The five kinds of work a request decomposes into."""

    OBJECT_CREATION = "object_creation"
    ALGEBRAIC_OPERATION = "algebraic_operation"
    ELEMENT_OPERATION = "element_operation"
    TRANSFORMATION = "transformation"
    NUMERICAL = "numerical"


PHASES = ("observation", "thoughts", "action")


@dataclass(frozen=True)
class ReActStep:
    """One phase of an observe-think-act cycle.

    `seq` is a monotone sequence number standing in for a timestamp so that
    identical runs produce identical traces.
    """

    phase: str
    text: str
    seq: int

    def __post_init__(self):
        if self.phase not in PHASES:
            raise ValueError(f"unknown trace phase {self.phase!r}")


@dataclass(frozen=True)
class ReActTrace:
    """An ordered record of observe-think-act cycles."""

    steps: tuple[ReActStep, ...] = ()

    def __post_init__(self):
        for i, step in enumerate(self.steps):
            if step.phase != PHASES[i % 3]:
                raise ValueError(
                    f"trace step {i} has phase {step.phase!r}, "
                    f"expected {PHASES[i % 3]!r}"
                )

    def extended(self, observation: str, thoughts: str, action: str) -> "ReActTrace":
        """A new trace with one more complete cycle appended."""
        n = len(self.steps)
        return ReActTrace(self.steps + (
            ReActStep("observation", observation, n),
            ReActStep("thoughts", thoughts, n + 1),
            ReActStep("action", action, n + 2),
        ))


@dataclass(frozen=True)
class SubtaskRecord:
    """One unit of planned work.

    `task_description` is written in the small controlled sentence grammar
    that the analysis stage parses; `specific_values` carries the numeric
    inputs it mentions; `visualization` lists (variable, color text) pairs.
    """

    task_id: str
    task_name: str
    task_description: str
    variable_names: tuple[str, ...]
    category: SubtaskCategory
    code_language: str = "python"
    ga_type: str = "cga3d"
    specific_values: tuple[tuple[str, float], ...] = ()
    visualization: tuple[tuple[str, str], ...] = ()
    depends_on: tuple[str, ...] = ()

    def __post_init__(self):
        names = set(self.variable_names)
        for var, _color in self.visualization:
            if var not in names:
                raise ValueError(
                    f"visualization of {var!r} which {self.task_id} does not define"
                )

    @property
    def values_map(self) -> dict[str, float]:
        return dict(self.specific_values)


@dataclass(frozen=True)
class Plan:
    """An ordered decomposition of one request."""

    description: str
    formula: str
    space: str
    language: str
    subtasks: tuple[SubtaskRecord, ...]
    trace: ReActTrace = field(default_factory=ReActTrace)

    def __post_init__(self):
        if not self.subtasks:
            raise ValueError("a plan needs at least one subtask")
        seen: set[str] = set()
        for st in self.subtasks:
            for dep in st.depends_on:
                if dep not in seen:
                    raise ValueError(
                        f"{st.task_id} depends on {dep!r} which is not an earlier subtask"
                    )
            if st.task_id in seen:
                raise ValueError(f"duplicate task id {st.task_id!r}")
            seen.add(st.task_id)


@dataclass(frozen=True)
class PlanRequest:
    """What a caller asks for: a description plus optional formula text."""

    description: str
    formula: str = ""
    space: str = "cga3d"
    language: str = "python"


@dataclass(frozen=True)
class Param:
    """One slot of a registry function.

    kind is one of:
      "name"    reference to an existing variable
      "fresh"   new variable this call defines; `semantic` names its kind
                ("point", "sphere", ..., or "same" meaning the kind of the
                call's first name argument)
      "value"   numeric input; expands to an input name bound in the
                assignment section
      "literal" verbatim script text (rotor planes, angles)
    """

    name: str
    kind: str
    semantic: str = ""
    description: str = ""

    def __post_init__(self):
        if self.kind not in ("name", "fresh", "value", "literal"):
            raise ValueError(f"unknown parameter kind {self.kind!r}")


@dataclass(frozen=True)
class FunctionSpec:
    """A library entry the code stage can expand into script lines."""

    name: str
    category: SubtaskCategory
    description: str
    parameters: tuple[Param, ...]
    returns: str
    script_template: str

    def __post_init__(self):
        import re

        allowed = {p.name for p in self.parameters}
        used = set(re.findall(r"\{(\w+)\}", self.script_template))
        extra = used - allowed
        if extra:
            raise ValueError(
                f"{self.name}: template placeholders {sorted(extra)} are not parameters"
            )

    def param(self, name: str) -> Param:
        for p in self.parameters:
            if p.name == name:
                return p
        raise KeyError(name)


@dataclass(frozen=True)
class Call:
    """One registry function application with its argument tokens.

    args maps parameter names to token text: a variable name for "name"
    and "fresh" slots, an input name for "value" slots, verbatim text for
    "literal" slots.
    """

    operation: str
    args: tuple[tuple[str, str], ...]

    @property
    def args_map(self) -> dict[str, str]:
        return dict(self.args)


@dataclass(frozen=True)
class ExtractedElements:
    """What the analysis stage hands to the generation stages."""

    calls: tuple[Call, ...]
    values: tuple[tuple[str, float], ...]
    produced: tuple[tuple[str, str], ...]
    consumed: tuple[str, ...]
    visualization: tuple[tuple[str, str | None], ...]
    marked: tuple[str, ...] = ()
    reused: tuple[str, ...] = ()

    @property
    def values_map(self) -> dict[str, float]:
        return dict(self.values)

    @property
    def produced_map(self) -> dict[str, str]:
        return dict(self.produced)
