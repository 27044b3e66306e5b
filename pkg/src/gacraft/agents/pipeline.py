"""Plan execution.

Runs each subtask through the worker agents, validating after every
step. When validation fails, the verdict names one agent; that agent is
rerun with the error text as feedback, at most `max_retries` times, and
the whole run aborts with collected diagnostics when the budget is
spent. The finished script is then compiled, executed, and turned into
a scene, so a result always carries artifacts from every layer.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field, replace

from ..codegen import (
    CompileError,
    RunError,
    compile_script,
    emit_python,
    execute,
    scene_of,
)
from ..script.diagnostics import ERROR, Diagnostic
from .planner import plan as plan_request
from .records import Plan, PlanRequest, SubtaskCategory
from .registry import Registry, load_registry
from .workers import (
    AgentError,
    FinalScript,
    analysis_agent,
    assignment_agent,
    code_agent,
    format_agent,
    validate_agent,
    visualization_agent,
)

MAX_RETRIES = 2

DRAWABLE_KINDS = frozenset({"point", "sphere", "plane", "line", "circle"})

_AUTO_DRAW_CATEGORIES = frozenset(
    {
        SubtaskCategory.OBJECT_CREATION,
        SubtaskCategory.ELEMENT_OPERATION,
        SubtaskCategory.TRANSFORMATION,
    }
)

_NAME = re.compile(r"[A-Za-z][A-Za-z0-9_]*")


@dataclass(frozen=True)
class PipelineConfig:
    """Knobs for plan execution; the defaults match production use."""

    registry: Registry | None = None
    draw_template: str = ":{name} {color};"
    chaining: bool = True
    max_retries: int = MAX_RETRIES


@dataclass(frozen=True)
class SubtaskOutcome:
    """Everything one subtask contributed to the final script."""

    record: object
    elements: object
    fragment: str
    assignments: tuple[str, ...]
    draws: tuple[str, ...]
    retries: int


@dataclass(frozen=True)
class PipelineResult:
    """Artifacts of a successful run, from plan to rendered scene."""

    plan: Plan
    script: FinalScript
    program: object
    code: str
    scene: dict
    warnings: tuple
    trace: object
    outcomes: tuple[SubtaskOutcome, ...]


class PipelineFailed(Exception):
    """The pipeline gave up; diagnostics explain the last attempt."""

    def __init__(self, subtask_id: str, diagnostics, retries_used: int = 0):
        self.subtask_id = subtask_id
        self.diagnostics = tuple(diagnostics)
        self.retries_used = retries_used
        detail = "; ".join(
            f"{d.code}: {d.message}" for d in self.diagnostics
        ) or "no diagnostics"
        super().__init__(
            f"pipeline failed at {subtask_id} after {retries_used} "
            f"retries: {detail}"
        )


def _agent_diagnostic(exc: AgentError) -> Diagnostic:
    return Diagnostic(ERROR, exc.code, str(exc))


def execute_plan(plan: Plan, config: PipelineConfig | None = None) -> PipelineResult:
    """Run every subtask through the agents, then compile and execute
    the assembled script."""
    cfg = config or PipelineConfig()
    registry = cfg.registry if cfg.registry is not None else load_registry()

    context: dict[str, str] = {}
    assign_lines: list[str] = []
    comp_lines: list[str] = []
    draw_lines: list[str] = []
    outcomes: list[SubtaskOutcome] = []
    trace = plan.trace

    for index, subtask in enumerate(plan.subtasks):
        try:
            elements = analysis_agent(subtask, context)
        except AgentError as exc:
            raise PipelineFailed(subtask.task_id, [_agent_diagnostic(exc)])

        elements = _decorate_terminals(elements, subtask, plan, index)

        feedback: dict[str, list[str]] = {
            "code_agent": [],
            "assignment_agent": [],
            "visualization_agent": [],
        }
        retries = 0
        while True:
            try:
                fragment = code_agent(
                    elements, registry, tuple(feedback["code_agent"])
                )
                assigns = assignment_agent(
                    elements, fragment, tuple(feedback["assignment_agent"])
                )
                draws = visualization_agent(
                    elements,
                    cfg.draw_template,
                    tuple(feedback["visualization_agent"]),
                )
                if cfg.chaining:
                    candidate = format_agent(
                        assign_lines + assigns,
                        comp_lines + [fragment],
                        draw_lines + draws,
                    )
                else:
                    candidate = format_agent(assigns, [fragment], draws)
                verdict = validate_agent(candidate)
                diagnostics = verdict.diagnostics
                ok = verdict.ok
                blamed = verdict.blamed_agent
            except AgentError as exc:
                diagnostics = (_agent_diagnostic(exc),)
                ok = False
                blamed = exc.agent
            if ok:
                break
            if retries >= cfg.max_retries:
                raise PipelineFailed(subtask.task_id, diagnostics, retries)
            message = diagnostics[0].message if diagnostics else "unknown error"
            feedback.setdefault(blamed, []).append(message)
            retries += 1

        assign_lines.extend(assigns)
        comp_lines.extend(fragment.split("\n"))
        draw_lines.extend(draws)
        context.update(dict(elements.produced))
        outcomes.append(
            SubtaskOutcome(
                record=subtask,
                elements=elements,
                fragment=fragment,
                assignments=tuple(assigns),
                draws=tuple(draws),
                retries=retries,
            )
        )
        note = "on the first attempt" if retries == 0 else (
            f"after {retries} " + ("retry" if retries == 1 else "retries")
        )
        trace = trace.extended(
            f"subtask {subtask.task_id} extracted {len(elements.calls)} "
            f"operations, {len(assigns)} bindings, {len(draws)} draws",
            f"the assembled script validated {note}",
            f"appended subtask {subtask.task_id} statements to the script",
        )

    final = format_agent(assign_lines, comp_lines, draw_lines)
    verdict = validate_agent(final)
    if not verdict.ok:
        raise PipelineFailed("final", verdict.diagnostics)

    try:
        program = compile_script(
            _parsed(final.text), space=plan.space
        )
    except CompileError as exc:
        raise PipelineFailed("compile", [exc.to_diagnostic()])
    try:
        results, run_warnings = execute(program, {})
    except RunError as exc:
        raise PipelineFailed(
            "execute",
            [Diagnostic(ERROR, exc.code, exc.message)],
        )
    scene, scene_warnings = scene_of(program, results)
    code = emit_python(program)
    warnings = tuple(verdict.diagnostics) + tuple(run_warnings) + tuple(
        scene_warnings
    )
    trace = trace.extended(
        f"final script has {len(final.text.splitlines())} statements",
        f"compilation produced {len(program.steps)} numeric steps",
        f"emitted {plan.language} code and a scene with "
        f"{len(scene['objects'])} objects",
    )
    return PipelineResult(
        plan=plan,
        script=final,
        program=program,
        code=code,
        scene=scene,
        warnings=warnings,
        trace=trace,
        outcomes=tuple(outcomes),
    )


def _parsed(text: str):
    from ..script import parse

    return parse(text)


def _decorate_terminals(elements, subtask, plan: Plan, index: int):
    """Add draws for terminal drawable objects and output marks for the
    rest, so every end result of the plan is observable."""
    later: set[str] = set()
    for later_subtask in plan.subtasks[index + 1:]:
        later.update(_NAME.findall(later_subtask.task_description))
    explicit = {name for name, _ in elements.visualization}
    vis = list(elements.visualization)
    marked: list[str] = []
    for name, kind in elements.produced:
        if name in later or name in elements.reused:
            continue
        if name in explicit:
            continue
        if (
            plan.space == "cga3d"
            and kind in DRAWABLE_KINDS
            and subtask.category in _AUTO_DRAW_CATEGORIES
        ):
            vis.append((name, None))
        else:
            marked.append(name)
    return replace(
        elements, visualization=tuple(vis), marked=tuple(marked)
    )


def run_request(
    request: PlanRequest,
    config: PipelineConfig | None = None,
    backend=None,
) -> PipelineResult:
    """Plan a request, locally or through a backend, and execute it."""
    if backend is None:
        planned = plan_request(request)
    else:
        planned = backend.plan(request)
    return execute_plan(planned, config)
