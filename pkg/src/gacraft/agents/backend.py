"""HTTP planning backend.

The pipeline can delegate plan construction to an external service that
speaks a small JSON contract: it receives the request fields plus a
schema version, and answers with subtask records and a reasoning trace.
Everything coming back is checked field by field, so a malformed reply
is reported as a SchemaViolation naming the offending path instead of
surfacing as a random attribute error later.
"""
from __future__ import annotations

import httpx

from .records import (
    Plan,
    PlanRequest,
    ReActTrace,
    SubtaskCategory,
    SubtaskRecord,
)

SCHEMA_VERSION = "1"


class BackendUnavailable(Exception):
    """The planning service could not be reached or answered non-200."""

    code = "E406"
    agent = "planner_backend"


class SchemaViolation(Exception):
    """The planning service answered with a malformed document."""

    code = "E405"
    agent = "planner_backend"

    def __init__(self, path: str, message: str):
        super().__init__(f"{path}: {message}")
        self.path = path


def _expect(doc, path: str, key: str, kind, kind_name: str):
    if not isinstance(doc, dict):
        raise SchemaViolation(path or "response", "expected an object")
    here = f"{path}.{key}" if path else key
    if key not in doc:
        raise SchemaViolation(here, "missing field")
    value = doc[key]
    if not isinstance(value, kind) or isinstance(value, bool):
        raise SchemaViolation(here, f"expected {kind_name}")
    return value


def _str(doc, path, key):
    return _expect(doc, path, key, str, "string")


def _list(doc, path, key):
    return _expect(doc, path, key, list, "array")


def _pairs(doc, path, key, value_kind, kind_name):
    raw = _expect(doc, path, key, dict, "object")
    out = []
    for k, v in raw.items():
        if not isinstance(v, value_kind) or isinstance(v, bool):
            raise SchemaViolation(f"{path}.{key}.{k}", f"expected {kind_name}")
        out.append((k, v))
    return tuple(out)


def _subtask_from_json(doc, path: str) -> SubtaskRecord:
    category_text = _str(doc, path, "category")
    try:
        category = SubtaskCategory(category_text)
    except ValueError:
        raise SchemaViolation(
            f"{path}.category", f"unknown category {category_text!r}"
        )
    names = _list(doc, path, "variable_names")
    for i, name in enumerate(names):
        if not isinstance(name, str):
            raise SchemaViolation(f"{path}.variable_names[{i}]", "expected string")
    values = _pairs(doc, path, "specific_values", (int, float), "number") \
        if "specific_values" in doc else ()
    vis = []
    if "visualization" in doc:
        for i, entry in enumerate(_list(doc, path, "visualization")):
            here = f"{path}.visualization[{i}]"
            if (
                not isinstance(entry, list)
                or len(entry) != 2
                or not isinstance(entry[0], str)
                or not (entry[1] is None or isinstance(entry[1], str))
            ):
                raise SchemaViolation(here, "expected [name, color] pair")
            vis.append((entry[0], entry[1]))
    deps = []
    if "depends_on" in doc:
        for i, dep in enumerate(_list(doc, path, "depends_on")):
            if not isinstance(dep, str):
                raise SchemaViolation(f"{path}.depends_on[{i}]", "expected string")
            deps.append(dep)
    try:
        return SubtaskRecord(
            task_id=_str(doc, path, "task_id"),
            task_name=_str(doc, path, "task_name"),
            task_description=_str(doc, path, "task_description"),
            variable_names=tuple(names),
            category=category,
            code_language=_str(doc, path, "code_language"),
            ga_type=_str(doc, path, "ga_type"),
            specific_values=tuple((k, float(v)) for k, v in values),
            visualization=tuple(vis),
            depends_on=tuple(deps),
        )
    except ValueError as exc:
        raise SchemaViolation(path, str(exc))


def _trace_from_json(entries, path: str) -> ReActTrace:
    trace = ReActTrace()
    cycle: list[str] = []
    for i, entry in enumerate(entries):
        here = f"{path}[{i}]"
        phase = _str(entry, here, "phase")
        text = _str(entry, here, "text")
        expected = ("observation", "thoughts", "action")[len(cycle)]
        if phase != expected:
            raise SchemaViolation(f"{here}.phase", f"expected {expected!r}")
        cycle.append(text)
        if len(cycle) == 3:
            trace = trace.extended(*cycle)
            cycle = []
    if cycle:
        raise SchemaViolation(path, "trace ends mid-cycle")
    return trace


def plan_from_json(doc, request: PlanRequest | None = None) -> Plan:
    """Build a plan from a response document, filling request-level
    fields from the originating request when the document omits them."""
    if not isinstance(doc, dict):
        raise SchemaViolation("response", "expected an object")
    subtasks = []
    for i, entry in enumerate(_list(doc, "", "subtasks")):
        subtasks.append(_subtask_from_json(entry, f"subtasks[{i}]"))
    trace = _trace_from_json(
        _list(doc, "", "trace") if "trace" in doc else [], "trace"
    )

    def field(key: str, fallback: str) -> str:
        if key in doc:
            return _str(doc, "", key)
        return fallback

    base = request or PlanRequest(description="")
    try:
        return Plan(
            description=field("description", base.description),
            formula=field("formula", base.formula),
            space=field("space", base.space),
            language=field("language", base.language),
            subtasks=tuple(subtasks),
            trace=trace,
        )
    except ValueError as exc:
        raise SchemaViolation("subtasks", str(exc))


def plan_to_json(plan: Plan) -> dict:
    """Serialize a plan to the wire document shape."""
    return {
        "description": plan.description,
        "formula": plan.formula,
        "space": plan.space,
        "language": plan.language,
        "subtasks": [
            {
                "task_id": s.task_id,
                "task_name": s.task_name,
                "task_description": s.task_description,
                "variable_names": list(s.variable_names),
                "category": s.category.value,
                "code_language": s.code_language,
                "ga_type": s.ga_type,
                "specific_values": {k: v for k, v in s.specific_values},
                "visualization": [list(pair) for pair in s.visualization],
                "depends_on": list(s.depends_on),
            }
            for s in plan.subtasks
        ],
        "trace": [
            {"phase": step.phase, "text": step.text, "seq": step.seq}
            for step in plan.trace.steps
        ],
    }


class PlannerBackend:
    """Client for an external planning service."""

    def __init__(
        self,
        url: str,
        timeout: float = 10.0,
        transport: httpx.BaseTransport | None = None,
    ):
        self.url = url
        self.timeout = timeout
        self.transport = transport

    def plan(self, request: PlanRequest) -> Plan:
        payload = {
            "description": request.description,
            "formula": request.formula,
            "space": request.space,
            "language": request.language,
            "subtask_schema_version": SCHEMA_VERSION,
        }
        try:
            with httpx.Client(
                timeout=self.timeout, transport=self.transport
            ) as client:
                response = client.post(self.url, json=payload)
        except httpx.HTTPError as exc:
            raise BackendUnavailable(
                f"planning service at {self.url} unreachable: {exc}"
            )
        if response.status_code != 200:
            raise BackendUnavailable(
                f"planning service at {self.url} answered "
                f"{response.status_code}"
            )
        try:
            doc = response.json()
        except ValueError:
            raise SchemaViolation("response", "body is not JSON")
        return plan_from_json(doc, request)


def external_plan(
    request: PlanRequest,
    url: str,
    timeout: float = 10.0,
    transport: httpx.BaseTransport | None = None,
) -> Plan:
    """Plan a request through the service at `url`."""
    return PlannerBackend(url, timeout=timeout, transport=transport).plan(request)
