"""Benchmark harness for the request-to-scene pipeline.

A dataset is a JSONL file where each line describes one natural language
task together with machine-checkable assertions about the outcome.  The
harness runs every case through the local planning pipeline and reports
per-case results plus an aggregate success rate.  Nothing here is random:
two runs over the same dataset produce identical reports.

Assertion kinds:

``executes``
    The request must plan, compile, and run without raising.
``object_exists``
    The final scene must contain exactly ``count`` objects of ``object`` kind.
``point_near``
    Some point in the scene must lie within ``tol`` of ``(x, y, z)``.
``on_all_spheres``
    Every point in the scene must satisfy every sphere's equation
    ``|p - c|^2 = r^2`` to within ``tol``.
``output_near``
    Re-executing the compiled program, the named scalar output must be
    within ``tol`` of ``value``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Sequence

from .agents import (
    AgentError,
    PipelineConfig,
    PipelineFailed,
    PlanRequest,
    UnrecognizedIntent,
    run_request,
)
from .codegen import RunError, execute, variable_value

DEFAULT_DATASET = Path(__file__).parent / "data" / "benchmark_cases.jsonl"

ORIGINS = ("paper", "extension")
ASSERTION_KINDS = ("executes", "object_exists", "point_near", "on_all_spheres", "output_near")


@dataclass(frozen=True)
class BenchCase:
    """One benchmark task: a request plus the checks its result must pass."""

    case_id: str
    origin: str
    category: str
    description: str
    formula: str = ""
    assertions: tuple[dict[str, Any], ...] = ()


@dataclass(frozen=True)
class CaseOutcome:
    """Result of running a single case. ``detail`` explains any failure."""

    case_id: str
    origin: str
    category: str
    ok: bool
    detail: str = ""


@dataclass(frozen=True)
class BenchmarkReport:
    """Aggregate outcome of a benchmark run."""

    total: int
    successes: int
    outcomes: tuple[CaseOutcome, ...]

    @property
    def success_rate(self) -> float:
        return self.successes / self.total if self.total else 0.0

    def by_origin(self) -> dict[str, dict[str, int]]:
        """Break successes down by where each case came from."""
        table: dict[str, dict[str, int]] = {}
        for outcome in self.outcomes:
            bucket = table.setdefault(outcome.origin, {"total": 0, "successes": 0})
            bucket["total"] += 1
            if outcome.ok:
                bucket["successes"] += 1
        return table

    def to_json(self) -> dict[str, Any]:
        return {
            "total": self.total,
            "successes": self.successes,
            "success_rate": self.success_rate,
            "by_origin": self.by_origin(),
            "cases": [
                {
                    "id": o.case_id,
                    "origin": o.origin,
                    "category": o.category,
                    "ok": o.ok,
                    "detail": o.detail,
                }
                for o in self.outcomes
            ],
        }


def _case_error(path: Path, lineno: int, message: str) -> ValueError:
    return ValueError(f"{path}: line {lineno}: {message}")


def load_dataset(path: str | Path = DEFAULT_DATASET) -> list[BenchCase]:
    """Parse a JSONL dataset, failing loudly with line numbers on bad input."""
    path = Path(path)
    cases: list[BenchCase] = []
    seen: set[str] = set()
    with path.open(encoding="utf-8") as handle:
        for lineno, raw in enumerate(handle, start=1):
            line = raw.strip()
            if not line:
                continue
            try:
                doc = json.loads(line)
            except json.JSONDecodeError as exc:
                raise _case_error(path, lineno, f"invalid JSON: {exc.msg}") from exc
            if not isinstance(doc, dict):
                raise _case_error(path, lineno, "expected a JSON object")
            for key in ("id", "origin", "category", "description"):
                if not isinstance(doc.get(key), str) or not doc[key]:
                    raise _case_error(path, lineno, f"missing or empty field {key!r}")
            if doc["origin"] not in ORIGINS:
                raise _case_error(path, lineno, f"unknown origin {doc['origin']!r}")
            if doc["id"] in seen:
                raise _case_error(path, lineno, f"duplicate case id {doc['id']!r}")
            seen.add(doc["id"])
            assertions = doc.get("assertions", [])
            if not isinstance(assertions, list) or not assertions:
                raise _case_error(path, lineno, "assertions must be a non-empty list")
            for assertion in assertions:
                if not isinstance(assertion, dict):
                    raise _case_error(path, lineno, "each assertion must be an object")
                kind = assertion.get("kind")
                if kind not in ASSERTION_KINDS:
                    raise _case_error(path, lineno, f"unknown assertion kind {kind!r}")
            cases.append(
                BenchCase(
                    case_id=doc["id"],
                    origin=doc["origin"],
                    category=doc["category"],
                    description=doc["description"],
                    formula=doc.get("formula", ""),
                    assertions=tuple(assertions),
                )
            )
    return cases


def _objects(scene: dict[str, Any], kind: str) -> list[dict[str, Any]]:
    return [obj for obj in scene.get("objects", []) if obj.get("kind") == kind]


def _check_object_exists(assertion: dict[str, Any], result: Any) -> str | None:
    kind = assertion["object"]
    want = assertion["count"]
    found = len(_objects(result.scene, kind))
    if found != want:
        return f"expected {want} {kind} object(s) in the scene, found {found}"
    return None


def _check_point_near(assertion: dict[str, Any], result: Any) -> str | None:
    target = (assertion["x"], assertion["y"], assertion["z"])
    tol = assertion.get("tol", 1e-9)
    best = None
    for obj in _objects(result.scene, "point"):
        params = obj.get("params", {})
        err = max(abs(params.get(axis, 0.0) - want) for axis, want in zip("xyz", target))
        if best is None or err < best:
            best = err
        if err <= tol:
            return None
    if best is None:
        return f"no point objects in the scene to match {target}"
    return f"no point within {tol} of {target} (closest off by {best:.3g})"


def _check_on_all_spheres(assertion: dict[str, Any], result: Any) -> str | None:
    tol = assertion.get("tol", 1e-9)
    points = _objects(result.scene, "point")
    spheres = _objects(result.scene, "sphere")
    if not points or not spheres:
        return "scene needs at least one point and one sphere for this check"
    for point in points:
        p = point["params"]
        for sphere in spheres:
            s = sphere["params"]
            dist2 = sum((p[a] - s["c" + a]) ** 2 for a in "xyz")
            residual = abs(dist2 - s["r"] ** 2)
            if residual > tol:
                return (
                    f"point {point['id']} misses sphere {sphere['id']} "
                    f"by {residual:.3g} (tol {tol})"
                )
    return None


def _check_output_near(assertion: dict[str, Any], result: Any) -> str | None:
    name = assertion["name"]
    want = assertion["value"]
    tol = assertion.get("tol", 1e-9)
    try:
        values, _ = execute(result.program, {})
        got = variable_value(result.program, name, values).coeff(0)
    except (RunError, KeyError) as exc:
        return f"could not read output {name!r}: {exc}"
    if abs(got - want) > tol:
        return f"output {name} = {got!r}, expected {want!r} within {tol}"
    return None


_CHECKS = {
    "executes": lambda assertion, result: None,
    "object_exists": _check_object_exists,
    "point_near": _check_point_near,
    "on_all_spheres": _check_on_all_spheres,
    "output_near": _check_output_near,
}


def run_case(case: BenchCase, config: PipelineConfig | None = None) -> CaseOutcome:
    """Plan, build, and execute one case, then apply its assertions."""
    request = PlanRequest(description=case.description, formula=case.formula)
    try:
        result = run_request(request, config=config)
    except (AgentError, PipelineFailed, UnrecognizedIntent) as exc:
        return CaseOutcome(case.case_id, case.origin, case.category, False, str(exc))
    for assertion in case.assertions:
        failure = _CHECKS[assertion["kind"]](assertion, result)
        if failure is not None:
            return CaseOutcome(case.case_id, case.origin, case.category, False, failure)
    return CaseOutcome(case.case_id, case.origin, case.category, True)


def bench(
    cases: Sequence[BenchCase] | None = None,
    config: PipelineConfig | None = None,
) -> BenchmarkReport:
    """Run every case and aggregate the outcomes into a report."""
    if cases is None:
        cases = load_dataset()
    if not cases:
        raise ValueError("benchmark dataset is empty")
    outcomes = tuple(run_case(case, config) for case in cases)
    successes = sum(1 for outcome in outcomes if outcome.ok)
    return BenchmarkReport(total=len(outcomes), successes=successes, outcomes=outcomes)
