"""The HTTP application.

Task submissions are planned synchronously (so the caller learns about
unrecognizable requests and unreachable planning services right away)
and executed in the background; clients poll the task until its status
settles. Direct script compilation is synchronous.
"""
from __future__ import annotations

import logging
import os
import time
import uuid
from pathlib import Path

import httpx
from fastapi import BackgroundTasks, FastAPI, HTTPException
from fastapi.middleware.cors import CORSMiddleware

from .. import __version__
from ..agents import (
    BackendUnavailable,
    PipelineFailed,
    PlanRequest,
    PlannerBackend,
    SchemaViolation,
    UnrecognizedIntent,
    execute_plan,
    plan,
    plan_from_json,
    plan_to_json,
)
from ..agents.registry import load_registry, registry_to_json
from ..algebra import SPACES
from ..codegen import (
    CompileError,
    MissingInput,
    RunError,
    compile_script,
    emit_python,
    execute,
    outputs_of,
    scene_of,
)
from ..script import analyze
from .models import (
    CompileRequest,
    CompileResponse,
    HealthResponse,
    TaskSubmission,
    TaskSummary,
)
from .store import TaskStore

log = logging.getLogger("gacraft.service")

TERMINAL_STATUSES = ("succeeded", "failed")


def _diagnostics_json(diagnostics) -> list[dict]:
    return [d.to_json() for d in diagnostics]


def _run_task(store: TaskStore, task_id: str) -> None:
    record = store.get(task_id)
    if record is None:
        return
    record["status"] = "running"
    store.save(record)
    try:
        planned = plan_from_json(record["plan"])
        result = execute_plan(planned)
        results, _ = execute(result.program, {})
    except PipelineFailed as exc:
        record["status"] = "failed"
        record["error"] = {
            "message": str(exc),
            "subtask": exc.subtask_id,
            "retries_used": exc.retries_used,
            "diagnostics": _diagnostics_json(exc.diagnostics),
        }
    except Exception as exc:
        log.exception("task %s crashed", task_id)
        record["status"] = "failed"
        record["error"] = {"message": f"internal error: {exc}", "diagnostics": []}
    else:
        record["status"] = "succeeded"
        record["script"] = result.script.text
        record["code"] = result.code
        record["scene"] = result.scene
        record["outputs"] = outputs_of(result.program, results)
        record["warnings"] = _diagnostics_json(result.warnings)
        record["trace"] = [
            {"phase": step.phase, "text": step.text, "seq": step.seq}
            for step in result.trace.steps
        ]
    store.save(record)


def create_app(
    data_dir: str | Path | None = None,
    planner_url: str | None = None,
    planner_transport: httpx.BaseTransport | None = None,
) -> FastAPI:
    """Build the application.

    `data_dir` and `planner_url` fall back to the GACRAFT_DATA_DIR and
    GACRAFT_PLANNER_URL environment variables; when no planner URL is
    configured, planning runs in-process. `planner_transport` lets tests
    swap the HTTP transport used to reach an external planner.
    """
    if data_dir is None:
        data_dir = os.environ.get("GACRAFT_DATA_DIR", ".gacraft-data")
    if planner_url is None:
        planner_url = os.environ.get("GACRAFT_PLANNER_URL") or None

    store = TaskStore(data_dir)
    app = FastAPI(title="gacraft", version=__version__)
    app.state.store = store
    app.add_middleware(
        CORSMiddleware,
        allow_origins=["*"],
        allow_methods=["*"],
        allow_headers=["*"],
    )

    def make_plan(request: PlanRequest):
        if planner_url is None:
            return plan(request)
        backend = PlannerBackend(planner_url, transport=planner_transport)
        return backend.plan(request)

    @app.get("/api/health", response_model=HealthResponse)
    def health():
        return HealthResponse(status="ok", version=__version__)

    @app.get("/api/registry")
    def registry():
        return registry_to_json(load_registry())

    @app.post("/api/tasks", status_code=202)
    def submit_task(submission: TaskSubmission, background: BackgroundTasks):
        if submission.space not in SPACES:
            raise HTTPException(422, detail={
                "message": f"unknown space {submission.space!r}",
                "diagnostics": [],
            })
        request = PlanRequest(
            description=submission.description,
            formula=submission.formula,
            space=submission.space,
            language=submission.language,
        )
        try:
            planned = make_plan(request)
        except UnrecognizedIntent as exc:
            raise HTTPException(422, detail={
                "message": str(exc),
                "diagnostics": [
                    {"severity": "error", "code": "E401", "message": str(exc)}
                ],
            })
        except BackendUnavailable as exc:
            raise HTTPException(503, detail={"message": str(exc)})
        except SchemaViolation as exc:
            raise HTTPException(503, detail={
                "message": f"planning service returned a malformed plan: {exc}",
            })
        record = {
            "id": uuid.uuid4().hex[:12],
            "status": "queued",
            "created": time.time(),
            "request": submission.model_dump(),
            "plan": plan_to_json(planned),
            "error": None,
            "script": None,
            "code": None,
            "scene": None,
            "outputs": None,
            "warnings": [],
            "trace": [],
        }
        store.save(record)
        background.add_task(_run_task, store, record["id"])
        return record

    @app.get("/api/tasks")
    def list_tasks():
        return {
            "tasks": [
                TaskSummary(
                    id=r["id"],
                    status=r.get("status", "unknown"),
                    description=r.get("request", {}).get("description", ""),
                    created=r.get("created", 0.0),
                ).model_dump()
                for r in store.list()
            ]
        }

    def fetch(task_id: str) -> dict:
        record = store.get(task_id)
        if record is None:
            raise HTTPException(404, detail=f"no task {task_id!r}")
        return record

    @app.get("/api/tasks/{task_id}")
    def get_task(task_id: str):
        return fetch(task_id)

    def finished_artifact(task_id: str, field: str):
        record = fetch(task_id)
        if record.get("status") != "succeeded":
            raise HTTPException(400, detail={
                "message": f"task {task_id} is {record.get('status')}, "
                           f"its {field} is not available",
                "error": record.get("error"),
            })
        return record[field]

    @app.get("/api/tasks/{task_id}/scene")
    def get_scene(task_id: str):
        return finished_artifact(task_id, "scene")

    @app.get("/api/tasks/{task_id}/code")
    def get_code(task_id: str):
        return {
            "language": "python",
            "code": finished_artifact(task_id, "code"),
        }

    @app.post("/api/compile", response_model=CompileResponse)
    def compile_endpoint(request: CompileRequest):
        if request.space not in SPACES:
            raise HTTPException(422, detail={
                "message": f"unknown space {request.space!r}",
                "diagnostics": [],
            })
        analysis = analyze(request.script)
        if not analysis.ok:
            raise HTTPException(422, detail={
                "message": "the script does not validate",
                "diagnostics": _diagnostics_json(analysis.diagnostics),
            })
        try:
            program = compile_script(analysis.script, space=request.space)
        except CompileError as exc:
            raise HTTPException(422, detail={
                "message": str(exc),
                "diagnostics": [exc.to_diagnostic().to_json()],
            })
        try:
            results, run_warnings = execute(program, request.bindings)
        except MissingInput as exc:
            raise HTTPException(422, detail={
                "message": str(exc), "diagnostics": [],
            })
        except RunError as exc:
            raise HTTPException(422, detail={
                "message": str(exc),
                "diagnostics": [
                    {"severity": "error", "code": exc.code, "message": str(exc)}
                ],
            })
        scene, scene_warnings = scene_of(program, results)
        warnings = (
            list(analysis.diagnostics) + list(run_warnings) + list(scene_warnings)
        )
        return CompileResponse(
            code=emit_python(program),
            scene=scene,
            inputs=dict(program.inputs),
            outputs=outputs_of(program, results),
            warnings=_diagnostics_json(warnings),
        )

    return app
