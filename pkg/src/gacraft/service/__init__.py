"""HTTP service exposing the planner, compiler, and task store."""
from .app import create_app
from .models import CompileRequest, CompileResponse, HealthResponse, TaskSubmission
from .store import TaskStore

__all__ = [
    "CompileRequest",
    "CompileResponse",
    "HealthResponse",
    "TaskStore",
    "TaskSubmission",
    "create_app",
]
