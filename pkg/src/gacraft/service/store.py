"""File-backed task persistence.

One task, one JSON file. Writes go to a temporary file in the same
directory followed by an atomic rename, so a crash mid-write never
corrupts an existing record. Unreadable files are skipped on listing
instead of taking the whole service down.
"""
from __future__ import annotations

import json
import logging
import os
import re
import tempfile
from pathlib import Path

log = logging.getLogger("gacraft.service")

_SAFE_ID = re.compile(r"[A-Za-z0-9_-]{1,64}")


class TaskStore:
    def __init__(self, root: str | Path):
        self.root = Path(root)
        self.tasks_dir = self.root / "tasks"
        self.tasks_dir.mkdir(parents=True, exist_ok=True)

    def _path(self, task_id: str) -> Path | None:
        if not _SAFE_ID.fullmatch(task_id):
            return None
        return self.tasks_dir / f"{task_id}.json"

    def save(self, record: dict) -> None:
        path = self._path(record["id"])
        if path is None:
            raise ValueError(f"unusable task id {record['id']!r}")
        fd, tmp = tempfile.mkstemp(dir=self.tasks_dir, suffix=".tmp")
        try:
            with os.fdopen(fd, "w", encoding="utf-8") as handle:
                json.dump(record, handle)
            os.replace(tmp, path)
        except BaseException:
            try:
                os.unlink(tmp)
            except OSError:
                pass
            raise

    def get(self, task_id: str) -> dict | None:
        path = self._path(task_id)
        if path is None:
            return None
        try:
            return json.loads(path.read_text(encoding="utf-8"))
        except FileNotFoundError:
            return None
        except (json.JSONDecodeError, UnicodeDecodeError):
            log.warning("task record %s is unreadable", path)
            return None

    def list(self) -> list[dict]:
        """All readable records, oldest first."""
        records = []
        for path in sorted(self.tasks_dir.glob("*.json")):
            try:
                records.append(json.loads(path.read_text(encoding="utf-8")))
            except (json.JSONDecodeError, UnicodeDecodeError):
                log.warning("skipping unreadable task record %s", path)
        records.sort(key=lambda r: (r.get("created", 0.0), r.get("id", "")))
        return records
