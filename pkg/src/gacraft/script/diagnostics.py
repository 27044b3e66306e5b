"""Source positions and problem reports shared by the script toolchain."""
from __future__ import annotations

from dataclasses import dataclass

ERROR = "error"
WARNING = "warning"


@dataclass(frozen=True)
class Span:
    """1-based line/column position plus a length in characters."""

    line: int
    col: int
    length: int = 1


@dataclass(frozen=True)
class Diagnostic:
    severity: str
    code: str
    message: str
    span: Span | None = None

    def format(self) -> str:
        where = f"{self.span.line}:{self.span.col}: " if self.span else ""
        return f"{where}{self.severity} {self.code}: {self.message}"

    def to_json(self) -> dict:
        out = {"severity": self.severity, "code": self.code, "message": self.message}
        if self.span is not None:
            out["span"] = {
                "line": self.span.line,
                "col": self.span.col,
                "length": self.span.length,
            }
        return out


def has_errors(diagnostics) -> bool:
    return any(d.severity == ERROR for d in diagnostics)
