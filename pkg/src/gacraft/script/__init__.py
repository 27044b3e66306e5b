"""Parsing, checking, and printing for the geometry scripting language."""
from __future__ import annotations

from dataclasses import dataclass, field

from .diagnostics import ERROR, WARNING, Diagnostic, Span, has_errors
from .lexer import LexError, Token, lex
from .nodes import (
    Assign,
    BasisVec,
    Binary,
    Call,
    ColorSpec,
    Comment,
    Draw,
    Expr,
    Ident,
    Num,
    Script,
    Stmt,
    Unary,
)
from .parser import BASIS_NAMES, ParseError, parse
from .printer import format_expr, format_number, format_stmt, pretty
from .validator import (
    BUILTINS,
    COLOR_NAMES,
    COLOR_VALUES,
    MULTIVECTOR,
    RESERVED,
    SCALAR,
    Signature,
    ValidationResult,
    validate,
)


@dataclass
class AnalysisResult:
    """Outcome of lexing, parsing, and validating one source text."""

    script: Script | None
    diagnostics: list[Diagnostic] = field(default_factory=list)
    inputs: tuple[str, ...] = ()
    kinds: dict[str, str] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return self.script is not None and not has_errors(self.diagnostics)


def analyze(source: str) -> AnalysisResult:
    """Parse and validate source text, never raising on bad input."""
    try:
        script = parse(source)
    except LexError as exc:
        return AnalysisResult(None, [Diagnostic(ERROR, "E000", exc.message, exc.span)])
    except ParseError as exc:
        return AnalysisResult(None, [Diagnostic(ERROR, "E001", exc.message, exc.span)])
    result = validate(script)
    return AnalysisResult(script, result.diagnostics, result.inputs, result.kinds)


__all__ = [
    "AnalysisResult",
    "Assign",
    "BASIS_NAMES",
    "BUILTINS",
    "BasisVec",
    "Binary",
    "COLOR_NAMES",
    "COLOR_VALUES",
    "Call",
    "ColorSpec",
    "Comment",
    "Diagnostic",
    "Draw",
    "ERROR",
    "Expr",
    "Ident",
    "LexError",
    "MULTIVECTOR",
    "Num",
    "ParseError",
    "RESERVED",
    "SCALAR",
    "Script",
    "Signature",
    "Span",
    "Stmt",
    "Token",
    "Unary",
    "ValidationResult",
    "WARNING",
    "analyze",
    "format_expr",
    "format_number",
    "format_stmt",
    "has_errors",
    "lex",
    "parse",
    "pretty",
    "validate",
]
