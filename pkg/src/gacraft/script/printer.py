"""Canonical text form for scripts.

One statement per line, binary operators spaced, parentheses only
where the grammar needs them. Reparsing the output of `pretty`
reproduces the original tree (spans aside) for any tree the parser
can produce.
"""
from __future__ import annotations

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

_PREC_ADD = 1
_PREC_MUL = 2
_PREC_UNARY = 3
_PREC_ATOM = 4

_BINARY_PREC = {"+": _PREC_ADD, "-": _PREC_ADD, "*": _PREC_MUL, ".": _PREC_MUL,
                "^": _PREC_MUL, "/": _PREC_MUL}


def format_number(value: float) -> str:
    """Shortest decimal spelling the lexer can read back."""
    if value == int(value) and abs(value) < 1e15:
        return str(int(value))
    text = repr(value)
    if "e" in text or "E" in text:
        text = f"{value:.20f}".rstrip("0")
    return text


def _precedence(expr: Expr) -> int:
    if isinstance(expr, Binary):
        return _BINARY_PREC[expr.op]
    if isinstance(expr, Unary):
        return _PREC_UNARY
    return _PREC_ATOM


def format_expr(expr: Expr) -> str:
    if isinstance(expr, Num):
        return format_number(expr.value)
    if isinstance(expr, (Ident, BasisVec)):
        return expr.name
    if isinstance(expr, Unary):
        body = format_expr(expr.operand)
        if _precedence(expr.operand) < _PREC_UNARY:
            body = f"({body})"
        return expr.op + body
    if isinstance(expr, Binary):
        prec = _BINARY_PREC[expr.op]
        left = format_expr(expr.left)
        if _precedence(expr.left) < prec:
            left = f"({left})"
        right = format_expr(expr.right)
        if _precedence(expr.right) <= prec:
            right = f"({right})"
        return f"{left} {expr.op} {right}"
    if isinstance(expr, Call):
        args = ", ".join(format_expr(a) for a in expr.args)
        return f"{expr.func}({args})"
    raise TypeError(f"unhandled expression node {expr!r}")


def _format_color(color: ColorSpec) -> str:
    if color.name is not None:
        return color.name
    r, g, b = color.rgb
    return f"rgb({format_number(r)}, {format_number(g)}, {format_number(b)})"


def format_stmt(stmt: Stmt) -> str:
    if isinstance(stmt, Assign):
        mark = "?" if stmt.optimize else ""
        return f"{mark}{stmt.name} = {format_expr(stmt.expr)};"
    if isinstance(stmt, Draw):
        if stmt.color is None:
            return f":{stmt.name};"
        return f":{stmt.name} {_format_color(stmt.color)};"
    if isinstance(stmt, Comment):
        return f"//{stmt.text}"
    raise TypeError(f"unhandled statement node {stmt!r}")


def pretty(script: Script) -> str:
    """Render a script as canonical source text, newline terminated."""
    if not script.statements:
        return ""
    return "\n".join(format_stmt(s) for s in script.statements) + "\n"
