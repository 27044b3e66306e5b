"""Syntax tree for the geometry scripting language.

Every node carries a source Span for diagnostics, excluded from
equality so that a pretty-printed and reparsed tree compares equal
to the original.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .diagnostics import Span

_NOWHERE = Span(0, 0, 0)


@dataclass(frozen=True)
class Expr:
    pass


@dataclass(frozen=True)
class Num(Expr):
    value: float
    span: Span = field(default=_NOWHERE, compare=False)


@dataclass(frozen=True)
class Ident(Expr):
    name: str
    span: Span = field(default=_NOWHERE, compare=False)


@dataclass(frozen=True)
class BasisVec(Expr):
    """One of the reserved basis names: e1, e2, e3, einf, e0."""

    name: str
    span: Span = field(default=_NOWHERE, compare=False)


@dataclass(frozen=True)
class Unary(Expr):
    op: str  # "-" or "~"
    operand: Expr
    span: Span = field(default=_NOWHERE, compare=False)


@dataclass(frozen=True)
class Binary(Expr):
    op: str  # one of + - * . ^ /
    left: Expr
    right: Expr
    span: Span = field(default=_NOWHERE, compare=False)


@dataclass(frozen=True)
class Call(Expr):
    func: str
    args: tuple[Expr, ...]
    span: Span = field(default=_NOWHERE, compare=False)


@dataclass(frozen=True)
class ColorSpec:
    """Either a named color or an rgb triple with components in [0, 1]."""

    name: str | None = None
    rgb: tuple[float, float, float] | None = None
    span: Span = field(default=_NOWHERE, compare=False)


@dataclass(frozen=True)
class Stmt:
    pass


@dataclass(frozen=True)
class Assign(Stmt):
    name: str
    expr: Expr
    optimize: bool = False
    span: Span = field(default=_NOWHERE, compare=False)


@dataclass(frozen=True)
class Draw(Stmt):
    name: str
    color: ColorSpec | None = None
    span: Span = field(default=_NOWHERE, compare=False)


@dataclass(frozen=True)
class Comment(Stmt):
    text: str
    span: Span = field(default=_NOWHERE, compare=False)


@dataclass(frozen=True)
class Script:
    statements: tuple[Stmt, ...]
