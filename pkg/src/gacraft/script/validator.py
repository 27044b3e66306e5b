"""Static checks for parsed scripts.

The central rule concerns undefined identifiers. In a multivector
position they are errors; in a numeric position (a scalar argument of
a builtin, or arithmetic feeding one) they become program inputs that
the caller binds at run time. Everything else is bookkeeping: single
assignment, reserved names, function arity, draw targets, colors.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .diagnostics import ERROR, Diagnostic, Span
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
    Unary,
)
from .parser import BASIS_NAMES

SCALAR = "s"
MULTIVECTOR = "m"


@dataclass(frozen=True)
class Signature:
    params: tuple[str, ...]
    returns: str


BUILTINS: dict[str, Signature] = {
    "sqrt": Signature((SCALAR,), SCALAR),
    "abs": Signature((SCALAR,), SCALAR),
    "norm": Signature((MULTIVECTOR,), SCALAR),
    "reverse": Signature((MULTIVECTOR,), MULTIVECTOR),
    "dual": Signature((MULTIVECTOR,), MULTIVECTOR),
    "inverse": Signature((MULTIVECTOR,), MULTIVECTOR),
    "normalize": Signature((MULTIVECTOR,), MULTIVECTOR),
    "createPoint": Signature((SCALAR,) * 3, MULTIVECTOR),
    "createSphere": Signature((SCALAR,) * 4, MULTIVECTOR),
    "createPlane": Signature((SCALAR,) * 4, MULTIVECTOR),
    "translator": Signature((SCALAR,) * 3, MULTIVECTOR),
    "rotor": Signature((MULTIVECTOR, SCALAR), MULTIVECTOR),
    "project": Signature((MULTIVECTOR, MULTIVECTOR), MULTIVECTOR),
    "reflect": Signature((MULTIVECTOR, MULTIVECTOR), MULTIVECTOR),
    "pairPointA": Signature((MULTIVECTOR,), MULTIVECTOR),
    "pairPointB": Signature((MULTIVECTOR,), MULTIVECTOR),
}

COLOR_VALUES: dict[str, tuple[float, float, float]] = {
    "black": (0.0, 0.0, 0.0),
    "white": (1.0, 1.0, 1.0),
    "red": (1.0, 0.0, 0.0),
    "green": (0.0, 1.0, 0.0),
    "blue": (0.0, 0.0, 1.0),
    "yellow": (1.0, 1.0, 0.0),
    "cyan": (0.0, 1.0, 1.0),
    "magenta": (1.0, 0.0, 1.0),
}

COLOR_NAMES = tuple(COLOR_VALUES)

RESERVED = set(BASIS_NAMES) | set(BUILTINS) | {"rgb"}


@dataclass
class ValidationResult:
    diagnostics: list[Diagnostic] = field(default_factory=list)
    inputs: tuple[str, ...] = ()
    kinds: dict[str, str] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return not any(d.severity == ERROR for d in self.diagnostics)


class _Checker:
    def __init__(self, script: Script):
        self.script = script
        self.diags: list[Diagnostic] = []
        self.kinds: dict[str, str] = {}
        self.origin: dict[str, str] = {}  # "assign" or "input"
        self.inputs: list[str] = []
        self.assigned_names = {
            s.name for s in script.statements if isinstance(s, Assign)
        }

    def error(self, code: str, message: str, span: Span) -> None:
        self.diags.append(Diagnostic(ERROR, code, message, span))

    def run(self) -> ValidationResult:
        for stmt in self.script.statements:
            if isinstance(stmt, Comment):
                continue
            if isinstance(stmt, Assign):
                self._assign(stmt)
            elif isinstance(stmt, Draw):
                self._draw(stmt)
        return ValidationResult(self.diags, tuple(self.inputs), self.kinds)

    def _assign(self, stmt: Assign) -> None:
        if stmt.name in RESERVED:
            self.error(
                "E106", f"{stmt.name!r} is a reserved name and cannot be assigned",
                stmt.span,
            )
        elif stmt.name in self.kinds:
            if self.origin.get(stmt.name) == "input":
                self.error(
                    "E111",
                    f"{stmt.name!r} was already read as an input above; "
                    "move this assignment before its first use",
                    stmt.span,
                )
            else:
                self.error(
                    "E109", f"{stmt.name!r} is assigned more than once", stmt.span
                )
        kind = self._check(stmt.expr, MULTIVECTOR)
        if stmt.name not in self.kinds:
            self.kinds[stmt.name] = kind
            self.origin[stmt.name] = "assign"

    def _draw(self, stmt: Draw) -> None:
        if stmt.name not in self.kinds:
            self.error("E104", f"cannot draw undefined variable {stmt.name!r}", stmt.span)
        if stmt.color is not None:
            self._color(stmt.color)

    def _color(self, color: ColorSpec) -> None:
        if color.name is not None and color.name not in COLOR_VALUES:
            named = ", ".join(COLOR_NAMES)
            self.error(
                "E110", f"unknown color {color.name!r} (named colors: {named})",
                color.span,
            )
        if color.rgb is not None:
            for c in color.rgb:
                if not 0.0 <= c <= 1.0:
                    self.error(
                        "E105", f"rgb component {c} is outside [0, 1]", color.span
                    )

    # ------------------------------------------------------------------
    # expression checking; returns the inferred kind

    def _check(self, expr: Expr, ctx: str) -> str:
        if isinstance(expr, Num):
            return SCALAR
        if isinstance(expr, BasisVec):
            if ctx == SCALAR:
                self.error(
                    "E103", f"basis vector {expr.name} used where a number is required",
                    expr.span,
                )
            return MULTIVECTOR
        if isinstance(expr, Ident):
            return self._ident(expr, ctx)
        if isinstance(expr, Unary):
            if expr.op == "~":
                if ctx == SCALAR:
                    self.error(
                        "E103", "reverse (~) used where a number is required", expr.span
                    )
                self._check(expr.operand, MULTIVECTOR)
                return MULTIVECTOR
            return self._check(expr.operand, ctx)
        if isinstance(expr, Binary):
            if expr.op in ("^", "."):
                # products of multivectors may well be scalar (a point
                # contracted on a point encodes their distance), so these
                # are allowed in numeric positions; the compiler rejects
                # them there only if grade parts actually survive
                lk = self._check(expr.left, MULTIVECTOR)
                rk = self._check(expr.right, MULTIVECTOR)
                return SCALAR if lk == rk == SCALAR else MULTIVECTOR
            lk = self._check(expr.left, ctx)
            rk = self._check(expr.right, ctx)
            return SCALAR if lk == rk == SCALAR else MULTIVECTOR
        if isinstance(expr, Call):
            return self._call(expr, ctx)
        raise TypeError(f"unhandled expression node {expr!r}")

    def _ident(self, expr: Ident, ctx: str) -> str:
        if expr.name in self.kinds:
            kind = self.kinds[expr.name]
            if ctx == SCALAR and kind != SCALAR:
                self.error(
                    "E103",
                    f"{expr.name!r} is a multivector but a number is required here",
                    expr.span,
                )
            return kind
        if expr.name in RESERVED:
            self.error(
                "E102",
                f"{expr.name!r} is a function; call it with arguments",
                expr.span,
            )
            return MULTIVECTOR
        if ctx == SCALAR:
            if expr.name in self.assigned_names:
                self.error(
                    "E111",
                    f"{expr.name!r} is used before its assignment",
                    expr.span,
                )
                return SCALAR
            if expr.name not in self.inputs:
                self.inputs.append(expr.name)
                self.kinds[expr.name] = SCALAR
                self.origin[expr.name] = "input"
            return SCALAR
        if expr.name in self.assigned_names:
            self.error(
                "E102", f"{expr.name!r} is used before its assignment", expr.span
            )
        else:
            self.error("E102", f"{expr.name!r} is not defined", expr.span)
        return MULTIVECTOR

    def _call(self, expr: Call, ctx: str) -> str:
        sig = BUILTINS.get(expr.func)
        if sig is None:
            self.error("E107", f"unknown function {expr.func!r}", expr.span)
            for arg in expr.args:
                self._check(arg, MULTIVECTOR)
            return MULTIVECTOR
        if len(expr.args) != len(sig.params):
            self.error(
                "E108",
                f"{expr.func} takes {len(sig.params)} argument"
                f"{'s' if len(sig.params) != 1 else ''}, got {len(expr.args)}",
                expr.span,
            )
        for arg, param in zip(expr.args, sig.params):
            self._check(arg, param)
        for arg in expr.args[len(sig.params) :]:
            self._check(arg, MULTIVECTOR)
        if ctx == SCALAR and sig.returns != SCALAR:
            self.error(
                "E103",
                f"{expr.func} returns a multivector but a number is required here",
                expr.span,
            )
        return sig.returns


def validate(script: Script) -> ValidationResult:
    """Check a script and report diagnostics, discovered inputs, and the
    scalar-or-multivector kind of every defined name."""
    return _Checker(script).run()
