"""Compiler from scripts to straight-line blade code.

Each assignment becomes one numeric step per surviving basis blade, so
the whole program is flat float arithmetic over the script's inputs.
Numeric literals assigned to a bare name are promoted to inputs with
defaults, which keeps them rebindable without recompiling. Blades are
dropped when their coefficient is structurally zero, or when twenty
deterministic numeric probes of the whole chain agree the value
vanishes (reported as a warning, since that is evidence rather than
proof).

The module also carries a reference interpreter that walks the syntax
tree with plain numeric multivectors. It shares the object builders
with the compiler but none of the symbolic machinery, which makes it a
useful cross-check: compiled-and-run output must match it blade for
blade.
"""
from __future__ import annotations

import hashlib
import json
import math
import random
from dataclasses import dataclass, field

from .algebra import (
    AlgebraError,
    CGA3D,
    Multivector,
    NotInvertible,
    SPACES,
    ZeroNorm,
)
from .cga import (
    CgaError,
    classify,
    GeometricObjectKind,
    ninf,
    no,
    pair_point,
    plane_from_scalars,
    point_from_scalars,
    sphere_from_center_mv,
    translator_from_scalars,
)
from . import cga
from .script import (
    Assign,
    BasisVec,
    Binary,
    Call,
    Comment,
    Diagnostic,
    Draw,
    ERROR,
    Expr,
    Ident,
    Num,
    SCALAR,
    Script,
    Span,
    Unary,
    WARNING,
    COLOR_VALUES,
    analyze,
    pretty,
)
from .symexpr import (
    Abs,
    Add,
    Const,
    Div,
    DomainError,
    ExprError,
    Mul,
    Neg,
    ScalarExpr,
    Sqrt,
    Var,
    emit,
    evaluate,
    from_json as expr_from_json,
    simplify,
    to_json as expr_to_json,
)

PROBE_COUNT = 20
PROBE_TOL = 1e-9
DEFAULT_COLOR = (0.5, 0.5, 0.5)

_CGA_ONLY = ("createPoint", "createSphere", "createPlane", "translator",
             "pairPointA", "pairPointB")


class CodegenError(Exception):
    pass


class CompileError(CodegenError):
    def __init__(self, message: str, span: Span | None = None, code: str = "E200"):
        super().__init__(message)
        self.message = message
        self.span = span
        self.code = code

    def to_diagnostic(self) -> Diagnostic:
        return Diagnostic(ERROR, self.code, self.message, self.span)


class MissingInput(CodegenError):
    def __init__(self, names):
        self.names = tuple(names)
        super().__init__("missing input value" + ("s" if len(self.names) != 1 else "")
                         + ": " + ", ".join(self.names))


class RunError(CodegenError):
    """A step failed to evaluate; `code` is a stable tag such as
    sqrt_negative, division_by_zero, or imaginary_pair."""

    def __init__(self, message: str, code: str = "runtime", step: str | None = None):
        super().__init__(message)
        self.message = message
        self.code = code
        self.step = step


@dataclass(frozen=True)
class Step:
    name: str
    var: str
    blade: int
    expr: ScalarExpr


@dataclass(frozen=True)
class DrawSpec:
    name: str
    color: tuple[float, float, float] | None = None


@dataclass
class BladeProgram:
    """Straight-line blade code: inputs, steps, and what to show."""

    space: str
    source: str
    inputs: dict[str, float | None]
    steps: tuple[Step, ...]
    variables: dict[str, dict[int, str]]
    outputs: dict[str, dict[int, str]]
    draws: tuple[DrawSpec, ...]
    kinds: dict[str, str] = field(default_factory=dict)
    warnings: tuple[Diagnostic, ...] = ()

    @property
    def algebra(self):
        return SPACES[self.space]


# ---------------------------------------------------------------------------
# literal constants

def _is_literal_constant(e: Expr) -> bool:
    if isinstance(e, Num):
        return True
    if isinstance(e, Unary) and e.op == "-":
        return _is_literal_constant(e.operand)
    if isinstance(e, Binary) and e.op in ("+", "-", "*", "/", "^", "."):
        return _is_literal_constant(e.left) and _is_literal_constant(e.right)
    if isinstance(e, Call) and e.func in ("sqrt", "abs") and len(e.args) == 1:
        return _is_literal_constant(e.args[0])
    return False


def _literal_value(e: Expr) -> float:
    if isinstance(e, Num):
        return e.value
    if isinstance(e, Unary):
        return -_literal_value(e.operand)
    if isinstance(e, Binary):
        left, right = _literal_value(e.left), _literal_value(e.right)
        if e.op == "+":
            return left + right
        if e.op == "-":
            return left - right
        if e.op == "/":
            if abs(right) <= 1e-300:
                raise CompileError("division by a zero constant", e.span, "E202")
            return left / right
        return left * right
    if isinstance(e, Call):
        v = _literal_value(e.args[0])
        if e.func == "abs":
            return abs(v)
        if v < 0.0:
            if v > -1e-12:
                return 0.0
            raise CompileError(f"sqrt of negative constant {v!r}", e.span, "E209")
        return math.sqrt(v)
    raise TypeError(f"not a literal constant: {e!r}")


def _probe_samples(name: str, default: float | None) -> list[float]:
    """Deterministic probe values for one input. Sample 0 is the default
    itself; the rest jitter around it so object relations (tangency,
    intersection) encoded by the defaults survive the perturbation."""
    samples = []
    for k in range(PROBE_COUNT):
        digest = hashlib.blake2b(f"{name}:{k}".encode(), digest_size=8).digest()
        rng = random.Random(int.from_bytes(digest, "big"))
        if default is None:
            samples.append(rng.choice((-1.0, 1.0)) * rng.uniform(0.25, 2.0))
        elif k == 0:
            samples.append(default)
        elif default == 0.0:
            samples.append(rng.uniform(-0.1, 0.1))
        else:
            samples.append(default * (1.0 + rng.uniform(-0.05, 0.05)))
    return samples


# ---------------------------------------------------------------------------
# compilation

class _Compiler:
    def __init__(self, script: Script, space: str, kinds: dict[str, str]):
        self.script = script
        self.space = space
        self.alg = SPACES[space]
        self.kinds = kinds
        self.inputs: dict[str, float | None] = {}
        self.steps: list[Step] = []
        self.variables: dict[str, dict[int, str]] = {}
        self.env: dict[str, Multivector] = {}
        self.draws: list[DrawSpec] = []
        self.marked: list[str] = []
        self.warnings: list[Diagnostic] = []
        self.used_names = (
            {s.name for s in script.statements if isinstance(s, Assign)}
            | {"math", "visualization"}
        )
        self.probe_envs: list[dict[str, float]] = [{} for _ in range(PROBE_COUNT)]

    def compile(self) -> BladeProgram:
        for stmt in self.script.statements:
            if isinstance(stmt, Comment):
                continue
            if isinstance(stmt, Assign):
                self._assign(stmt)
            elif isinstance(stmt, Draw):
                self._draw(stmt)
        outputs = {}
        for name in self.marked + [d.name for d in self.draws]:
            if name not in outputs:
                outputs[name] = dict(self.variables.get(name, {}))
        return BladeProgram(
            space=self.space,
            source=pretty(self.script),
            inputs=self.inputs,
            steps=tuple(self.steps),
            variables=self.variables,
            outputs=outputs,
            draws=tuple(self.draws),
            kinds=dict(self.kinds),
            warnings=tuple(self.warnings),
        )

    def _register_input(self, name: str, default: float | None) -> None:
        if name in self.inputs:
            return
        self.inputs[name] = default
        self.used_names.add(name)
        samples = _probe_samples(name, default)
        for env, v in zip(self.probe_envs, samples):
            env[name] = v
        self.variables[name] = {0: name}
        self.env[name] = Multivector.scalar(self.alg, Var(name))
        self.kinds.setdefault(name, SCALAR)

    def _assign(self, stmt: Assign) -> None:
        if _is_literal_constant(stmt.expr):
            self._register_input(stmt.name, _literal_value(stmt.expr))
        else:
            mv = self._mv(stmt.expr)
            self._materialize(stmt.name, mv, stmt.span)
        if stmt.optimize:
            self.marked.append(stmt.name)

    def _draw(self, stmt: Draw) -> None:
        color = None
        if stmt.color is not None:
            color = stmt.color.rgb or COLOR_VALUES[stmt.color.name]
        self.draws.append(DrawSpec(stmt.name, color))

    def _materialize(self, name: str, mv: Multivector, span: Span) -> None:
        blades: dict[int, ScalarExpr] = {}
        var_map: dict[int, str] = {}
        for blade in sorted(mv.terms):
            coeff = mv.terms[blade]
            sexpr = Const(float(coeff)) if isinstance(coeff, (int, float)) else coeff
            constant = isinstance(sexpr, Const)
            if not constant:
                vals = self._probe(sexpr)
                if vals is not None and all(abs(v) <= PROBE_TOL for v in vals):
                    self.warnings.append(Diagnostic(
                        WARNING, "W301",
                        f"dropped blade {self.alg.blade_name(blade)} of {name!r}: "
                        "it vanished in every numeric probe",
                        span,
                    ))
                    continue
            step_name = self._unique(f"{name}_{blade}")
            self.steps.append(Step(step_name, name, blade, sexpr))
            var_map[blade] = step_name
            blades[blade] = sexpr if constant else Var(step_name)
            for env in self.probe_envs:
                try:
                    env[step_name] = evaluate(sexpr, env)
                except ExprError:
                    pass
        self.env[name] = Multivector(self.alg, blades)
        self.variables[name] = var_map

    def _probe(self, sexpr: ScalarExpr) -> list[float] | None:
        vals = []
        for env in self.probe_envs:
            try:
                vals.append(evaluate(sexpr, env))
            except ExprError:
                return None
        return vals

    def _inverse(self, mv: Multivector, span: Span, what: str) -> Multivector:
        """Invert a multivector, recovering with probe evidence when step
        variables hide the blade structure from the symbolic check."""
        try:
            return mv.inverse()
        except NotInvertible as exc:
            recovered = self._probe_inverse(mv)
            if recovered is None:
                raise CompileError(
                    f"cannot {what}: {exc} (the argument is not a versor "
                    "as written)",
                    span, "E204",
                ) from exc
            return recovered

    def _probe_inverse(self, mv: Multivector) -> Multivector | None:
        """reverse(a) / <a reverse(a)>_0, but only when probing shows the
        off-scalar part of a*reverse(a) vanishing and the scalar part not.

        Referencing an earlier statement replaces its blade expressions
        with opaque step variables, so a blade's self-product no longer
        cancels symbolically. The probe environments carry each step's
        defining value, so they still see the correlation."""
        rev = mv.reverse()
        m = mv.gp(rev)
        s = m.scalar_part()
        for blade, coeff in m.terms.items():
            if blade == 0:
                continue
            sexpr = coeff if isinstance(coeff, ScalarExpr) else Const(float(coeff))
            vals = self._probe(sexpr)
            if vals is None or any(abs(v) > PROBE_TOL for v in vals):
                return None
        s_expr = s if isinstance(s, ScalarExpr) else Const(float(s))
        vals = self._probe(s_expr)
        if vals is None or any(abs(v) <= PROBE_TOL for v in vals):
            return None
        return rev.divide_by_scalar(simplify(s_expr))

    def _unique(self, candidate: str) -> str:
        while candidate in self.used_names:
            candidate += "_x"
        self.used_names.add(candidate)
        return candidate

    # -- expression walkers -------------------------------------------------

    def _mv(self, e: Expr) -> Multivector:
        if isinstance(e, Num):
            return Multivector.scalar(self.alg, e.value)
        if isinstance(e, BasisVec):
            return self._basis(e)
        if isinstance(e, Ident):
            if e.name not in self.env:
                # only reachable for names the validator classed as inputs
                self._register_input(e.name, None)
            return self.env[e.name]
        if isinstance(e, Unary):
            operand = self._mv(e.operand)
            return operand.reverse() if e.op == "~" else -operand
        if isinstance(e, Binary):
            return self._binary(e)
        if isinstance(e, Call):
            return self._call(e)
        raise TypeError(f"unhandled expression node {e!r}")

    def _basis(self, e: BasisVec) -> Multivector:
        if e.name in ("einf", "e0"):
            if self.alg is not CGA3D:
                raise CompileError(
                    f"{e.name} only exists in the conformal space", e.span, "E205"
                )
            return ninf() if e.name == "einf" else no()
        index = int(e.name[1:])
        return Multivector.basis(self.alg, 1 << (index - 1), 1.0)

    def _binary(self, e: Binary) -> Multivector:
        left = self._mv(e.left)
        right = self._mv(e.right)
        if e.op == "+":
            return left + right
        if e.op == "-":
            return left - right
        if e.op == "*":
            return left.gp(right)
        if e.op == "^":
            return left.wedge(right)
        if e.op == ".":
            return left.lcont(right)
        # division
        if not right.terms:
            raise CompileError("division by zero", e.span, "E202")
        if right.grades() <= {0}:
            return left.divide_by_scalar(right.coeff(0))
        return left.gp(self._inverse(right, e.span, "divide"))

    def _call(self, e: Call) -> Multivector:
        func = e.func
        if func in _CGA_ONLY and self.alg is not CGA3D:
            raise CompileError(
                f"{func} only exists in the conformal space", e.span, "E205"
            )
        if func == "sqrt":
            return Multivector.scalar(self.alg, simplify(Sqrt(self._scalar(e.args[0]))))
        if func == "abs":
            return Multivector.scalar(self.alg, simplify(Abs(self._scalar(e.args[0]))))
        if func == "norm":
            n = self._mv(e.args[0]).norm()
            return Multivector.scalar(self.alg, n)
        if func == "reverse":
            return self._mv(e.args[0]).reverse()
        if func == "dual":
            return self._mv(e.args[0]).dual()
        if func == "inverse":
            return self._inverse(self._mv(e.args[0]), e.span, "invert")
        if func == "normalize":
            try:
                return self._mv(e.args[0]).normalize()
            except ZeroNorm as exc:
                raise CompileError(str(exc), e.span, "E206") from exc
        if func == "createPoint":
            x, y, z = (self._scalar(a) for a in e.args)
            return point_from_scalars(x, y, z)
        if func == "createSphere":
            x, y, z, r = (self._scalar(a) for a in e.args)
            return sphere_from_center_mv(point_from_scalars(x, y, z), r)
        if func == "createPlane":
            nx, ny, nz, d = (self._scalar(a) for a in e.args)
            try:
                return plane_from_scalars(nx, ny, nz, d)
            except CgaError as exc:
                raise CompileError(str(exc), e.span, "E207") from exc
        if func == "translator":
            tx, ty, tz = (self._scalar(a) for a in e.args)
            return translator_from_scalars(tx, ty, tz)
        if func == "rotor":
            return self._rotor(e)
        if func == "project":
            source = self._mv(e.args[0])
            target = self._mv(e.args[1])
            return source.lcont(target).gp(self._inverse(target, e.span, "project"))
        if func == "reflect":
            return cga.reflect(self._mv(e.args[0]), self._mv(e.args[1]))
        if func in ("pairPointA", "pairPointB"):
            sign = 1 if func == "pairPointA" else -1
            try:
                # a genuine pair splits into conformal points, which are
                # grade 1; anything further out is residue by construction
                return pair_point(self._mv(e.args[0]), sign).grade_part(1)
            except cga.ImaginaryPair as exc:
                raise CompileError(
                    f"the objects do not intersect: {exc}", e.span, "E208"
                ) from exc
            except NotInvertible as exc:
                raise CompileError(str(exc), e.span, "E204") from exc
        raise TypeError(f"unhandled builtin {func!r}")

    def _rotor(self, e: Call) -> Multivector:
        plane = self._mv(e.args[0])
        angle = simplify(self._scalar(e.args[1]))
        numeric_plane = _as_numeric(plane)
        if numeric_plane is None or not isinstance(angle, Const):
            raise CompileError(
                "rotor needs a constant plane and angle at compile time; "
                "write the angle as a literal",
                e.span, "E203",
            )
        try:
            return cga.rotor(numeric_plane, angle.value)
        except AlgebraError as exc:
            raise CompileError(f"cannot build rotor: {exc}", e.span, "E203") from exc

    def _scalar(self, e: Expr) -> ScalarExpr:
        if isinstance(e, Num):
            return Const(e.value)
        if isinstance(e, Ident):
            if e.name not in self.env:
                self._register_input(e.name, None)
            coeff = self.env[e.name].coeff(0)
            return Const(float(coeff)) if isinstance(coeff, (int, float)) else coeff
        if isinstance(e, Unary):
            return Neg(self._scalar(e.operand))
        if isinstance(e, Binary):
            if e.op in ("^", "."):
                mv = self._binary(e)
                if not set(mv.grades()) <= {0}:
                    grades = ", ".join(str(g) for g in sorted(mv.grades()))
                    raise CompileError(
                        "expression must be a number but has parts of grade "
                        f"{grades}", e.span, "E210",
                    )
                coeff = mv.coeff(0)
                return Const(float(coeff)) if isinstance(coeff, (int, float)) else coeff
            left, right = self._scalar(e.left), self._scalar(e.right)
            if e.op == "+":
                return Add((left, right))
            if e.op == "-":
                return Add((left, Neg(right)))
            if e.op == "/":
                return Div(left, right)
            return Mul((left, right))
        if isinstance(e, Call):
            if e.func == "sqrt":
                return Sqrt(self._scalar(e.args[0]))
            if e.func == "abs":
                return Abs(self._scalar(e.args[0]))
            # norm is the one multivector-consuming scalar builtin
            n = self._mv(e.args[0]).norm()
            return Const(float(n)) if isinstance(n, (int, float)) else n
        raise TypeError(f"not a scalar expression node: {e!r}")


def _as_numeric(mv: Multivector) -> Multivector | None:
    """The same multivector with plain float coefficients, or None if any
    coefficient holds free variables."""
    terms = {}
    for blade, coeff in mv.terms.items():
        if isinstance(coeff, (int, float)):
            terms[blade] = float(coeff)
        elif isinstance(coeff, Const):
            terms[blade] = coeff.value
        else:
            return None
    return Multivector(mv.algebra, terms)


def compile_script(source, space: str = "cga3d") -> BladeProgram:
    """Compile source text (or a parsed Script) into a BladeProgram.

    Raises CompileError for invalid scripts; the first validation error
    wins. Warnings are carried on the returned program.
    """
    if space not in SPACES:
        raise CompileError(f"unknown space {space!r}; pick one of {sorted(SPACES)}")
    if isinstance(source, Script):
        script = source
        from .script import validate

        result = validate(script)
        diagnostics = result.diagnostics
        kinds = dict(result.kinds)
    else:
        analysis = analyze(source)
        if analysis.script is None:
            first = analysis.diagnostics[0]
            raise CompileError(first.message, first.span, first.code)
        script = analysis.script
        diagnostics = analysis.diagnostics
        kinds = dict(analysis.kinds)
    for diag in diagnostics:
        if diag.severity == ERROR:
            raise CompileError(diag.message, diag.span, diag.code)
    return _Compiler(script, space, kinds).compile()


# ---------------------------------------------------------------------------
# running compiled programs

def bind(program: BladeProgram, values=None) -> tuple[dict[str, float], list[Diagnostic]]:
    """Merge caller values over input defaults into a full assignment.
    Unknown names are ignored with a warning; absent required inputs raise
    MissingInput."""
    values = dict(values or {})
    assignment: dict[str, float] = {}
    missing = []
    for name, default in program.inputs.items():
        if name in values:
            assignment[name] = float(values.pop(name))
        elif default is not None:
            assignment[name] = default
        else:
            missing.append(name)
    if missing:
        raise MissingInput(missing)
    diags = [
        Diagnostic(WARNING, "W303", f"ignoring unknown input {name!r}")
        for name in values
    ]
    return assignment, diags


def run(program: BladeProgram, assignment: dict[str, float]) -> dict[str, float]:
    """Evaluate every step over a full input assignment. Returns the value
    of each input and step by name."""
    env = dict(assignment)
    for step in program.steps:
        try:
            env[step.name] = evaluate(step.expr, env)
        except DomainError as exc:
            raise RunError(
                f"step {step.name}: {exc}", code=exc.kind, step=step.name
            ) from exc
    return env


def execute(program: BladeProgram, values=None) -> tuple[dict[str, float], list[Diagnostic]]:
    assignment, diags = bind(program, values)
    return run(program, assignment), diags


def variable_value(program: BladeProgram, name: str, results: dict[str, float]) -> Multivector:
    """Reassemble one script variable from step results as a numeric
    multivector."""
    blades = program.variables.get(name)
    if blades is None:
        raise KeyError(f"{name!r} is not a variable of this program")
    return Multivector(program.algebra, {b: results[s] for b, s in blades.items()})


# ---------------------------------------------------------------------------
# code emission

_SECTION_ASSIGN = "# --- assignments ---"
_SECTION_COMPUTE = "# --- optimization code ---"
_SECTION_VISUAL = "# --- visualization ---"


def emit_python(program: BladeProgram) -> str:
    """Render the program as a flat executable module with the three
    sections: input assignments, blade steps, and the visualization list."""
    lines = ["import math", "", _SECTION_ASSIGN]
    for name, default in program.inputs.items():
        if default is None:
            lines.append(f'{name} = float("nan")  # unbound input')
        else:
            lines.append(f"{name} = {default!r}")
    lines += ["", _SECTION_COMPUTE]
    alg = program.algebra
    for step in program.steps:
        label = alg.blade_name(step.blade) if step.blade else "scalar"
        lines.append(f"{step.name} = {emit(step.expr, 'python')}  # {label}")
    lines += ["", _SECTION_VISUAL]
    if not program.draws:
        lines.append("visualization = []")
    else:
        lines.append("visualization = [")
        for draw in program.draws:
            color = draw.color or DEFAULT_COLOR
            lines.append(f"    ({draw.name!r}, {tuple(color)!r}),")
        lines.append("]")
    return "\n".join(lines) + "\n"


def program_to_json(program: BladeProgram) -> dict:
    return {
        "version": 1,
        "space": program.space,
        "source": program.source,
        "inputs": [
            {"name": name, "default": default}
            for name, default in program.inputs.items()
        ],
        "steps": [
            {
                "name": s.name,
                "var": s.var,
                "blade": s.blade,
                "expr": expr_to_json(s.expr),
            }
            for s in program.steps
        ],
        "variables": {
            var: {str(b): n for b, n in blades.items()}
            for var, blades in program.variables.items()
        },
        "outputs": {
            var: {str(b): n for b, n in blades.items()}
            for var, blades in program.outputs.items()
        },
        "draws": [
            {"name": d.name, "color": list(d.color) if d.color else None}
            for d in program.draws
        ],
        "kinds": dict(program.kinds),
        "warnings": [w.to_json() for w in program.warnings],
    }


def program_from_json(doc: dict) -> BladeProgram:
    def _span(d):
        if not d:
            return None
        return Span(d["line"], d["col"], d.get("length", 1))

    return BladeProgram(
        space=doc["space"],
        source=doc["source"],
        inputs={item["name"]: item["default"] for item in doc["inputs"]},
        steps=tuple(
            Step(item["name"], item["var"], item["blade"], expr_from_json(item["expr"]))
            for item in doc["steps"]
        ),
        variables={
            var: {int(b): n for b, n in blades.items()}
            for var, blades in doc["variables"].items()
        },
        outputs={
            var: {int(b): n for b, n in blades.items()}
            for var, blades in doc["outputs"].items()
        },
        draws=tuple(
            DrawSpec(item["name"], tuple(item["color"]) if item["color"] else None)
            for item in doc["draws"]
        ),
        kinds=dict(doc.get("kinds", {})),
        warnings=tuple(
            Diagnostic(w["severity"], w["code"], w["message"], _span(w.get("span")))
            for w in doc.get("warnings", ())
        ),
    )


def emit_json(program: BladeProgram) -> str:
    return json.dumps(program_to_json(program), indent=2, sort_keys=True)


def outputs_of(program: BladeProgram, results: dict[str, float]) -> dict[str, dict[str, float]]:
    """Output multivectors as {name: {blade name: coefficient}}, nonzeros only."""
    algebra = program.algebra
    out: dict[str, dict[str, float]] = {}
    for name in program.outputs:
        mv = variable_value(program, name, results)
        out[name] = {
            algebra.blade_name(blade): coeff
            for blade, coeff in sorted(mv.terms.items())
            if abs(coeff) > 1e-12
        }
    return out


# ---------------------------------------------------------------------------
# scenes

def scene_of(program: BladeProgram, results: dict[str, float]):
    """Classify every drawn variable into a scene document. Returns the
    scene and a list of warnings for objects that did not classify."""
    objects = []
    warnings: list[Diagnostic] = []
    seen: dict[str, int] = {}
    for draw in program.draws:
        mv = variable_value(program, draw.name, results)
        kind, params = classify(mv)
        if kind is GeometricObjectKind.UNKNOWN:
            warnings.append(Diagnostic(
                WARNING, "W302",
                f"{draw.name!r} did not classify as a drawable object",
            ))
        seen[draw.name] = seen.get(draw.name, 0) + 1
        oid = draw.name if seen[draw.name] == 1 else f"{draw.name}-{seen[draw.name]}"
        r, g, b = draw.color or DEFAULT_COLOR
        objects.append({
            "id": oid,
            "kind": kind.value,
            "color": {"r": r, "g": g, "b": b},
            "label": draw.name,
            "params": params,
        })
    scene = {"version": 1, "space": program.space, "objects": objects}
    return scene, warnings


# ---------------------------------------------------------------------------
# reference interpreter

class _Interpreter:
    def __init__(self, space: str, bindings: dict[str, float]):
        self.alg = SPACES[space]
        self.bindings = bindings
        self.env: dict[str, Multivector] = {}

    def run(self, script: Script) -> dict[str, Multivector]:
        for stmt in script.statements:
            if not isinstance(stmt, Assign):
                continue
            if _is_literal_constant(stmt.expr):
                value = self.bindings.get(stmt.name, _literal_value(stmt.expr))
                self.env[stmt.name] = Multivector.scalar(self.alg, float(value))
            else:
                self.env[stmt.name] = self._mv(stmt.expr)
        return self.env

    def _input(self, name: str) -> float:
        if name not in self.bindings:
            raise MissingInput([name])
        return float(self.bindings[name])

    def _mv(self, e: Expr) -> Multivector:
        if isinstance(e, Num):
            return Multivector.scalar(self.alg, e.value)
        if isinstance(e, BasisVec):
            if e.name == "einf":
                return ninf()
            if e.name == "e0":
                return no()
            return Multivector.basis(self.alg, 1 << (int(e.name[1:]) - 1), 1.0)
        if isinstance(e, Ident):
            if e.name in self.env:
                return self.env[e.name]
            return Multivector.scalar(self.alg, self._input(e.name))
        if isinstance(e, Unary):
            operand = self._mv(e.operand)
            return operand.reverse() if e.op == "~" else -operand
        if isinstance(e, Binary):
            left, right = self._mv(e.left), self._mv(e.right)
            if e.op == "+":
                return left + right
            if e.op == "-":
                return left - right
            if e.op == "*":
                return left.gp(right)
            if e.op == "^":
                return left.wedge(right)
            if e.op == ".":
                return left.lcont(right)
            if not right.terms:
                raise RunError("division by zero", code="division_by_zero")
            if right.grades() <= {0}:
                den = right.coeff(0)
                if abs(den) <= 1e-300:
                    raise RunError("division by zero", code="division_by_zero")
                return left.divide_by_scalar(den)
            try:
                return left.gp(right.inverse())
            except NotInvertible as exc:
                raise RunError(str(exc), code="not_invertible") from exc
        if isinstance(e, Call):
            return self._call(e)
        raise TypeError(f"unhandled expression node {e!r}")

    def _call(self, e: Call) -> Multivector:
        func = e.func
        try:
            if func == "sqrt":
                return Multivector.scalar(self.alg, self._sqrt(self._scalar(e.args[0])))
            if func == "abs":
                return Multivector.scalar(self.alg, abs(self._scalar(e.args[0])))
            if func == "norm":
                return Multivector.scalar(self.alg, self._mv(e.args[0]).norm())
            if func == "reverse":
                return self._mv(e.args[0]).reverse()
            if func == "dual":
                return self._mv(e.args[0]).dual()
            if func == "inverse":
                return self._mv(e.args[0]).inverse()
            if func == "normalize":
                return self._mv(e.args[0]).normalize()
            if func == "createPoint":
                x, y, z = (self._scalar(a) for a in e.args)
                return point_from_scalars(x, y, z)
            if func == "createSphere":
                x, y, z, r = (self._scalar(a) for a in e.args)
                return sphere_from_center_mv(point_from_scalars(x, y, z), r)
            if func == "createPlane":
                nx, ny, nz, d = (self._scalar(a) for a in e.args)
                return plane_from_scalars(nx, ny, nz, d)
            if func == "translator":
                tx, ty, tz = (self._scalar(a) for a in e.args)
                return translator_from_scalars(tx, ty, tz)
            if func == "rotor":
                return cga.rotor(self._mv(e.args[0]), self._scalar(e.args[1]))
            if func == "project":
                return cga.project(self._mv(e.args[0]), self._mv(e.args[1]))
            if func == "reflect":
                return cga.reflect(self._mv(e.args[0]), self._mv(e.args[1]))
            if func in ("pairPointA", "pairPointB"):
                sign = 1 if func == "pairPointA" else -1
                return pair_point(self._mv(e.args[0]), sign).grade_part(1)
        except cga.ImaginaryPair as exc:
            raise RunError(str(exc), code="imaginary_pair") from exc
        except NotInvertible as exc:
            raise RunError(str(exc), code="not_invertible") from exc
        except (CgaError, ZeroNorm, AlgebraError) as exc:
            raise RunError(str(exc), code="runtime") from exc
        raise TypeError(f"unhandled builtin {func!r}")

    @staticmethod
    def _sqrt(v: float) -> float:
        if v < 0.0:
            if v > -1e-12:
                return 0.0
            raise RunError(f"sqrt of negative value {v!r}", code="sqrt_negative")
        return math.sqrt(v)

    def _scalar(self, e: Expr) -> float:
        if isinstance(e, Num):
            return e.value
        if isinstance(e, Ident):
            if e.name in self.env:
                return float(self.env[e.name].coeff(0))
            return self._input(e.name)
        if isinstance(e, Unary):
            return -self._scalar(e.operand)
        if isinstance(e, Binary):
            if e.op in ("^", "."):
                mv = self._mv(e)
                if not set(mv.grades()) <= {0}:
                    raise RunError(
                        "expression must be a number but has nonscalar parts",
                        code="not_scalar",
                    )
                return float(mv.coeff(0))
            left, right = self._scalar(e.left), self._scalar(e.right)
            if e.op == "+":
                return left + right
            if e.op == "-":
                return left - right
            if e.op == "/":
                if abs(right) <= 1e-300:
                    raise RunError("division by zero", code="division_by_zero")
                return left / right
            return left * right
        if isinstance(e, Call):
            if e.func == "sqrt":
                return self._sqrt(self._scalar(e.args[0]))
            if e.func == "abs":
                return abs(self._scalar(e.args[0]))
            return float(self._mv(e.args[0]).norm())
        raise TypeError(f"not a scalar expression node: {e!r}")


def interpret(source, space: str = "cga3d", bindings=None) -> dict[str, Multivector]:
    """Execute a script directly over numeric multivectors, with no
    compilation involved. Returns every variable's value by name."""
    if isinstance(source, Script):
        script = source
    else:
        analysis = analyze(source)
        if analysis.script is None:
            first = analysis.diagnostics[0]
            raise CompileError(first.message, first.span, first.code)
        for diag in analysis.diagnostics:
            if diag.severity == ERROR:
                raise CompileError(diag.message, diag.span, diag.code)
        script = analysis.script
    return _Interpreter(space, dict(bindings or {})).run(script)
