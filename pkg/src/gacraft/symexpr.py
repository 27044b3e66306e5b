"""Symbolic scalar expressions.

Small immutable expression trees used as multivector coefficients during
compilation. Simplification does constant folding, identity elimination,
flattening, and commutative term collection -- but never distributes
products over sums, so emitted code keeps the shape it was built with.
"""
from __future__ import annotations

import hashlib
import math
import random
from dataclasses import dataclass
from functools import cached_property
from typing import Iterator

EVAL_DIV_FLOOR = 1e-300
SQRT_CLAMP = 1e-12


class ExprError(Exception):
    """Base for symbolic-expression failures."""


class UnboundVariable(ExprError):
    def __init__(self, name: str):
        super().__init__(f"unbound variable '{name}'")
        self.name = name


class DomainError(ExprError):
    """Raised when evaluation leaves the real domain (sqrt of a negative,
    division by zero). `kind` is a stable machine-readable tag."""

    def __init__(self, message: str, kind: str = "domain"):
        super().__init__(message)
        self.kind = kind


def _coerce(value) -> "ScalarExpr":
    if isinstance(value, ScalarExpr):
        return value
    if isinstance(value, (int, float)):
        return Const(float(value))
    raise TypeError(f"cannot use {type(value).__name__} as a scalar expression")


class ScalarExpr:
    """Base node. Operators build raw nodes; call simplify() to canonicalize."""

    def __add__(self, other):
        return Add((self, _coerce(other)))

    def __radd__(self, other):
        return Add((_coerce(other), self))

    def __sub__(self, other):
        return Add((self, Neg(_coerce(other))))

    def __rsub__(self, other):
        return Add((_coerce(other), Neg(self)))

    def __mul__(self, other):
        return Mul((self, _coerce(other)))

    def __rmul__(self, other):
        return Mul((_coerce(other), self))

    def __truediv__(self, other):
        return Div(self, _coerce(other))

    def __rtruediv__(self, other):
        return Div(_coerce(other), self)

    def __neg__(self):
        return Neg(self)

    def is_zero(self) -> bool:
        """Structural zero test; meaningful on simplified expressions."""
        return isinstance(self, Const) and self.value == 0.0

    @cached_property
    def fingerprint(self) -> str:
        """Commutative structural fingerprint: equal for trees that differ
        only by Add/Mul child order."""
        return _short_hash(self._fp_text())

    def _fp_text(self) -> str:  # pragma: no cover - overridden
        raise NotImplementedError

    def children(self) -> tuple["ScalarExpr", ...]:
        return ()


def _short_hash(text: str) -> str:
    return hashlib.blake2b(text.encode(), digest_size=12).hexdigest()


@dataclass(frozen=True, eq=True)
class Const(ScalarExpr):
    value: float

    def __post_init__(self):
        v = float(self.value)
        if v == 0.0:
            v = 0.0  # normalize -0.0
        object.__setattr__(self, "value", v)

    def _fp_text(self):
        return f"C{self.value!r}"


@dataclass(frozen=True, eq=True)
class Var(ScalarExpr):
    name: str

    def _fp_text(self):
        return f"V{self.name}"


@dataclass(frozen=True, eq=True)
class Add(ScalarExpr):
    terms: tuple

    def _fp_text(self):
        return "A(" + ",".join(sorted(t.fingerprint for t in self.terms)) + ")"

    def children(self):
        return self.terms


@dataclass(frozen=True, eq=True)
class Mul(ScalarExpr):
    factors: tuple

    def _fp_text(self):
        return "M(" + ",".join(sorted(f.fingerprint for f in self.factors)) + ")"

    def children(self):
        return self.factors


@dataclass(frozen=True, eq=True)
class Neg(ScalarExpr):
    child: ScalarExpr

    def _fp_text(self):
        return f"N({self.child.fingerprint})"

    def children(self):
        return (self.child,)


@dataclass(frozen=True, eq=True)
class Div(ScalarExpr):
    num: ScalarExpr
    den: ScalarExpr

    def _fp_text(self):
        return f"D({self.num.fingerprint},{self.den.fingerprint})"

    def children(self):
        return (self.num, self.den)


@dataclass(frozen=True, eq=True)
class Pow(ScalarExpr):
    base: ScalarExpr
    exponent: int

    def _fp_text(self):
        return f"P({self.base.fingerprint},{self.exponent})"

    def children(self):
        return (self.base,)


@dataclass(frozen=True, eq=True)
class Sqrt(ScalarExpr):
    child: ScalarExpr

    def _fp_text(self):
        return f"S({self.child.fingerprint})"

    def children(self):
        return (self.child,)


@dataclass(frozen=True, eq=True)
class Abs(ScalarExpr):
    child: ScalarExpr

    def _fp_text(self):
        return f"B({self.child.fingerprint})"

    def children(self):
        return (self.child,)


# ---------------------------------------------------------------------------
# simplification

def simplify(e: ScalarExpr) -> ScalarExpr:
    """Canonical form: constants folded, identities removed, nested Add/Mul
    flattened, repeated factors grouped into Pow, commutatively-equal terms
    collected (so a*b - b*a cancels). Idempotent."""
    if isinstance(e, (Const, Var)):
        return e
    if isinstance(e, Neg):
        return _negate(simplify(e.child))
    if isinstance(e, Add):
        return _build_add([simplify(t) for t in e.terms])
    if isinstance(e, Mul):
        return _build_mul([simplify(f) for f in e.factors])
    if isinstance(e, Div):
        return _build_div(simplify(e.num), simplify(e.den))
    if isinstance(e, Pow):
        base = simplify(e.base)
        if e.exponent == 0:
            return Const(1.0)
        if e.exponent == 1:
            return base
        if isinstance(base, Const):
            return Const(base.value ** e.exponent)
        if isinstance(base, Pow):
            return Pow(base.base, base.exponent * e.exponent)
        return Pow(base, e.exponent)
    if isinstance(e, Sqrt):
        child = simplify(e.child)
        if isinstance(child, Const) and child.value >= 0.0:
            return Const(math.sqrt(child.value))
        return Sqrt(child)
    if isinstance(e, Abs):
        child = simplify(e.child)
        if isinstance(child, Const):
            return Const(abs(child.value))
        return Abs(child)
    raise TypeError(f"not a scalar expression: {e!r}")


def _negate(e: ScalarExpr) -> ScalarExpr:
    """Negate an already-simplified expression, keeping canonical form."""
    if isinstance(e, Const):
        return Const(-e.value)
    if isinstance(e, Neg):
        return e.child
    if isinstance(e, Mul):
        return _build_mul([Const(-1.0), *e.factors])
    if isinstance(e, Add):
        return _build_add([_negate(t) for t in e.terms])
    if isinstance(e, Div):
        return _build_div(_negate(e.num), e.den)
    return Neg(e)


def _build_div(num: ScalarExpr, den: ScalarExpr) -> ScalarExpr:
    """Canonical quotient of simplified parts. Nested quotients are hoisted
    so division never hides inside a product (keeps commutative term keys
    honest: a*(b/s) and b*(a/s) both become (a*b)/s)."""
    while isinstance(num, Div) or isinstance(den, Div):
        if isinstance(num, Div):
            den = _build_mul([den, num.den])
            num = num.num
        if isinstance(den, Div):
            num = _build_mul([num, den.den])
            den = den.num
    if isinstance(num, Const) and num.value == 0.0:
        return Const(0.0)
    if isinstance(den, Const) and den.value == 1.0:
        return num
    if isinstance(num, Const) and isinstance(den, Const) and den.value != 0.0:
        return Const(num.value / den.value)
    return Div(num, den)


def _term_parts(term: ScalarExpr) -> tuple[float, str, tuple]:
    """Split a simplified non-Add term into (coefficient, commutative key,
    residual factors). The key ignores factor order and the coefficient."""
    if isinstance(term, Const):
        return term.value, "", ()
    if isinstance(term, Neg):
        coeff, key, factors = _term_parts(term.child)
        return -coeff, key, factors
    if isinstance(term, Div):
        coeff, key, factors = _term_parts(term.num)
        body = Const(1.0) if not factors else (
            factors[0] if len(factors) == 1 else Mul(factors)
        )
        return coeff, key + "|/" + term.den.fingerprint, (Div(body, term.den),)
    if isinstance(term, Mul):
        coeff = 1.0
        residual = []
        for f in term.factors:
            if isinstance(f, Const):
                coeff *= f.value
            else:
                residual.append(f)
        key = ",".join(sorted(f.fingerprint for f in residual))
        return coeff, key, tuple(residual)
    return 1.0, term.fingerprint, (term,)


def _build_add(terms: list) -> ScalarExpr:
    flat = []
    for t in terms:
        if isinstance(t, Add):
            flat.extend(t.terms)
        else:
            flat.append(t)
    const_sum = 0.0
    order: list[str] = []
    groups: dict[str, list] = {}  # key -> [coeff_sum, residual_factors]
    for t in flat:
        coeff, key, factors = _term_parts(t)
        if key == "":
            const_sum += coeff
            continue
        if key not in groups:
            groups[key] = [coeff, factors]
            order.append(key)
        else:
            groups[key][0] += coeff
    out = []
    for key in order:
        coeff, factors = groups[key]
        if coeff == 0.0:
            continue
        out.append(_scaled_term(coeff, factors))
    if const_sum != 0.0 or not out:
        out.append(Const(const_sum))
    if len(out) == 1:
        return out[0]
    return Add(tuple(out))


def _scaled_term(coeff: float, factors: tuple) -> ScalarExpr:
    body = factors[0] if len(factors) == 1 else Mul(tuple(factors))
    if coeff == 1.0:
        return body
    if coeff == -1.0:
        return Neg(body)
    return _build_mul([Const(coeff), *factors])


def _build_mul(factors: list) -> ScalarExpr:
    flat = []
    dens = []
    stack = list(factors)
    sign = 1.0
    while stack:
        f = stack.pop(0)
        if isinstance(f, Mul):
            stack = list(f.factors) + stack
        elif isinstance(f, Neg):
            sign = -sign
            stack.insert(0, f.child)
        elif isinstance(f, Div):
            dens.append(f.den)
            stack.insert(0, f.num)
        else:
            flat.append(f)
    if dens:
        num = _build_mul([Const(sign), *flat])
        return _build_div(num, _build_mul(dens))
    const = sign
    order: list[str] = []
    powers: dict[str, list] = {}  # base fingerprint -> [base, exponent]
    for f in flat:
        if isinstance(f, Const):
            const *= f.value
            continue
        base, exp = (f.base, f.exponent) if isinstance(f, Pow) else (f, 1)
        key = base.fingerprint
        if key not in powers:
            powers[key] = [base, exp]
            order.append(key)
        else:
            powers[key][1] += exp
    if const == 0.0:
        return Const(0.0)
    parts = []
    for key in order:
        base, exp = powers[key]
        if exp == 0:
            continue
        parts.append(base if exp == 1 else Pow(base, exp))
    if not parts:
        return Const(const)
    if const == 1.0:
        return parts[0] if len(parts) == 1 else Mul(tuple(parts))
    if const == -1.0:
        return Neg(parts[0] if len(parts) == 1 else Mul(tuple(parts)))
    return Mul((Const(const), *parts))


# ---------------------------------------------------------------------------
# evaluation

def evaluate(e: ScalarExpr, bindings: dict[str, float]) -> float:
    if isinstance(e, Const):
        return e.value
    if isinstance(e, Var):
        try:
            return float(bindings[e.name])
        except KeyError:
            raise UnboundVariable(e.name) from None
    if isinstance(e, Add):
        return sum(evaluate(t, bindings) for t in e.terms)
    if isinstance(e, Mul):
        out = 1.0
        for f in e.factors:
            out *= evaluate(f, bindings)
        return out
    if isinstance(e, Neg):
        return -evaluate(e.child, bindings)
    if isinstance(e, Div):
        den = evaluate(e.den, bindings)
        if abs(den) <= EVAL_DIV_FLOOR:
            raise DomainError("division by zero", kind="division_by_zero")
        return evaluate(e.num, bindings) / den
    if isinstance(e, Pow):
        return evaluate(e.base, bindings) ** e.exponent
    if isinstance(e, Sqrt):
        v = evaluate(e.child, bindings)
        if v < 0.0:
            if v > -SQRT_CLAMP:
                v = 0.0
            else:
                raise DomainError(f"sqrt of negative value {v!r}", kind="sqrt_negative")
        return math.sqrt(v)
    if isinstance(e, Abs):
        return abs(evaluate(e.child, bindings))
    raise TypeError(f"not a scalar expression: {e!r}")


def probably_zero(e: ScalarExpr, tol: float = 1e-9, samples: int = 20) -> bool:
    """Numeric zero test for expressions simplification cannot fold.

    The expression is evaluated at deterministic pseudorandom points,
    seeded by its variable names so the answer never varies between
    runs. Twenty agreeing samples make a false positive astronomically
    unlikely for polynomial coefficients, but this is evidence, not
    proof; callers should treat it as a last resort after structural
    simplification. Any domain failure while probing counts as "not
    provably zero"."""
    e = simplify(e)
    if isinstance(e, Const):
        return abs(e.value) <= tol
    names = sorted(free_vars(e))
    seed = hashlib.blake2b(
        ("zero-probe:" + ",".join(names)).encode(), digest_size=8
    ).digest()
    rng = random.Random(seed)
    for _ in range(samples):
        env = {
            name: rng.uniform(0.25, 2.0) * rng.choice((-1.0, 1.0))
            for name in names
        }
        try:
            if abs(evaluate(e, env)) > tol:
                return False
        except (DomainError, OverflowError, ZeroDivisionError):
            return False
    return True


def free_vars(e: ScalarExpr) -> list[str]:
    """Variable names in first-occurrence (left-to-right) order."""
    seen: dict[str, None] = {}

    def walk(node):
        if isinstance(node, Var):
            seen.setdefault(node.name)
        for c in node.children():
            walk(c)

    walk(e)
    return list(seen)


def iter_nodes(e: ScalarExpr) -> Iterator[ScalarExpr]:
    yield e
    for c in e.children():
        yield from iter_nodes(c)


# ---------------------------------------------------------------------------
# emission

_PREC_ADD = 10
_PREC_MUL = 20
_PREC_NEG = 25
_PREC_POW = 30
_PREC_ATOM = 100


def emit(e: ScalarExpr, style: str = "python"):
    """Render an expression. 'python': evaluatable source (math.sqrt/abs).
    'json-ir': plain-dict tree per the documented schema."""
    if style == "python":
        return _emit_py(e)
    if style == "json-ir":
        return to_json(e)
    raise ValueError(f"unknown emission style {style!r}")


def _emit_py(e: ScalarExpr) -> str:
    text, _ = _py(e)
    return text


def _py(e: ScalarExpr) -> tuple[str, int]:
    if isinstance(e, Const):
        text = repr(e.value)
        return text, (_PREC_ATOM if e.value >= 0 else _PREC_NEG)
    if isinstance(e, Var):
        return e.name, _PREC_ATOM
    if isinstance(e, Add):
        parts = []
        for i, t in enumerate(e.terms):
            if i == 0:
                parts.append(_wrap(t, _PREC_ADD))
                continue
            neg_body = _negative_body(t)
            if neg_body is not None:
                parts.append(" - " + _wrap(neg_body, _PREC_ADD + 1))
            else:
                parts.append(" + " + _wrap(t, _PREC_ADD + 1))
        return "".join(parts), _PREC_ADD
    if isinstance(e, Mul):
        return " * ".join(_wrap(f, _PREC_MUL) for f in e.factors), _PREC_MUL
    if isinstance(e, Neg):
        return "-" + _wrap(e.child, _PREC_NEG), _PREC_NEG
    if isinstance(e, Div):
        return (
            _wrap(e.num, _PREC_MUL) + " / " + _wrap(e.den, _PREC_MUL + 1),
            _PREC_MUL,
        )
    if isinstance(e, Pow):
        return _wrap(e.base, _PREC_POW + 1) + f"**{e.exponent}", _PREC_POW
    if isinstance(e, Sqrt):
        return f"math.sqrt({_emit_py(e.child)})", _PREC_ATOM
    if isinstance(e, Abs):
        return f"abs({_emit_py(e.child)})", _PREC_ATOM
    raise TypeError(f"not a scalar expression: {e!r}")


def _negative_body(t: ScalarExpr):
    """If t is a negation (Neg, negative Const, or Mul with a negative
    leading Const), return the positive remainder; else None."""
    if isinstance(t, Neg):
        return t.child
    if isinstance(t, Const) and t.value < 0:
        return Const(-t.value)
    if isinstance(t, Mul) and isinstance(t.factors[0], Const) and t.factors[0].value < 0:
        lead = t.factors[0]
        rest = t.factors[1:]
        if lead.value == -1.0:
            return rest[0] if len(rest) == 1 else Mul(rest)
        return Mul((Const(-lead.value), *rest))
    return None


def _wrap(e: ScalarExpr, min_prec: int) -> str:
    text, prec = _py(e)
    if prec < min_prec:
        return f"({text})"
    return text


# ---------------------------------------------------------------------------
# json-ir

def to_json(e: ScalarExpr) -> dict:
    if isinstance(e, Const):
        return {"op": "const", "value": e.value}
    if isinstance(e, Var):
        return {"op": "var", "name": e.name}
    if isinstance(e, Add):
        return {"op": "add", "args": [to_json(t) for t in e.terms]}
    if isinstance(e, Mul):
        return {"op": "mul", "args": [to_json(f) for f in e.factors]}
    if isinstance(e, Neg):
        return {"op": "neg", "args": [to_json(e.child)]}
    if isinstance(e, Div):
        return {"op": "div", "args": [to_json(e.num), to_json(e.den)]}
    if isinstance(e, Pow):
        return {"op": "pow", "args": [to_json(e.base), {"op": "const", "value": float(e.exponent)}]}
    if isinstance(e, Sqrt):
        return {"op": "sqrt", "args": [to_json(e.child)]}
    if isinstance(e, Abs):
        return {"op": "abs", "args": [to_json(e.child)]}
    raise TypeError(f"not a scalar expression: {e!r}")


def from_json(doc: dict) -> ScalarExpr:
    op = doc.get("op")
    if op == "const":
        return Const(float(doc["value"]))
    if op == "var":
        return Var(doc["name"])
    args = [from_json(a) for a in doc.get("args", [])]
    if op == "add":
        return Add(tuple(args))
    if op == "mul":
        return Mul(tuple(args))
    if op == "neg":
        return Neg(args[0])
    if op == "div":
        return Div(args[0], args[1])
    if op == "pow":
        exp = args[1]
        if not isinstance(exp, Const):
            raise ValueError("pow exponent must be a constant")
        return Pow(args[0], int(exp.value))
    if op == "sqrt":
        return Sqrt(args[0])
    if op == "abs":
        return Abs(args[0])
    raise ValueError(f"unknown expression op {op!r}")
