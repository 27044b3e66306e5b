"""Clifford algebra kernel.

Blades are integer bitmasks (bit i set means basis vector e_(i+1) is a
factor); a multivector is a sparse map from blade to coefficient. The
coefficient domain is generic: plain floats for numeric work, ScalarExpr
trees for symbolic compilation. Mixed terms are fine -- float coefficients
promote on contact with symbolic ones.
"""
from __future__ import annotations

import math
import numbers
from dataclasses import dataclass
from functools import lru_cache

from .symexpr import (
    Abs,
    Const,
    DomainError,
    ScalarExpr,
    Sqrt,
    probably_zero,
    simplify,
)

ZERO_TOL = 1e-12


class AlgebraError(Exception):
    """Base for algebra failures."""


class AlgebraMismatch(AlgebraError):
    """Operands belong to different algebras."""


class ZeroNorm(AlgebraError):
    """Normalization of a (numerically) zero multivector."""


class NotInvertible(AlgebraError):
    """No inverse via reverse/scalar-norm exists for this element."""


class NonScalarSquare(AlgebraError):
    """Bivector exponential needs b*b to be a scalar (and, symbolically,
    a constant)."""


@dataclass(frozen=True)
class AlgebraSignature:
    """Diagonal metric signature: `positive` basis vectors squaring to +1,
    then `negative` squaring to -1, then `zero` squaring to 0."""

    positive: int
    negative: int
    zero: int = 0
    name: str = ""

    def __post_init__(self):
        if self.positive < 0 or self.negative < 0 or self.zero < 0:
            raise ValueError("signature counts must be non-negative")
        if self.dimension == 0:
            raise ValueError("algebra needs at least one basis vector")
        if self.dimension > 16:
            raise ValueError("dimensions above 16 are not supported")

    @property
    def dimension(self) -> int:
        return self.positive + self.negative + self.zero

    @property
    def blade_count(self) -> int:
        return 1 << self.dimension

    def vector_square(self, index: int) -> int:
        """Square of basis vector `index` (0-based): +1, -1, or 0."""
        if not 0 <= index < self.dimension:
            raise ValueError(f"basis index {index} out of range")
        if index < self.positive:
            return 1
        if index < self.positive + self.negative:
            return -1
        return 0

    def blade_name(self, blade: int) -> str:
        if blade == 0:
            return "1"
        return "e" + "".join(str(i + 1) for i in range(self.dimension) if blade >> i & 1)


CGA3D = AlgebraSignature(4, 1, 0, "cga3d")
EUCLID3D = AlgebraSignature(3, 0, 0, "euclid3d")
SPACES: dict[str, AlgebraSignature] = {s.name: s for s in (CGA3D, EUCLID3D)}


def blade_grade(blade: int) -> int:
    return blade.bit_count()


def basis_product(a: int, b: int, sig: AlgebraSignature) -> tuple[int, int]:
    """Geometric product of two basis blades: (sign, result blade).
    Sign counts the transpositions needed to merge the factor lists, then
    contracts repeated vectors through the metric (0 kills the term)."""
    swaps = 0
    t = a >> 1
    while t:
        swaps += (t & b).bit_count()
        t >>= 1
    sign = -1 if swaps & 1 else 1
    common = a & b
    i = 0
    while common:
        if common & 1:
            sq = sig.vector_square(i)
            if sq == 0:
                return 0, 0
            if sq < 0:
                sign = -sign
        common >>= 1
        i += 1
    return sign, a ^ b


@lru_cache(maxsize=None)
def _sign_table(sig: AlgebraSignature) -> dict[tuple[int, int], tuple[int, int]]:
    n = sig.blade_count
    return {
        (a, b): basis_product(a, b, sig)
        for a in range(n)
        for b in range(n)
    }


def _is_number(v) -> bool:
    return isinstance(v, numbers.Real)


def _canon_coeff(v):
    """Canonicalize a coefficient; return None when it should be pruned."""
    if _is_number(v):
        f = float(v)
        return None if abs(f) <= ZERO_TOL else f
    s = simplify(v)
    return None if s.is_zero() else s


def _residue_probably_zero(residue: "Multivector") -> bool:
    """Whether every off-scalar coefficient vanishes at numeric probes.

    Blade self-products are scalars mathematically, but with symbolic
    coefficients the cancellation hides inside undistributed products of
    sums that simplification leaves alone. Probing is the same evidence
    standard the compiler's dead-term elimination uses."""
    for coeff in residue.terms.values():
        if isinstance(coeff, ScalarExpr):
            if not probably_zero(coeff):
                return False
        elif abs(coeff) > ZERO_TOL:
            return False
    return True


class Multivector:
    """Sparse multivector over floats or ScalarExpr coefficients."""

    __slots__ = ("algebra", "terms")

    def __init__(self, algebra: AlgebraSignature, terms: dict):
        clean: dict[int, object] = {}
        limit = algebra.blade_count
        for blade, coeff in terms.items():
            if not 0 <= blade < limit:
                raise ValueError(f"blade {blade} out of range for {algebra.name}")
            c = _canon_coeff(coeff)
            if c is not None:
                clean[blade] = c
        object.__setattr__(self, "algebra", algebra)
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("Multivector is immutable")

    # -- constructors -------------------------------------------------------

    @classmethod
    def zero(cls, algebra: AlgebraSignature) -> "Multivector":
        return cls(algebra, {})

    @classmethod
    def scalar(cls, algebra: AlgebraSignature, value) -> "Multivector":
        return cls(algebra, {0: value})

    @classmethod
    def basis(cls, algebra: AlgebraSignature, blade: int, coeff=1.0) -> "Multivector":
        return cls(algebra, {blade: coeff})

    @classmethod
    def pseudoscalar(cls, algebra: AlgebraSignature) -> "Multivector":
        return cls(algebra, {algebra.blade_count - 1: 1.0})

    # -- inspection ----------------------------------------------------------

    def coeff(self, blade: int):
        return self.terms.get(blade, 0.0)

    def grades(self) -> set[int]:
        return {blade_grade(b) for b in self.terms}

    def grade_part(self, k: int) -> "Multivector":
        return Multivector(
            self.algebra, {b: c for b, c in self.terms.items() if blade_grade(b) == k}
        )

    def scalar_part(self):
        return self.terms.get(0, 0.0)

    def is_zero(self, tol: float = ZERO_TOL) -> bool:
        if not self.terms:
            return True
        return all(_is_number(c) and abs(c) <= tol for c in self.terms.values())

    def is_symbolic(self) -> bool:
        return any(isinstance(c, ScalarExpr) for c in self.terms.values())

    def max_abs(self) -> float:
        """Largest coefficient magnitude; numeric multivectors only."""
        vals = [abs(c) for c in self.terms.values() if _is_number(c)]
        if len(vals) != len(self.terms):
            raise AlgebraError("max_abs needs a numeric multivector")
        return max(vals, default=0.0)

    def approx_eq(self, other: "Multivector", tol: float = 1e-9) -> bool:
        self._check(other)
        for b in set(self.terms) | set(other.terms):
            if abs(self.coeff(b) - other.coeff(b)) > tol:
                return False
        return True

    def _check(self, other: "Multivector"):
        if self.algebra != other.algebra:
            raise AlgebraMismatch(
                f"mixed algebras: {self.algebra.name} vs {other.algebra.name}"
            )

    # -- linear ops ----------------------------------------------------------

    def __add__(self, other):
        if not isinstance(other, Multivector):
            return NotImplemented
        self._check(other)
        out = dict(self.terms)
        for b, c in other.terms.items():
            out[b] = out[b] + c if b in out else c
        return Multivector(self.algebra, out)

    def __sub__(self, other):
        if not isinstance(other, Multivector):
            return NotImplemented
        return self + (-other)

    def __neg__(self):
        return Multivector(self.algebra, {b: -c for b, c in self.terms.items()})

    def scale(self, factor) -> "Multivector":
        return Multivector(self.algebra, {b: c * factor for b, c in self.terms.items()})

    def divide_by_scalar(self, s) -> "Multivector":
        return Multivector(self.algebra, {b: c / s for b, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, Multivector):
            return self.gp(other)
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def __xor__(self, other):
        return self.wedge(other)

    # -- products ------------------------------------------------------------

    def _product(self, other: "Multivector", keep) -> "Multivector":
        self._check(other)
        # precomputed table pays off for small algebras; 2^(2d) entries otherwise
        table = _sign_table(self.algebra) if self.algebra.dimension <= 8 else None
        acc: dict[int, object] = {}
        for ba, ca in self.terms.items():
            for bb, cb in other.terms.items():
                if not keep(ba, bb):
                    continue
                sign, blade = (
                    table[ba, bb] if table is not None else basis_product(ba, bb, self.algebra)
                )
                if sign == 0:
                    continue
                term = ca * cb
                if sign < 0:
                    term = -term
                acc[blade] = acc[blade] + term if blade in acc else term
        return Multivector(self.algebra, acc)

    def gp(self, other: "Multivector") -> "Multivector":
        """Geometric product."""
        return self._product(other, lambda a, b: True)

    def wedge(self, other: "Multivector") -> "Multivector":
        """Outer product: keeps only grade-summing (disjoint) blade pairs,
        so the metric never contributes."""
        return self._product(other, lambda a, b: a & b == 0)

    def lcont(self, other: "Multivector") -> "Multivector":
        """Left contraction a ⌋ b: grade(result) = grade(b) - grade(a)."""
        return self._product(
            other, lambda a, b: a & ~b == 0  # a's factors all inside b
        )

    # -- involutions and norms ------------------------------------------------

    def reverse(self) -> "Multivector":
        out = {}
        for b, c in self.terms.items():
            k = blade_grade(b)
            out[b] = -c if (k * (k - 1) // 2) & 1 else c
        return Multivector(self.algebra, out)

    def norm(self):
        """sqrt(|<a ~a>_0|). Numeric in, float out; symbolic in, expression out."""
        s = self.gp(self.reverse()).scalar_part()
        if _is_number(s):
            return math.sqrt(abs(s))
        return simplify(Sqrt(Abs(s)))

    def normalize(self) -> "Multivector":
        n = self.norm()
        if _is_number(n):
            if n <= ZERO_TOL:
                raise ZeroNorm("cannot normalize a zero-norm multivector")
            return self.divide_by_scalar(n)
        if n.is_zero():
            raise ZeroNorm("cannot normalize a zero-norm multivector")
        return self.divide_by_scalar(n)

    def inverse(self) -> "Multivector":
        """Inverse via ~a / <a ~a>_0, valid when a ~a is a pure scalar."""
        rev = self.reverse()
        m = self.gp(rev)
        s = m.scalar_part()
        residue = m - Multivector(self.algebra, {0: s})
        if residue.terms:
            if residue.is_zero(ZERO_TOL):
                pass  # numeric dust below tolerance
            elif not _residue_probably_zero(residue):
                raise NotInvertible("a * reverse(a) is not a scalar")
        if _is_number(s):
            if abs(s) <= ZERO_TOL:
                raise NotInvertible("scalar norm is zero")
            return rev.divide_by_scalar(s)
        s = simplify(s)
        if s.is_zero():
            raise NotInvertible("scalar norm is symbolically zero")
        return rev.divide_by_scalar(s)

    def dual(self) -> "Multivector":
        """a ⌋ inverse(pseudoscalar); needs a nondegenerate metric."""
        if self.algebra.zero:
            raise AlgebraError("dual undefined in a degenerate algebra")
        return self.lcont(Multivector.pseudoscalar(self.algebra).inverse())

    # -- misc ------------------------------------------------------------------

    def map_coeffs(self, fn) -> "Multivector":
        return Multivector(self.algebra, {b: fn(c) for b, c in self.terms.items()})

    def __eq__(self, other):
        if not isinstance(other, Multivector):
            return NotImplemented
        return self.algebra == other.algebra and self.terms == other.terms

    def __hash__(self):
        return hash((self.algebra, tuple(sorted(self.terms.items(), key=lambda kv: kv[0]))))

    def __repr__(self):
        if not self.terms:
            return "0"
        bits = []
        for b in sorted(self.terms):
            c = self.terms[b]
            name = self.algebra.blade_name(b)
            if b == 0:
                bits.append(repr(c) if _is_number(c) else f"({c!r})")
            elif _is_number(c):
                bits.append(f"{c!r}*{name}")
            else:
                bits.append(f"({c!r})*{name}")
        return " + ".join(bits)


def sandwich(v: Multivector, a: Multivector) -> Multivector:
    """v a v^-1."""
    return v.gp(a).gp(v.inverse())


def exp_bivector(b: Multivector) -> Multivector:
    """Closed-form exponential of a bivector whose square is scalar.

    b*b < 0: cos(t) + b sin(t)/t with t = sqrt(-b*b)
    b*b > 0: cosh(t) + b sinh(t)/t
    b*b = 0: 1 + b
    Symbolic coefficients are allowed only when b*b folds to a constant.
    """
    one = Multivector.scalar(b.algebra, 1.0)
    if not b.terms:
        return one
    if b.grades() != {2}:
        raise NonScalarSquare("exp expects a pure bivector")
    sq = b.gp(b)
    s = sq.scalar_part()
    residue = sq - Multivector(b.algebra, {0: s})
    if residue.terms and not residue.is_zero(ZERO_TOL):
        raise NonScalarSquare("bivector square is not a scalar")
    if isinstance(s, ScalarExpr):
        s = simplify(s)
        if not isinstance(s, Const):
            raise NonScalarSquare("bivector square must be a constant")
        s = s.value
    if abs(s) <= ZERO_TOL:
        return one + b
    if s < 0:
        t = math.sqrt(-s)
        return Multivector.scalar(b.algebra, math.cos(t)) + b.scale(math.sin(t) / t)
    t = math.sqrt(s)
    return Multivector.scalar(b.algebra, math.cosh(t)) + b.scale(math.sinh(t) / t)
