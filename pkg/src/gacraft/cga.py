"""Conformal model of 3D space in Cl(4,1).

Basis: e1..e3 Euclidean, e4 squaring to +1, e5 squaring to -1. The null
directions are derived: ninf = e5 + e4 (point at infinity) and no =
(e5 - e4)/2 (origin), so ninf . no = -1.

Object builders are generic over the coefficient domain (floats or
ScalarExpr), so the script compiler and the numeric interpreter share one
set of formulas. Decoders (extract_point, classify, ...) are numeric.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

from .algebra import (
    CGA3D,
    AlgebraError,
    Multivector,
    NotInvertible,
    ZERO_TOL,
    blade_grade,
    exp_bivector,
    sandwich,
)

E1, E2, E3, EP, EM = 1, 2, 4, 8, 16

NULL_TOL = 1e-9
FLAT_TOL = 1e-9


class CgaError(AlgebraError):
    pass


class NotAPoint(CgaError):
    """Multivector does not decode to a conformal point."""


class DegenerateInput(CgaError):
    """Construction input is degenerate (zero normal, coincident points...)."""


class ImaginaryPair(CgaError):
    """Point pair with negative discriminant: the objects do not intersect."""


@dataclass(frozen=True)
class EuclidPoint:
    x: float
    y: float
    z: float

    def coords(self) -> tuple[float, float, float]:
        return (self.x, self.y, self.z)

    def dist(self, other: "EuclidPoint") -> float:
        return math.sqrt(
            (self.x - other.x) ** 2 + (self.y - other.y) ** 2 + (self.z - other.z) ** 2
        )


class GeometricObjectKind(str, Enum):
    POINT = "point"
    SPHERE = "sphere"
    PLANE = "plane"
    LINE = "line"
    CIRCLE = "circle"
    POINT_PAIR = "point_pair"
    UNKNOWN = "unknown"


def ninf() -> Multivector:
    return Multivector(CGA3D, {EP: 1.0, EM: 1.0})


def no() -> Multivector:
    return Multivector(CGA3D, {EP: -0.5, EM: 0.5})


def euclid_vector(x, y, z) -> Multivector:
    return Multivector(CGA3D, {E1: x, E2: y, E3: z})


def null_weights(mv: Multivector) -> tuple:
    """(ninf weight, no weight) of a grade-1 multivector: with diagonal
    coefficients v4, v5 these are (v4+v5)/2 and v5-v4."""
    v4, v5 = mv.coeff(EP), mv.coeff(EM)
    return (v4 + v5) * 0.5, v5 - v4


# ---------------------------------------------------------------------------
# builders (generic over coefficient domain)

def point_from_scalars(x, y, z) -> Multivector:
    """P = x e1 + y e2 + z e3 + (x^2+y^2+z^2)/2 ninf + no; null by construction."""
    alpha = (x * x + y * y + z * z) * 0.5
    return euclid_vector(x, y, z) + ninf().scale(alpha) + no()


def embed_point(p: EuclidPoint) -> Multivector:
    return point_from_scalars(p.x, p.y, p.z)


def sphere_from_center_mv(center: Multivector, r) -> Multivector:
    """Inner-product-form sphere: S = C - r^2/2 ninf for a conformal point C."""
    return center - ninf().scale(r * r * 0.5)


def sphere_ipns(center: EuclidPoint, r: float) -> Multivector:
    return sphere_from_center_mv(embed_point(center), float(r))


def plane_from_scalars(nx, ny, nz, d) -> Multivector:
    """Inner-product-form plane: unit normal + d ninf."""
    from .symexpr import ScalarExpr, Sqrt, simplify

    sq = nx * nx + ny * ny + nz * nz
    if isinstance(sq, ScalarExpr):
        from .symexpr import Const

        sq = simplify(sq)
        if isinstance(sq, Const) and sq.value <= ZERO_TOL:
            raise DegenerateInput("plane normal must be nonzero")
        n = simplify(Sqrt(sq))
    else:
        n = math.sqrt(sq)
        if n <= ZERO_TOL:
            raise DegenerateInput("plane normal must be nonzero")
    return euclid_vector(nx / n, ny / n, nz / n) + ninf().scale(d)


def plane_ipns(normal: EuclidPoint, d: float) -> Multivector:
    return plane_from_scalars(normal.x, normal.y, normal.z, float(d))


def line_opns(p1: EuclidPoint, p2: EuclidPoint) -> Multivector:
    mv = embed_point(p1).wedge(embed_point(p2)).wedge(ninf())
    if mv.is_zero(ZERO_TOL):
        raise DegenerateInput("line needs two distinct points")
    return mv


def circle_opns(p1: EuclidPoint, p2: EuclidPoint, p3: EuclidPoint) -> Multivector:
    mv = embed_point(p1).wedge(embed_point(p2)).wedge(embed_point(p3))
    if mv.is_zero(ZERO_TOL):
        raise DegenerateInput("circle needs three distinct points")
    if mv.wedge(ninf()).max_abs() <= FLAT_TOL * max(mv.max_abs(), 1.0):
        raise DegenerateInput("circle points are collinear")
    return mv


def translator_from_scalars(tx, ty, tz) -> Multivector:
    """T = 1 - t ninf / 2; sandwiching with it translates by (tx, ty, tz)."""
    t = euclid_vector(tx, ty, tz)
    return Multivector.scalar(CGA3D, 1.0) - t.gp(ninf()).scale(0.5)


def translator(t: EuclidPoint) -> Multivector:
    return translator_from_scalars(t.x, t.y, t.z)


def rotor(plane_bivector: Multivector, angle) -> Multivector:
    """exp(-angle/2 * B) for a unit bivector B: rotates by `angle` in that
    plane (e1^e2 plane, pi/2 sends e1 to e2)."""
    return exp_bivector(plane_bivector.scale(angle * -0.5))


def reflect(a: Multivector, mirror: Multivector) -> Multivector:
    """-M a M^-1 (odd-grade mirrors such as planes and spheres)."""
    return -sandwich(mirror, a)


def project(a: Multivector, b: Multivector) -> Multivector:
    """(a . b) b^-1."""
    return a.lcont(b).gp(b.inverse())


def intersect_ipns(*objs: Multivector) -> Multivector:
    """Meet of inner-product-form objects: their outer product."""
    if not objs:
        raise ValueError("intersect needs at least one object")
    out = objs[0]
    for o in objs[1:]:
        out = out.wedge(o)
    return out


def pair_point(pair_ipns: Multivector, sign: int) -> Multivector:
    """One point of an inner-product-form point pair (grade 3), as an
    unnormalized conformal point:

        X = (T + sign*sqrt(<T T>_0)) * (-ninf . T)^-1,  T = dual(pair)

    Works over symbolic coefficients too (sqrt becomes a Sqrt node).
    """
    from .symexpr import Const, ScalarExpr, Sqrt, simplify

    t = pair_ipns.dual()
    disc = t.gp(t).scalar_part()
    if isinstance(disc, ScalarExpr):
        disc = simplify(disc)
        if isinstance(disc, Const) and disc.value < -ZERO_TOL:
            raise ImaginaryPair(f"pair discriminant {disc.value!r} is negative")
        root = simplify(Sqrt(disc))
    else:
        if disc < -ZERO_TOL:
            raise ImaginaryPair(f"pair discriminant {disc!r} is negative")
        root = math.sqrt(max(disc, 0.0))
    denom = -(ninf().lcont(t))
    num = t + Multivector.scalar(CGA3D, root if sign > 0 else -root)
    return num.gp(denom.inverse())


def point_pair_split(pair_ipns: Multivector) -> tuple[EuclidPoint, EuclidPoint]:
    """Decode an inner-product-form point pair into its two Euclidean points.
    A tangent pair (discriminant ~ 0) collapses to the same point twice."""
    try:
        a = extract_point(pair_point(pair_ipns, +1))
        b = extract_point(pair_point(pair_ipns, -1))
    except NotInvertible as exc:
        raise DegenerateInput(f"degenerate point pair: {exc}") from exc
    return a, b


def extract_point(mv: Multivector) -> EuclidPoint:
    """Normalize a conformal point (no-weight to 1) and read off x, y, z."""
    if not mv.terms:
        raise NotAPoint("zero multivector")
    off_grade = Multivector(mv.algebra, {b: c for b, c in mv.terms.items() if blade_grade(b) != 1})
    v = mv - off_grade
    if off_grade.max_abs() > NULL_TOL * max(v.max_abs(), 1.0):
        raise NotAPoint("not grade 1")
    _, weight = null_weights(v)
    if abs(weight) <= ZERO_TOL:
        raise NotAPoint("zero origin weight (point at infinity?)")
    v = v.divide_by_scalar(weight)
    sq = v.gp(v).scalar_part()
    if abs(sq) > NULL_TOL:
        raise NotAPoint(f"not null after normalization (v*v = {sq!r})")
    return EuclidPoint(v.coeff(E1), v.coeff(E2), v.coeff(E3))


# ---------------------------------------------------------------------------
# classification

def classify(mv: Multivector) -> tuple[GeometricObjectKind, dict]:
    """Best-effort kind + scene parameters for a numeric multivector.
    Returns (UNKNOWN, {}) rather than raising on anything unrecognized."""
    if mv.algebra != CGA3D:
        if mv.grades() == {1}:
            return GeometricObjectKind.POINT, {
                "x": mv.coeff(E1), "y": mv.coeff(E2), "z": mv.coeff(E3)
            }
        return GeometricObjectKind.UNKNOWN, {}
    if mv.is_zero(ZERO_TOL) or mv.is_symbolic():
        return GeometricObjectKind.UNKNOWN, {}
    grades = mv.grades()
    if len(grades) != 1:
        return GeometricObjectKind.UNKNOWN, {}
    k = grades.pop()
    try:
        if k == 1:
            return _classify_vector(mv)
        if k == 2:
            pair = _try_pair(mv, ipns=False)
            if pair:
                return pair
            return _classify_grade3(mv.dual())
        if k == 3:
            return _classify_grade3(mv)
        if k == 4:
            return _classify_vector(mv.dual())
    except (AlgebraError, ArithmeticError):
        return GeometricObjectKind.UNKNOWN, {}
    return GeometricObjectKind.UNKNOWN, {}


def _classify_vector(v: Multivector) -> tuple[GeometricObjectKind, dict]:
    inf_w, origin_w = null_weights(v)
    euclid = (v.coeff(E1), v.coeff(E2), v.coeff(E3))
    scale = max(v.max_abs(), 1e-30)
    if abs(origin_w) > NULL_TOL * scale:
        vn = v.divide_by_scalar(origin_w)
        sq = vn.gp(vn).scalar_part()
        if abs(sq) <= NULL_TOL:
            p = extract_point(vn)
            return GeometricObjectKind.POINT, {"x": p.x, "y": p.y, "z": p.z}
        if sq > 0:
            return GeometricObjectKind.SPHERE, {
                "cx": vn.coeff(E1), "cy": vn.coeff(E2), "cz": vn.coeff(E3),
                "r": math.sqrt(sq),
            }
        return GeometricObjectKind.UNKNOWN, {}
    n = math.sqrt(sum(c * c for c in euclid))
    if n <= NULL_TOL * scale:
        return GeometricObjectKind.UNKNOWN, {}
    return GeometricObjectKind.PLANE, {
        "nx": euclid[0] / n, "ny": euclid[1] / n, "nz": euclid[2] / n,
        "d": inf_w / n,
    }


def _classify_grade3(mv: Multivector) -> tuple[GeometricObjectKind, dict]:
    scale = max(mv.max_abs(), 1e-30)
    if mv.wedge(ninf()).max_abs() <= FLAT_TOL * scale:
        return _decode_line(mv)
    pair = _try_pair(mv, ipns=True)
    if pair:
        return pair
    return _decode_circle(mv)


def _try_pair(mv: Multivector, ipns: bool):
    """Attempt a point-pair reading; None when the discriminant or the
    decoded points reject it."""
    try:
        pair = mv if ipns else mv.dual()
        a, b = point_pair_split(pair)
    except (CgaError, AlgebraError):
        return None
    return GeometricObjectKind.POINT_PAIR, {
        "p1": {"x": a.x, "y": a.y, "z": a.z},
        "p2": {"x": b.x, "y": b.y, "z": b.z},
    }


def _decode_line(mv: Multivector) -> tuple[GeometricObjectKind, dict]:
    """Outer-product-form line u^e45 + m^(e4+e5): direction from e_i45
    blades, Plucker moment from e_ij4; closest point to origin u x m / |u|^2."""
    u = (mv.coeff(E1 | EP | EM), mv.coeff(E2 | EP | EM), mv.coeff(E3 | EP | EM))
    m = (
        mv.coeff(E2 | E3 | EP),          # m_23
        -mv.coeff(E1 | E3 | EP),         # -m_13
        mv.coeff(E1 | E2 | EP),          # m_12
    )
    uu = sum(c * c for c in u)
    if uu <= (FLAT_TOL * max(mv.max_abs(), 1e-30)) ** 2:
        return GeometricObjectKind.UNKNOWN, {}
    px = (u[1] * m[2] - u[2] * m[1]) / uu
    py = (u[2] * m[0] - u[0] * m[2]) / uu
    pz = (u[0] * m[1] - u[1] * m[0]) / uu
    un = math.sqrt(uu)
    return GeometricObjectKind.LINE, {
        "px": px, "py": py, "pz": pz,
        "dx": u[0] / un, "dy": u[1] / un, "dz": u[2] / un,
    }


def _decode_circle(mv: Multivector) -> tuple[GeometricObjectKind, dict]:
    """Outer-product-form circle: carrier plane = dual(C ^ ninf); the
    sphere with the circle's center/radius is dual(C) * plane^-1."""
    plane = mv.wedge(ninf()).dual()
    kind, pparams = _classify_vector(plane)
    if kind != GeometricObjectKind.PLANE:
        return GeometricObjectKind.UNKNOWN, {}
    nvec = euclid_vector(pparams["nx"], pparams["ny"], pparams["nz"]) + ninf().scale(
        pparams["d"]
    )
    sphere = mv.dual().gp(nvec.inverse())
    sphere = sphere.grade_part(1)
    skind, sparams = _classify_vector(sphere)
    if skind == GeometricObjectKind.POINT:
        # zero-radius circle: still report it, radius 0
        sparams = {"cx": sparams["x"], "cy": sparams["y"], "cz": sparams["z"], "r": 0.0}
    elif skind != GeometricObjectKind.SPHERE:
        return GeometricObjectKind.UNKNOWN, {}
    return GeometricObjectKind.CIRCLE, {
        "cx": sparams["cx"], "cy": sparams["cy"], "cz": sparams["cz"],
        "nx": pparams["nx"], "ny": pparams["ny"], "nz": pparams["nz"],
        "r": sparams["r"],
    }
