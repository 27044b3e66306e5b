"""Deterministic request decomposition.

The planner splits a request into clauses, matches each clause against a
closed set of intent patterns, and emits categorized subtask records whose
descriptions are written in the controlled sentence grammar the analysis
stage parses. No model is involved: the same request always yields the
same plan.
"""
from __future__ import annotations

import math
import re

from ..script.printer import format_number
from .records import (
    Plan,
    PlanRequest,
    ReActTrace,
    SubtaskCategory,
    SubtaskRecord,
)

NUM = r"-?\d+(?:\.\d+)?"
NAME = r"[A-Za-z][A-Za-z0-9_]*"
VEC = rf"\(\s*({NUM})\s*,\s*({NUM})\s*,\s*({NUM})\s*\)"

AXIS_PLANES = {"x": "e2 ^ e3", "y": "e3 ^ e1", "z": "e1 ^ e2"}

ANON_PREFIXES = {
    "point": "x",
    "vector": "u",
    "sphere": "S",
    "plane": "pl",
    "line": "L",
    "circle": "C",
    "point_pair": "pp",
    "versor": "T",
    "multivector": "w",
    "scalar": "val",
}


class UnrecognizedIntent(Exception):
    """A request clause matched no known intent pattern."""

    def __init__(self, clause: str):
        super().__init__(f"cannot recognize an intent in: {clause!r}")
        self.clause = clause


def _num(text: str) -> str:
    """Canonical literal spelling for a number captured from the request."""
    return format_number(float(text))


def _vec_text(x: str, y: str, z: str) -> str:
    return f"({_num(x)}, {_num(y)}, {_num(z)})"


class _Builder:
    def __init__(self, space: str, language: str):
        self.space = space
        self.language = language
        self.subtasks: list[SubtaskRecord] = []
        self.kinds: dict[str, str] = {}
        self.produced_by: dict[str, str] = {}
        self.counters: dict[str, int] = {}
        self.cycles: list[tuple[str, str, str]] = []

    def anon(self, kind: str) -> str:
        prefix = ANON_PREFIXES.get(kind, "w")
        n = self.counters.get(prefix, 0) + 1
        self.counters[prefix] = n
        name = f"{prefix}{n}"
        while name in self.kinds:
            n += 1
            self.counters[prefix] = n
            name = f"{prefix}{n}"
        return name

    def add(
        self,
        slug: str,
        description: str,
        produced: list[tuple[str, str]],
        category: SubtaskCategory,
        values: list[tuple[str, float]] = (),
        visualization: list[tuple[str, str]] = (),
        consumed: list[str] = (),
    ) -> SubtaskRecord:
        task_id = f"t{len(self.subtasks) + 1}"
        deps = []
        for name in consumed:
            owner = self.produced_by.get(name)
            if owner and owner not in deps:
                deps.append(owner)
        record = SubtaskRecord(
            task_id=task_id,
            task_name=slug,
            task_description=description,
            variable_names=tuple(n for n, _ in produced),
            category=category,
            code_language=self.language,
            ga_type=self.space,
            specific_values=tuple(values),
            visualization=tuple(visualization),
            depends_on=tuple(deps),
        )
        self.subtasks.append(record)
        for name, kind in produced:
            self.kinds[name] = kind
            self.produced_by[name] = task_id
        return record

    def kind_of(self, name: str, clause: str) -> str:
        kind = self.kinds.get(name)
        if kind is None:
            raise UnrecognizedIntent(clause)
        return kind


def _split_clauses(text: str) -> list[str]:
    text = re.sub(r"\s+", " ", text).strip()
    text = re.sub(r"\bFinally,\s*", "", text)
    parts: list[str] = []
    for sentence in re.split(r"(?<=[.;])\s+", text):
        for piece in re.split(r",\s*(?:and\s+)?then\s+|\s+then\s+", sentence):
            piece = piece.strip().strip(".;").strip()
            if piece:
                parts.append(piece)
    return parts


def _pop_colors(clause: str) -> tuple[str, list[str]]:
    colors = []

    def grab(m):
        colors.append(m.group(1))
        return ""

    clause = re.sub(
        rf"\s*\(color:\s*(rgb\([^)]*\)|[A-Za-z]+)\s*\)", grab, clause
    )
    return clause.strip().strip(",").strip(), colors


KIND_WORDS = {
    "a", "an", "the", "point", "points", "vector", "vectors", "sphere",
    "spheres", "plane", "planes", "line", "lines", "circle", "circles",
}


def _real_name(token: str | None) -> str | None:
    """The optional-name groups can swallow the kind word itself in
    anonymous phrasings like 'a sphere centered at'; filter those."""
    if token is None or token.lower() in KIND_WORDS:
        return None
    return token


class _Claims:
    """Character ranges of a clause already consumed by a matcher."""

    def __init__(self):
        self.spans: list[tuple[int, int]] = []

    def free(self, span: tuple[int, int]) -> bool:
        a, b = span
        return all(b <= s or a >= e for s, e in self.spans)

    def take(self, span: tuple[int, int]) -> None:
        self.spans.append(span)


def _key(owner: str, suffix: str) -> str:
    return owner.lower() + suffix


def _point_sentence(name: str, x: str, y: str, z: str) -> tuple[str, list]:
    values = [(_key(name, "x"), float(x)), (_key(name, "y"), float(y)),
              (_key(name, "z"), float(z))]
    return f"Create point {name} at {_vec_text(x, y, z)}", values


def plan(request: PlanRequest) -> Plan:
    """Decompose a request into an ordered, categorized plan."""
    text = re.sub(r"\s+", " ", request.description).strip()
    if not text:
        raise UnrecognizedIntent("")

    space = request.space
    language = request.language
    m = re.search(r"\bIn (conformal|euclidean) space\b[,:]?\s*", text, re.I)
    if m:
        space = "cga3d" if m.group(1).lower() == "conformal" else "euclid3d"
        text = text[: m.start()] + text[m.end():]
    lang_m = re.search(r"\bI need (python|json-ir) code\.?\s*", text, re.I)
    if lang_m:
        language = lang_m.group(1).lower()
        text = text[: lang_m.start()] + text[lang_m.end():]
    text = re.sub(r"^\s*Visualization formula[^:]*:\s*", "", text)

    builder = _Builder(space, language)
    if not _match_three_spheres(text, builder):
        for clause in _split_clauses(text):
            _match_clause(clause, builder)
    if not builder.subtasks:
        raise UnrecognizedIntent(text)

    trace = ReActTrace()
    for observation, thoughts, action in builder.cycles:
        trace = trace.extended(observation, thoughts, action)
    return Plan(
        description=request.description,
        formula=request.formula,
        space=space,
        language=language,
        subtasks=tuple(builder.subtasks),
        trace=trace,
    )


def _match_three_spheres(text: str, b: _Builder) -> bool:
    """The grouped form: three spheres by center and radius, then their
    intersection points. Handled on the whole request so the generic
    clause matchers never see its unusual comma structure."""
    m = re.search(
        rf"create three spheres\s+({NAME}),\s*({NAME}),?\s*(?:and\s+)?({NAME})\s+"
        rf"with centers at\s+({NAME})\s*{VEC},\s*({NAME})\s*{VEC},?\s*and\s+({NAME})\s*{VEC},?\s*"
        rf"with radii of\s+({NUM}),\s*({NUM}),?\s*and\s+({NUM})",
        text,
        re.I,
    )
    pts = re.search(rf"intersection points\s+({NAME})\s+and\s+({NAME})", text, re.I)
    if not (m and pts):
        return False
    s = m.group(1), m.group(2), m.group(3)
    centers = [
        (m.group(4), m.group(5), m.group(6), m.group(7)),
        (m.group(8), m.group(9), m.group(10), m.group(11)),
        (m.group(12), m.group(13), m.group(14), m.group(15)),
    ]
    radii = m.group(16), m.group(17), m.group(18)
    colors_m = re.search(
        r"visualized in\s+([a-z]+),\s*([a-z]+),?\s*and\s+([a-z]+)", text, re.I
    )
    pt_color_m = re.search(r"visualize them in\s+([a-z]+)", text, re.I)

    sentences, values = [], []
    for name, x, y, z in centers:
        sent, vals = _point_sentence(name, x, y, z)
        sentences.append(sent)
        values.extend(vals)
    b.add(
        "create_center_points",
        "; ".join(sentences) + ".",
        [(name, "point") for name, *_ in centers],
        SubtaskCategory.OBJECT_CREATION,
        values,
    )
    b.cycles.append((
        f"matched three sphere centers {', '.join(c[0] for c in centers)}",
        "the spheres need their center points first",
        f"subtask t1 creates points {', '.join(c[0] for c in centers)}",
    ))

    sentences, values, vis = [], [], []
    for i, name in enumerate(s):
        sentences.append(
            f"Create sphere {name} with center {centers[i][0]} "
            f"and radius {_num(radii[i])}"
        )
        values.append((_key(name, "r"), float(radii[i])))
        if colors_m:
            vis.append((name, colors_m.group(1 + i).lower()))
    b.add(
        "create_spheres",
        "; ".join(sentences) + ".",
        [(name, "sphere") for name in s],
        SubtaskCategory.OBJECT_CREATION,
        values,
        vis,
        consumed=[c[0] for c in centers],
    )
    b.cycles.append((
        f"matched three spheres {', '.join(s)} with radii {', '.join(radii)}",
        "each sphere is its center point shifted along the infinity direction",
        f"subtask t2 creates spheres {', '.join(s)}",
    ))

    pair = b.anon("point_pair")
    a_name, b_name = pts.group(1), pts.group(2)
    vis = []
    if pt_color_m:
        color = pt_color_m.group(1).lower()
        vis = [(a_name, color), (b_name, color)]
    b.add(
        "intersect_spheres",
        f"Intersect spheres {s[0]}, {s[1]} and {s[2]} into point pair {pair}; "
        f"split {pair} into points {a_name} and {b_name}.",
        [(pair, "point_pair"), (a_name, "point"), (b_name, "point")],
        SubtaskCategory.ELEMENT_OPERATION,
        visualization=vis,
        consumed=list(s),
    )
    b.cycles.append((
        f"matched intersection points {a_name} and {b_name} of the three spheres",
        "three spheres meet in a point pair, which splits into two points",
        f"subtask t3 intersects {', '.join(s)} and splits {pair}",
    ))
    return True


def _match_clause(clause: str, b: _Builder) -> None:
    body, colors = _pop_colors(clause)
    claims = _Claims()
    created: list[tuple[str, str]] = []  # (name, kind) in clause order

    handled = _scan_lines(body, b, claims, created)
    handled = _scan_circles(body, b, claims, created) or handled
    handled = _scan_spheres(body, b, claims, created) or handled
    handled = _scan_planes(body, b, claims, created) or handled
    handled = _scan_point_like(body, b, claims, created, "vector") or handled
    handled = _scan_point_like(body, b, claims, created, "point") or handled
    handled = _match_operation(body, b, colors, created) or handled

    if created and not _match_operation_matched(body):
        # a pure creation clause: colors attach to what it created
        vis = []
        if colors:
            for name, _kind in created:
                vis.append((name, colors[len(vis) % len(colors)]))
        if vis:
            last = b.subtasks[-1]
            merged = dict(last.visualization)
            merged.update({n: c for n, c in vis if n in set(last.variable_names)})
            b.subtasks[-1] = SubtaskRecord(
                task_id=last.task_id,
                task_name=last.task_name,
                task_description=last.task_description,
                variable_names=last.variable_names,
                category=last.category,
                code_language=last.code_language,
                ga_type=last.ga_type,
                specific_values=last.specific_values,
                visualization=tuple(merged.items()),
                depends_on=last.depends_on,
            )
    if not handled:
        raise UnrecognizedIntent(clause)


_OPERATION_HINT = re.compile(
    r"\b(intersection|product of|dual of|reverse of|inverse of|normalize|"
    r"translate|rotate|reflect|project|distance between|norm of|square root)\b",
    re.I,
)


def _match_operation_matched(body: str) -> bool:
    return bool(_OPERATION_HINT.search(body))


def _scan_point_like(body, b, claims, created, kind: str) -> bool:
    if not re.search(rf"\b{kind}s?\b", body, re.I):
        return False
    specs = []
    for m in re.finditer(rf"\b({NAME})\s*{VEC}", body):
        if claims.free(m.span()):
            claims.take(m.span())
            specs.append(m.groups())
    if not specs:
        return False
    sentences, values = [], []
    verb = "point" if kind == "point" else "vector"
    for name, x, y, z in specs:
        if kind == "point":
            sent, vals = _point_sentence(name, x, y, z)
        else:
            vals = [(_key(name, "x"), float(x)), (_key(name, "y"), float(y)),
                    (_key(name, "z"), float(z))]
            sent = f"Create vector {name} at {_vec_text(x, y, z)}"
        sentences.append(sent)
        values.extend(vals)
        created.append((name, kind))
    names = [s[0] for s in specs]
    b.add(
        f"create_{verb}s",
        "; ".join(sentences) + ".",
        [(n, kind) for n in names],
        SubtaskCategory.OBJECT_CREATION,
        values,
    )
    b.cycles.append((
        f"matched {verb} creation: {', '.join(names)}",
        f"each {verb} is built from its three coordinates",
        f"subtask {b.subtasks[-1].task_id} creates {', '.join(names)}",
    ))
    return True


def _scan_spheres(body, b, claims, created) -> bool:
    if not re.search(r"\bspheres?\b", body, re.I):
        return False
    named_center = re.compile(
        rf"\b({NAME})\s+centered at\s+({NAME})\s*{VEC}\s+with radius\s+({NUM})"
    )
    anon_center = re.compile(
        rf"(?:\b({NAME})\s+)?centered at\s+{VEC}\s+with radius\s+({NUM})"
    )
    specs = []
    for m in named_center.finditer(body):
        if claims.free(m.span()):
            claims.take(m.span())
            name, center, x, y, z, r = m.groups()
            specs.append((name, center, x, y, z, r))
    for m in anon_center.finditer(body):
        if claims.free(m.span()):
            claims.take(m.span())
            name, x, y, z, r = m.groups()
            specs.append((_real_name(name), None, x, y, z, r))
    if not specs:
        return False
    sentences, values, produced = [], [], []
    for name, center, x, y, z, r in specs:
        if name is None:
            name = b.anon("sphere")
        if center is not None:
            sent, vals = _point_sentence(center, x, y, z)
            sentences.append(sent)
            values.extend(vals)
            produced.append((center, "point"))
            sentences.append(
                f"Create sphere {name} with center {center} and radius {_num(r)}"
            )
        else:
            sentences.append(
                f"Create sphere {name} centered at {_vec_text(x, y, z)} "
                f"with radius {_num(r)}"
            )
            values.extend([
                (_key(name, "cx"), float(x)), (_key(name, "cy"), float(y)),
                (_key(name, "cz"), float(z)),
            ])
        values.append((_key(name, "r"), float(r)))
        produced.append((name, "sphere"))
        created.append((name, "sphere"))
    b.add(
        "create_spheres",
        "; ".join(sentences) + ".",
        produced,
        SubtaskCategory.OBJECT_CREATION,
        values,
    )
    names = [n for n, k in produced if k == "sphere"]
    b.cycles.append((
        f"matched sphere creation: {', '.join(names)}",
        "a sphere is a center point plus a radius term along infinity",
        f"subtask {b.subtasks[-1].task_id} creates {', '.join(names)}",
    ))
    return True


def _scan_planes(body, b, claims, created) -> bool:
    if not re.search(r"\bplanes?\b", body, re.I):
        return False
    pat = re.compile(
        rf"(?:\b({NAME})\s+)?with normal\s+{VEC}(?:\s+and offset\s+({NUM}))?"
    )
    specs = []
    for m in pat.finditer(body):
        if claims.free(m.span()):
            claims.take(m.span())
            name, x, y, z, d = m.groups()
            specs.append((_real_name(name), x, y, z, d))
    if not specs:
        return False
    sentences, values, produced = [], [], []
    for name, x, y, z, d in specs:
        if name is None:
            name = b.anon("plane")
        d = d if d is not None else "0"
        sentences.append(
            f"Create plane {name} with normal {_vec_text(x, y, z)} "
            f"and offset {_num(d)}"
        )
        values.extend([
            (_key(name, "nx"), float(x)), (_key(name, "ny"), float(y)),
            (_key(name, "nz"), float(z)), (_key(name, "d"), float(d)),
        ])
        produced.append((name, "plane"))
        created.append((name, "plane"))
    b.add(
        "create_planes",
        "; ".join(sentences) + ".",
        produced,
        SubtaskCategory.OBJECT_CREATION,
        values,
    )
    names = [n for n, _ in produced]
    b.cycles.append((
        f"matched plane creation: {', '.join(names)}",
        "a plane is a unit normal plus an offset term along infinity",
        f"subtask {b.subtasks[-1].task_id} creates {', '.join(names)}",
    ))
    return True


def _scan_lines(body, b, claims, created) -> bool:
    pat = re.compile(
        rf"\blines?\s+(?:({NAME})\s+)?through\s+({NAME})\s*(?:{VEC})?\s+and\s+({NAME})\s*(?:{VEC})?"
    )
    specs = []
    for m in pat.finditer(body):
        if claims.free(m.span()):
            claims.take(m.span())
            specs.append(m.groups())
    if not specs:
        return False
    sentences, values, produced = [], [], []
    for name, a, ax, ay, az, c, cx, cy, cz in specs:
        if name is None:
            name = b.anon("line")
        for pname, x, y, z in ((a, ax, ay, az), (c, cx, cy, cz)):
            if x is not None:
                sent, vals = _point_sentence(pname, x, y, z)
                sentences.append(sent)
                values.extend(vals)
                produced.append((pname, "point"))
        sentences.append(f"Create line {name} through {a} and {c}")
        produced.append((name, "line"))
        created.append((name, "line"))
    b.add(
        "create_lines",
        "; ".join(sentences) + ".",
        produced,
        SubtaskCategory.OBJECT_CREATION,
        values,
    )
    names = [n for n, k in produced if k == "line"]
    b.cycles.append((
        f"matched line creation: {', '.join(names)}",
        "a line is the outer product of two points with infinity",
        f"subtask {b.subtasks[-1].task_id} creates {', '.join(names)}",
    ))
    return True


def _scan_circles(body, b, claims, created) -> bool:
    pat = re.compile(
        rf"\bcircles?\s+(?:({NAME})\s+)?through\s+({NAME})\s*(?:{VEC})?,\s*({NAME})\s*(?:{VEC})?,?\s*and\s+({NAME})\s*(?:{VEC})?"
    )
    m = pat.search(body)
    if not (m and claims.free(m.span())):
        return False
    claims.take(m.span())
    g = m.groups()
    name = g[0] or b.anon("circle")
    pts = [(g[1], g[2], g[3], g[4]), (g[5], g[6], g[7], g[8]), (g[9], g[10], g[11], g[12])]
    sentences, values, produced = [], [], []
    for pname, x, y, z in pts:
        if x is not None:
            sent, vals = _point_sentence(pname, x, y, z)
            sentences.append(sent)
            values.extend(vals)
            produced.append((pname, "point"))
    sentences.append(
        f"Create circle {name} through {pts[0][0]}, {pts[1][0]} and {pts[2][0]}"
    )
    produced.append((name, "circle"))
    created.append((name, "circle"))
    b.add(
        "create_circles",
        "; ".join(sentences) + ".",
        produced,
        SubtaskCategory.OBJECT_CREATION,
        values,
    )
    b.cycles.append((
        f"matched circle creation: {name}",
        "a circle is the outer product of three points",
        f"subtask {b.subtasks[-1].task_id} creates {name}",
    ))
    return True


def _match_operation(body, b, colors, created) -> bool:
    m = re.search(
        rf"\bintersection (points|circle|line) of\s+({NAME})\s+and\s+({NAME})", body, re.I
    )
    if m:
        _emit_intersection(m.group(1).lower(), m.group(2), m.group(3), body, b, colors)
        return True
    m = re.search(
        rf"\b(outer|geometric|inner) product of\s+({NAME})\s+and\s+({NAME})", body, re.I
    )
    if m:
        kind_word = m.group(1).lower()
        out = b.anon("multivector")
        b.add(
            f"{kind_word}_product",
            f"Compute the {kind_word} product of {m.group(2)} and {m.group(3)} as {out}.",
            [(out, "multivector")],
            SubtaskCategory.ALGEBRAIC_OPERATION,
            visualization=[(out, c) for c in colors[:1]],
            consumed=[m.group(2), m.group(3)],
        )
        b.cycles.append((
            f"matched {kind_word} product of {m.group(2)} and {m.group(3)}",
            "a single algebraic operation on two existing objects",
            f"subtask {b.subtasks[-1].task_id} computes {out}",
        ))
        return True
    m = re.search(rf"\b(dual|reverse|inverse) of\s+({NAME})", body, re.I)
    if m:
        word = m.group(1).lower()
        out = b.anon("multivector")
        b.add(
            f"{word}_of",
            f"Compute the {word} of {m.group(2)} as {out}.",
            [(out, "multivector")],
            SubtaskCategory.ALGEBRAIC_OPERATION,
            visualization=[(out, c) for c in colors[:1]],
            consumed=[m.group(2)],
        )
        b.cycles.append((
            f"matched {word} of {m.group(2)}",
            "a single algebraic operation on one existing object",
            f"subtask {b.subtasks[-1].task_id} computes {out}",
        ))
        return True
    m = re.search(rf"\bnormalize\s+({NAME})", body, re.I)
    if m:
        out = b.anon("multivector")
        b.add(
            "normalize",
            f"Normalize {m.group(1)} as {out}.",
            [(out, "multivector")],
            SubtaskCategory.ALGEBRAIC_OPERATION,
            visualization=[(out, c) for c in colors[:1]],
            consumed=[m.group(1)],
        )
        b.cycles.append((
            f"matched normalize of {m.group(1)}",
            "scale the object to unit norm",
            f"subtask {b.subtasks[-1].task_id} computes {out}",
        ))
        return True
    m = re.search(rf"\btranslate\s+({NAME})\s+by\s+{VEC}", body, re.I)
    if m:
        target = m.group(1)
        kind = b.kind_of(target, body)
        out = b.anon(kind if kind in ANON_PREFIXES else "multivector")
        values = [
            (_key(out, "tx"), float(m.group(2))),
            (_key(out, "ty"), float(m.group(3))),
            (_key(out, "tz"), float(m.group(4))),
        ]
        b.add(
            "translate",
            f"Translate {target} by {_vec_text(m.group(2), m.group(3), m.group(4))} as {out}.",
            [(out, kind)],
            SubtaskCategory.TRANSFORMATION,
            values,
            visualization=[(out, c) for c in colors[:1]],
            consumed=[target],
        )
        b.cycles.append((
            f"matched translation of {target}",
            "apply a translator sandwich",
            f"subtask {b.subtasks[-1].task_id} produces {out}",
        ))
        return True
    m = re.search(
        rf"\brotate\s+({NAME})\s+by\s+({NUM})\s+(degrees|radians)\s+around the\s+([xyz])\s+axis",
        body,
        re.I,
    )
    if m:
        target = m.group(1)
        kind = b.kind_of(target, body)
        out = b.anon(kind if kind in ANON_PREFIXES else "multivector")
        angle = float(m.group(2))
        if m.group(3).lower() == "degrees":
            angle = math.radians(angle)
        plane = AXIS_PLANES[m.group(4).lower()]
        b.add(
            "rotate",
            f"Rotate {target} by {format_number(angle)} radians "
            f"in the plane {plane} as {out}.",
            [(out, kind)],
            SubtaskCategory.TRANSFORMATION,
            visualization=[(out, c) for c in colors[:1]],
            consumed=[target],
        )
        b.cycles.append((
            f"matched rotation of {target} around the {m.group(4)} axis",
            "apply a rotor sandwich with a constant plane and angle",
            f"subtask {b.subtasks[-1].task_id} produces {out}",
        ))
        return True
    m = re.search(rf"\breflect\s+({NAME})\s+in\s+({NAME})", body, re.I)
    if m:
        target, mirror = m.group(1), m.group(2)
        kind = b.kind_of(target, body)
        out = b.anon(kind if kind in ANON_PREFIXES else "multivector")
        b.add(
            "reflect",
            f"Reflect {target} in {mirror} as {out}.",
            [(out, kind)],
            SubtaskCategory.TRANSFORMATION,
            visualization=[(out, c) for c in colors[:1]],
            consumed=[target, mirror],
        )
        b.cycles.append((
            f"matched reflection of {target} in {mirror}",
            "sandwich the object between the mirror and its reverse",
            f"subtask {b.subtasks[-1].task_id} produces {out}",
        ))
        return True
    m = re.search(rf"\bproject\s+({NAME})\s+onto\s+({NAME})", body, re.I)
    if m:
        target, onto = m.group(1), m.group(2)
        onto_kind = b.kind_of(onto, body)
        if onto_kind == "plane":
            kind = b.kind_of(target, body)
            out = b.anon(kind if kind in ANON_PREFIXES else "multivector")
            desc = f"Project {target} onto plane {onto} as {out}."
        else:
            kind = "multivector"
            out = b.anon("multivector")
            desc = f"Project {target} onto {onto} as {out}."
        b.add(
            "project",
            desc,
            [(out, kind)],
            SubtaskCategory.ELEMENT_OPERATION,
            visualization=[(out, c) for c in colors[:1]],
            consumed=[target, onto],
        )
        b.cycles.append((
            f"matched projection of {target} onto {onto}",
            "contract onto the target and divide the target back out",
            f"subtask {b.subtasks[-1].task_id} produces {out}",
        ))
        return True
    m = re.search(rf"\bdistance between\s+({NAME})\s+and\s+({NAME})", body, re.I)
    if m:
        out = b.anon("scalar")
        b.add(
            "distance",
            f"Compute the distance between {m.group(1)} and {m.group(2)} as {out}.",
            [(out, "scalar")],
            SubtaskCategory.NUMERICAL,
            consumed=[m.group(1), m.group(2)],
        )
        b.cycles.append((
            f"matched distance between {m.group(1)} and {m.group(2)}",
            "the contraction of two points encodes their squared distance",
            f"subtask {b.subtasks[-1].task_id} computes {out}",
        ))
        return True
    m = re.search(rf"\bnorm of\s+({NAME})", body, re.I)
    if m:
        out = b.anon("scalar")
        b.add(
            "norm",
            f"Compute the norm of {m.group(1)} as {out}.",
            [(out, "scalar")],
            SubtaskCategory.NUMERICAL,
            consumed=[m.group(1)],
        )
        b.cycles.append((
            f"matched norm of {m.group(1)}",
            "a single numeric measure of one object",
            f"subtask {b.subtasks[-1].task_id} computes {out}",
        ))
        return True
    m = re.search(rf"\bsquare root of\s+({NUM})", body, re.I)
    if m:
        out = b.anon("scalar")
        b.add(
            "square_root",
            f"Compute the square root of {_num(m.group(1))} as {out}.",
            [(out, "scalar")],
            SubtaskCategory.NUMERICAL,
            values=[(_key(out, "x"), float(m.group(1)))],
        )
        b.cycles.append((
            f"matched square root of {m.group(1)}",
            "a plain scalar computation",
            f"subtask {b.subtasks[-1].task_id} computes {out}",
        ))
        return True
    return False


def _emit_intersection(result_word, a, c, body, b, colors):
    ka, kc = b.kind_of(a, body), b.kind_of(c, body)
    if result_word == "points":
        if {ka, kc} == {"line", "sphere"}:
            line, sphere = (a, c) if ka == "line" else (c, a)
            pair = b.anon("point_pair")
            p1, p2 = b.anon("point"), b.anon("point")
            vis = [(p1, colors[0]), (p2, colors[0])] if colors else []
            b.add(
                "intersect_line_sphere",
                f"Intersect line {line} and sphere {sphere} into point pair {pair}; "
                f"split {pair} into points {p1} and {p2}.",
                [(pair, "point_pair"), (p1, "point"), (p2, "point")],
                SubtaskCategory.ELEMENT_OPERATION,
                visualization=vis,
                consumed=[line, sphere],
            )
            b.cycles.append((
                f"matched intersection points of {line} and {sphere}",
                "a line pierces a sphere in a point pair",
                f"subtask {b.subtasks[-1].task_id} produces {p1} and {p2}",
            ))
            return
        raise UnrecognizedIntent(body)
    if result_word == "circle":
        if {ka, kc} == {"sphere"}:
            out = b.anon("circle")
            desc = f"Intersect spheres {a} and {c} into circle {out}."
        elif {ka, kc} == {"sphere", "plane"}:
            sphere, pl = (a, c) if ka == "sphere" else (c, a)
            out = b.anon("circle")
            desc = f"Intersect sphere {sphere} and plane {pl} into circle {out}."
        else:
            raise UnrecognizedIntent(body)
        b.add(
            "intersect_to_circle",
            desc,
            [(out, "circle")],
            SubtaskCategory.ELEMENT_OPERATION,
            visualization=[(out, colors[0])] if colors else [],
            consumed=[a, c],
        )
        b.cycles.append((
            f"matched intersection circle of {a} and {c}",
            "two round or flat surfaces meet in a circle",
            f"subtask {b.subtasks[-1].task_id} produces {out}",
        ))
        return
    if result_word == "line":
        if {ka, kc} == {"plane"}:
            out = b.anon("line")
            b.add(
                "intersect_planes",
                f"Intersect planes {a} and {c} into line {out}.",
                [(out, "line")],
                SubtaskCategory.ELEMENT_OPERATION,
                visualization=[(out, colors[0])] if colors else [],
                consumed=[a, c],
            )
            b.cycles.append((
                f"matched intersection line of {a} and {c}",
                "two planes meet in a line",
                f"subtask {b.subtasks[-1].task_id} produces {out}",
            ))
            return
        raise UnrecognizedIntent(body)
    raise UnrecognizedIntent(body)
