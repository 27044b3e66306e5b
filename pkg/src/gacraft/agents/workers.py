"""Worker agents.

Each agent owns one stage of turning a subtask record into script text:

* analysis_agent reads the controlled task description and extracts the
  operations, numeric values, and object names it mentions,
* code_agent expands registry templates into computation statements,
* assignment_agent emits the input bindings the computation consumes,
* visualization_agent emits draw statements,
* format_agent assembles the three sections into one script with a line
  map, and
* validate_agent checks the result and names the agent to blame for the
  first error.

All agents are pure functions of their inputs, so a fixed plan always
produces byte-identical script text.
"""
from __future__ import annotations

import re
from dataclasses import dataclass

from ..script import COLOR_VALUES, analyze
from ..script.printer import format_number
from .records import Call, ExtractedElements, SubtaskRecord
from .registry import Registry

NUM = r"-?\d+(?:\.\d+)?"
NAME = r"[A-Za-z][A-Za-z0-9_]*"
VAL = rf"{NUM}|{NAME}"

SECTION_AGENTS = {
    "assignments": "assignment_agent",
    "computation": "code_agent",
    "draws": "visualization_agent",
}


class AgentError(Exception):
    """Base for failures raised by a worker agent."""

    code = "E400"
    agent = "pipeline"


class MissingValue(AgentError):
    """A task description references a value or object nobody defined."""

    code = "E402"
    agent = "analysis_agent"


class NoMatchingFunction(AgentError):
    """No registry entry implements the requested operation."""

    code = "E403"
    agent = "code_agent"


class UnknownColor(AgentError):
    """A visualization request names a color outside the palette."""

    code = "E404"
    agent = "visualization_agent"


@dataclass(frozen=True)
class FinalScript:
    """Assembled script text plus the line ranges of its sections."""

    text: str
    sections: tuple[tuple[str, int, int], ...]

    def section_of(self, line: int) -> str | None:
        for name, first, last in self.sections:
            if first <= line <= last:
                return name
        return None


@dataclass(frozen=True)
class Verdict:
    """Validation outcome with the agent responsible for the first error."""

    ok: bool
    diagnostics: tuple
    blamed_agent: str | None = None


# ---------------------------------------------------------------------------
# analysis


class _Extraction:
    def __init__(self, subtask: SubtaskRecord, context: dict[str, str]):
        self.subtask = subtask
        self.context = dict(context)
        self.values_map = subtask.values_map
        self.calls: list[Call] = []
        self.values: list[tuple[str, float]] = []
        self.produced: list[tuple[str, str]] = []
        self.consumed: list[str] = []
        self.reused: list[str] = []

    def value(self, token: str, default_key: str) -> str:
        """Resolve a token in a numeric slot to an input key, recording
        the number it should be bound to."""
        if re.fullmatch(NUM, token):
            key = default_key
            number = self.values_map.get(key, float(token))
        else:
            if token not in self.values_map:
                raise MissingValue(
                    f"subtask {self.subtask.task_id}: no value supplied "
                    f"for {token!r}"
                )
            key = token
            number = self.values_map[token]
        self.values.append((key, float(number)))
        return key

    def ref(self, name: str) -> str:
        """Resolve a token in an object slot against known objects."""
        if name in self.context:
            produced_here = {n for n, _ in self.produced}
            if name in produced_here:
                if name not in self.reused:
                    self.reused.append(name)
            elif name not in self.consumed:
                self.consumed.append(name)
            return name
        raise MissingValue(
            f"subtask {self.subtask.task_id}: unknown object {name!r}"
        )

    def make(self, name: str, kind: str) -> str:
        self.produced.append((name, kind))
        self.context[name] = kind
        return name

    def call(self, operation: str, **args: str) -> None:
        self.calls.append(Call(operation, tuple(args.items())))

    def kind_of(self, name: str) -> str:
        return self.context.get(name, "multivector")


def _k(owner: str, suffix: str) -> str:
    return owner.lower() + suffix


def _sentence_patterns():
    def h_point(x, g):
        out = x.make(g[0], "point")
        x.call("create_point", out=out, x=x.value(g[1], _k(out, "x")),
               y=x.value(g[2], _k(out, "y")), z=x.value(g[3], _k(out, "z")))

    def h_vector(x, g):
        out = x.make(g[0], "vector")
        x.call("create_vector", out=out, x=x.value(g[1], _k(out, "x")),
               y=x.value(g[2], _k(out, "y")), z=x.value(g[3], _k(out, "z")))

    def h_sphere_about(x, g):
        center = x.ref(g[1])
        out = x.make(g[0], "sphere")
        x.call("create_sphere_about_point", out=out, center=center,
               r=x.value(g[2], _k(out, "r")))

    def h_sphere(x, g):
        out = x.make(g[0], "sphere")
        x.call("create_sphere", out=out,
               cx=x.value(g[1], _k(out, "cx")), cy=x.value(g[2], _k(out, "cy")),
               cz=x.value(g[3], _k(out, "cz")), r=x.value(g[4], _k(out, "r")))

    def h_plane(x, g):
        out = x.make(g[0], "plane")
        x.call("create_plane", out=out,
               nx=x.value(g[1], _k(out, "nx")), ny=x.value(g[2], _k(out, "ny")),
               nz=x.value(g[3], _k(out, "nz")), d=x.value(g[4], _k(out, "d")))

    def h_line(x, g):
        a, c = x.ref(g[1]), x.ref(g[2])
        x.call("create_line_through_points", out=x.make(g[0], "line"), a=a, b=c)

    def h_circle(x, g):
        a, c, d = x.ref(g[1]), x.ref(g[2]), x.ref(g[3])
        x.call("create_circle_through_points", out=x.make(g[0], "circle"),
               a=a, b=c, c=d)

    def h_product(x, g):
        a, c = x.ref(g[1]), x.ref(g[2])
        x.call(f"{g[0]}_product", out=x.make(g[3], "multivector"), a=a, b=c)

    def h_unary(x, g):
        a = x.ref(g[1])
        x.call(f"{g[0]}_of", out=x.make(g[2], "multivector"), a=a)

    def h_normalize(x, g):
        a = x.ref(g[0])
        x.call("normalize_of", out=x.make(g[1], "multivector"), a=a)

    def h_three_spheres(x, g):
        a, c, d = x.ref(g[0]), x.ref(g[1]), x.ref(g[2])
        x.call("intersect_three_spheres", out=x.make(g[3], "point_pair"),
               a=a, b=c, c=d)

    def h_sphere_sphere(x, g):
        a, c = x.ref(g[0]), x.ref(g[1])
        x.call("intersect_sphere_sphere", out=x.make(g[2], "circle"), a=a, b=c)

    def h_sphere_plane(x, g):
        a, c = x.ref(g[0]), x.ref(g[1])
        x.call("intersect_sphere_plane", out=x.make(g[2], "circle"), a=a, b=c)

    def h_line_sphere(x, g):
        line, sphere = x.ref(g[0]), x.ref(g[1])
        x.call("intersect_line_sphere", out=x.make(g[2], "point_pair"),
               line=line, sphere=sphere)

    def h_plane_plane(x, g):
        a, c = x.ref(g[0]), x.ref(g[1])
        x.call("intersect_plane_plane", out=x.make(g[2], "line"), a=a, b=c)

    def h_split(x, g):
        pair = x.ref(g[0])
        x.call("split_point_pair", outa=x.make(g[1], "point"),
               outb=x.make(g[2], "point"), pair=pair)

    def h_project_plane(x, g):
        a, plane = x.ref(g[0]), x.ref(g[1])
        x.call("project_onto_plane", out=x.make(g[2], x.kind_of(a)),
               a=a, plane=plane)

    def h_project(x, g):
        a, target = x.ref(g[0]), x.ref(g[1])
        x.call("project_onto", out=x.make(g[2], "multivector"),
               a=a, target=target)

    def h_translate(x, g):
        a = x.ref(g[0])
        out = x.make(g[4], x.kind_of(a))
        x.call("translate_by", out=out, a=a,
               tx=x.value(g[1], _k(out, "tx")), ty=x.value(g[2], _k(out, "ty")),
               tz=x.value(g[3], _k(out, "tz")))

    def h_rotate(x, g):
        a = x.ref(g[0])
        out = x.make(g[3], x.kind_of(a))
        x.call("rotate_by", out=out, a=a, plane=g[2], angle=g[1])

    def h_reflect(x, g):
        a, mirror = x.ref(g[0]), x.ref(g[1])
        x.call("reflect_in", out=x.make(g[2], x.kind_of(a)), a=a, mirror=mirror)

    def h_invert(x, g):
        a, sphere = x.ref(g[0]), x.ref(g[1])
        x.call("invert_in_sphere", out=x.make(g[2], x.kind_of(a)),
               a=a, sphere=sphere)

    def h_distance(x, g):
        a, c = x.ref(g[0]), x.ref(g[1])
        x.call("distance_between", out=x.make(g[2], "scalar"), a=a, b=c)

    def h_norm(x, g):
        a = x.ref(g[0])
        x.call("norm_of", out=x.make(g[1], "scalar"), a=a)

    def h_sqrt(x, g):
        out = x.make(g[1], "scalar")
        x.call("sqrt_of", out=out, x=x.value(g[0], _k(out, "x")))

    def h_sum(x, g):
        out = x.make(g[2], "scalar")
        x.call("scalar_sum", out=out, x=x.value(g[0], _k(out, "x")),
               y=x.value(g[1], _k(out, "y")))

    def h_scalar_product(x, g):
        out = x.make(g[2], "scalar")
        x.call("scalar_product", out=out, x=x.value(g[0], _k(out, "x")),
               y=x.value(g[1], _k(out, "y")))

    return [
        (rf"Create point ({NAME}) at \(({VAL}), ({VAL}), ({VAL})\)", h_point),
        (rf"Create vector ({NAME}) at \(({VAL}), ({VAL}), ({VAL})\)", h_vector),
        (rf"Create sphere ({NAME}) with center ({NAME}) and radius ({VAL})",
         h_sphere_about),
        (rf"Create sphere ({NAME}) centered at \(({VAL}), ({VAL}), ({VAL})\)"
         rf" with radius ({VAL})", h_sphere),
        (rf"Create plane ({NAME}) with normal \(({VAL}), ({VAL}), ({VAL})\)"
         rf" and offset ({VAL})", h_plane),
        (rf"Create line ({NAME}) through ({NAME}) and ({NAME})", h_line),
        (rf"Create circle ({NAME}) through ({NAME}), ({NAME}) and ({NAME})",
         h_circle),
        (rf"Compute the (outer|geometric|inner) product of ({NAME}) and"
         rf" ({NAME}) as ({NAME})", h_product),
        (rf"Compute the (dual|reverse|inverse) of ({NAME}) as ({NAME})",
         h_unary),
        (rf"Normalize ({NAME}) as ({NAME})", h_normalize),
        (rf"Intersect spheres ({NAME}), ({NAME}) and ({NAME}) into point"
         rf" pair ({NAME})", h_three_spheres),
        (rf"Intersect spheres ({NAME}) and ({NAME}) into circle ({NAME})",
         h_sphere_sphere),
        (rf"Intersect sphere ({NAME}) and plane ({NAME}) into circle ({NAME})",
         h_sphere_plane),
        (rf"Intersect line ({NAME}) and sphere ({NAME}) into point pair"
         rf" ({NAME})", h_line_sphere),
        (rf"Intersect planes ({NAME}) and ({NAME}) into line ({NAME})",
         h_plane_plane),
        (rf"Split ({NAME}) into points ({NAME}) and ({NAME})", h_split),
        (rf"Project ({NAME}) onto plane ({NAME}) as ({NAME})", h_project_plane),
        (rf"Project ({NAME}) onto ({NAME}) as ({NAME})", h_project),
        (rf"Translate ({NAME}) by \(({VAL}), ({VAL}), ({VAL})\) as ({NAME})",
         h_translate),
        (rf"Rotate ({NAME}) by ({NUM}) radians in the plane (.+) as ({NAME})",
         h_rotate),
        (rf"Reflect ({NAME}) in ({NAME}) as ({NAME})", h_reflect),
        (rf"Invert ({NAME}) in sphere ({NAME}) as ({NAME})", h_invert),
        (rf"Compute the distance between ({NAME}) and ({NAME}) as ({NAME})",
         h_distance),
        (rf"Compute the norm of ({NAME}) as ({NAME})", h_norm),
        (rf"Compute the square root of ({VAL}) as ({NAME})", h_sqrt),
        (rf"Compute the sum of ({VAL}) and ({VAL}) as ({NAME})", h_sum),
        (rf"Compute the product of ({VAL}) and ({VAL}) as ({NAME})",
         h_scalar_product),
    ]


_PATTERNS = [(re.compile(p), h) for p, h in _sentence_patterns()]


def analysis_agent(
    subtask: SubtaskRecord, context: dict[str, str] | None = None
) -> ExtractedElements:
    """Extract operations, values, and object names from a task
    description written in the controlled sentence grammar."""
    x = _Extraction(subtask, context or {})
    text = subtask.task_description.strip()
    if text.endswith("."):
        text = text[:-1]
    for sentence in re.split(r";\s*", text):
        sentence = sentence.strip()
        if not sentence:
            continue
        sentence = sentence[0].upper() + sentence[1:]
        for pattern, handler in _PATTERNS:
            m = pattern.fullmatch(sentence)
            if m:
                handler(x, m.groups())
                break
        else:
            raise MissingValue(
                f"subtask {subtask.task_id}: cannot parse step "
                f"{sentence!r}"
            )
    produced_names = {n for n, _ in x.produced}
    for name in subtask.variable_names:
        if name not in produced_names:
            raise MissingValue(
                f"subtask {subtask.task_id}: declared variable {name!r} "
                f"is never produced"
            )
    for name, _color in subtask.visualization:
        if name not in produced_names:
            raise MissingValue(
                f"subtask {subtask.task_id}: cannot draw undefined "
                f"object {name!r}"
            )
    return ExtractedElements(
        calls=tuple(x.calls),
        values=tuple(x.values),
        produced=tuple(x.produced),
        consumed=tuple(x.consumed),
        visualization=tuple(subtask.visualization),
        reused=tuple(x.reused),
    )


# ---------------------------------------------------------------------------
# code generation

_ASSIGNED = re.compile(rf"\??({NAME}) =")


def code_agent(
    elements: ExtractedElements,
    registry: Registry,
    feedback: tuple[str, ...] = (),
) -> str:
    """Expand each extracted call through its registry template."""
    lines: list[str] = []
    for call in elements.calls:
        spec = registry.get(call.operation)
        if spec is None:
            raise NoMatchingFunction(
                f"no registry function implements {call.operation!r}"
            )
        args = call.args_map
        anchor = args.get("out") or (call.args[0][1] if call.args else "tmp")
        mapping = {}
        for param in spec.parameters:
            if param.name in args:
                mapping[param.name] = args[param.name]
            elif param.kind == "fresh":
                mapping[param.name] = f"{anchor}_{param.name}"
            else:
                raise MissingValue(
                    f"call to {call.operation!r} is missing its "
                    f"{param.name!r} argument"
                )
        for line in spec.script_template.format(**mapping).split("\n"):
            lines.append(line)
    if elements.marked:
        marked = set(elements.marked)
        for i, line in enumerate(lines):
            m = _ASSIGNED.match(line)
            if m and m.group(1) in marked and not line.startswith("?"):
                lines[i] = "?" + line
    return "\n".join(lines)


# ---------------------------------------------------------------------------
# assignments


def assignment_agent(
    elements: ExtractedElements,
    fragment: str,
    feedback: tuple[str, ...] = (),
) -> list[str]:
    """Emit one binding statement per input key the fragment uses."""
    ordered: dict[str, float] = {}
    for key, value in elements.values:
        ordered.setdefault(key, value)
    used = set(re.findall(NAME, fragment))
    return [
        f"{key} = {format_number(value)};"
        for key, value in ordered.items()
        if key in used
    ]


# ---------------------------------------------------------------------------
# visualization

_RGB = re.compile(rf"rgb\(\s*{NUM}\s*,\s*{NUM}\s*,\s*{NUM}\s*\)")


def visualization_agent(
    elements: ExtractedElements,
    draw_template: str = ":{name} {color};",
    feedback: tuple[str, ...] = (),
) -> list[str]:
    """Emit draw statements. On retry feedback the agent falls back to
    colorless draws, trading styling for a script that validates."""
    plain = draw_template.replace(" {color}", "")
    lines = []
    for name, color in elements.visualization:
        if color is None or feedback:
            lines.append(plain.format(name=name))
            continue
        if not (color in COLOR_VALUES or _RGB.fullmatch(color)):
            raise UnknownColor(f"unknown color {color!r} for {name!r}")
        lines.append(draw_template.format(name=name, color=color))
    return lines


# ---------------------------------------------------------------------------
# assembly and validation


def _split_lines(chunk) -> list[str]:
    if isinstance(chunk, str):
        chunk = [chunk]
    return [line for entry in chunk for line in entry.split("\n") if line.strip()]


def format_agent(assignments, computation, draws) -> FinalScript:
    """Assemble the three sections into one script, one statement per
    line, recording each section's line range for later blame."""
    sections = []
    lines: list[str] = []
    start = 1
    for name, chunk in (
        ("assignments", assignments),
        ("computation", computation),
        ("draws", draws),
    ):
        part = _split_lines(chunk)
        lines.extend(part)
        sections.append((name, start, start + len(part) - 1))
        start += len(part)
    text = "\n".join(lines) + ("\n" if lines else "")
    return FinalScript(text=text, sections=tuple(sections))


def validate_agent(script: FinalScript) -> Verdict:
    """Validate assembled text and blame the section owner of the first
    error."""
    result = analyze(script.text)
    errors = [d for d in result.diagnostics if d.severity == "error"]
    if not errors:
        return Verdict(ok=True, diagnostics=tuple(result.diagnostics))
    first = errors[0]
    section = script.section_of(first.span.line) if first.span else None
    blamed = SECTION_AGENTS.get(section, "code_agent")
    return Verdict(
        ok=False, diagnostics=tuple(result.diagnostics), blamed_agent=blamed
    )
