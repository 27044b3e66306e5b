"""Command line interface.

Thin wrappers over the library: every command parses arguments, calls
one module-level operation, and prints its result. Exit code 0 means
success, 1 means the operation failed, and 2 means the invocation was
malformed.
"""
from __future__ import annotations

import json
import sys
from pathlib import Path

import click

from . import __version__
from .agents import PlanRequest, UnrecognizedIntent, plan_to_json
from .agents import plan as plan_request
from .bench import bench as run_bench
from .bench import load_dataset
from .codegen import (
    CompileError,
    MissingInput,
    RunError,
    compile_script,
    emit_json,
    emit_python,
    execute,
    outputs_of,
    scene_of,
)
from .script import analyze


def _fail(message: str):
    click.echo(message, err=True)
    sys.exit(1)


def _compiled(text: str, space: str):
    analysis = analyze(text)
    if not analysis.ok:
        for diagnostic in analysis.diagnostics:
            click.echo(diagnostic.format(), err=True)
        sys.exit(1)
    try:
        return compile_script(analysis.script, space=space), analysis
    except CompileError as exc:
        _fail(exc.to_diagnostic().format())


@click.group()
@click.version_option(__version__)
def main():
    """Geometric algebra scripts: compile, run, plan, serve, benchmark."""


@main.command("compile")
@click.argument("source", type=click.File("r"))
@click.option("--space", default="cga3d", show_default=True,
              help="algebra to compile against")
@click.option("--target", type=click.Choice(["python", "json-ir"]),
              default="python", show_default=True)
def compile_command(source, space, target):
    """Compile a script file and print the generated code."""
    program, _ = _compiled(source.read(), space)
    click.echo(emit_python(program) if target == "python" else emit_json(program))


def _parse_bindings(pairs) -> dict[str, float]:
    bindings = {}
    for pair in pairs:
        name, sep, value = pair.partition("=")
        if not sep or not name:
            raise click.BadParameter(f"expected NAME=VALUE, got {pair!r}")
        try:
            bindings[name] = float(value)
        except ValueError:
            raise click.BadParameter(f"{pair!r} is not a numeric binding")
    return bindings


@main.command("run")
@click.argument("source", type=click.File("r"))
@click.option("--space", default="cga3d", show_default=True)
@click.option("--bind", "-b", "bindings", multiple=True, metavar="NAME=VALUE",
              help="input value, repeatable")
@click.option("--scene", "show_scene", is_flag=True,
              help="print the scene document instead of outputs")
def run_command(source, space, bindings, show_scene):
    """Compile and execute a script file, printing its outputs."""
    values = _parse_bindings(bindings)
    program, _ = _compiled(source.read(), space)
    try:
        results, warnings = execute(program, values)
    except (MissingInput, RunError) as exc:
        _fail(str(exc))
    for diagnostic in warnings:
        click.echo(diagnostic.format(), err=True)
    if show_scene:
        scene, scene_warnings = scene_of(program, results)
        for diagnostic in scene_warnings:
            click.echo(diagnostic.format(), err=True)
        click.echo(json.dumps(scene, indent=2))
        return
    for name, blades in outputs_of(program, results).items():
        if not blades:
            click.echo(f"{name} = 0")
        elif set(blades) == {"1"}:
            click.echo(f"{name} = {blades['1']:g}")
        else:
            terms = " + ".join(f"{coeff:g}*{blade}" if blade != "1" else f"{coeff:g}"
                               for blade, coeff in blades.items())
            click.echo(f"{name} = {terms}")


@main.command("plan")
@click.argument("description")
@click.option("--space", default="cga3d", show_default=True)
@click.option("--formula", default="", help="formula text accompanying the request")
def plan_command(description, space, formula):
    """Decompose a request into subtasks and print the plan as JSON."""
    try:
        planned = plan_request(PlanRequest(
            description=description, formula=formula, space=space,
        ))
    except UnrecognizedIntent as exc:
        _fail(str(exc))
    click.echo(json.dumps(plan_to_json(planned), indent=2))


@main.command("serve")
@click.option("--host", default="127.0.0.1", show_default=True)
@click.option("--port", default=8000, show_default=True, type=int)
@click.option("--data-dir", default=None, help="task store directory")
@click.option("--planner-url", default=None,
              help="external planning service; planning is local when unset")
def serve_command(host, port, data_dir, planner_url):
    """Run the HTTP service."""
    import uvicorn

    from .service import create_app

    uvicorn.run(
        create_app(data_dir=data_dir, planner_url=planner_url),
        host=host,
        port=port,
    )


@main.command("bench")
@click.argument("dataset", required=False,
                type=click.Path(exists=True, dir_okay=False))
@click.option("--report", "report_path", type=click.Path(dir_okay=False),
              help="write the full report as JSON")
@click.option("--min-rate", default=0.9, show_default=True, type=float,
              help="exit nonzero below this success rate")
def bench_command(dataset, report_path, min_rate):
    """Run the benchmark dataset and print per-case outcomes."""
    try:
        cases = load_dataset(dataset) if dataset else load_dataset()
        result = run_bench(cases)
    except ValueError as exc:
        _fail(str(exc))
    for outcome in result.outcomes:
        if outcome.ok:
            click.echo(f"PASS {outcome.case_id} ({outcome.origin})")
        else:
            click.echo(f"FAIL {outcome.case_id} ({outcome.origin}): {outcome.detail}")
    click.echo(
        f"{result.successes}/{result.total} passed "
        f"({result.success_rate:.1%})"
    )
    if report_path:
        Path(report_path).write_text(
            json.dumps(result.to_json(), indent=2), encoding="utf-8"
        )
    if result.success_rate < min_rate:
        sys.exit(1)


if __name__ == "__main__":
    main()
