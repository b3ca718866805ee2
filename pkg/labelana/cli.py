"""Command-line interface for labelana."""
from __future__ import annotations

import json
import logging
import sys
from collections.abc import Callable
from functools import wraps
from pathlib import Path
from typing import Any

import click

from . import __version__
from .analysis import analyze, build_space, check_property
from .config import Config, load_config
from .const import (
    COVER_MODES,
    EXIT_CONSISTENCY,
    EXIT_FAILURE,
    EXIT_PARSE,
    EXIT_RESOURCE,
    EXIT_VALIDATION,
    FORMAT_JSON,
    OUTPUT_FORMATS,
    PROPERTIES,
    SCHEMA_VERSION,
)
from .exceptions import (
    ConsistencyError,
    LabelanaError,
    ParseError,
    ResourceBoundExceeded,
    WellDefinednessFailure,
)
from .fuzz import compare_with_oracle, run_fuzz
from .graph_model import LabeledGraph, parse, to_lgr
from .ideals import (
    enumerate_cores,
    proper_core_summaries,
    quotient,
    quotient_predicates,
    saturate_hereditary_closure,
)
from .oracle import oracle_report
from .report import (
    build_report,
    dumps,
    generate_dot,
    lattice_fragment,
    oracle_document,
    quotient_fragment,
    quotient_report,
    render_text,
)

_LOGGER = logging.getLogger(__name__)


def exit_code_for(err: LabelanaError) -> int:
    """Map a domain error to its process exit code."""
    if isinstance(err, ParseError):
        return EXIT_PARSE
    if isinstance(err, ResourceBoundExceeded):
        return EXIT_RESOURCE
    if isinstance(err, (ConsistencyError, WellDefinednessFailure)):
        return EXIT_CONSISTENCY
    return EXIT_VALIDATION


def handle_errors(func: Callable[..., Any]) -> Callable[..., Any]:
    """Turn domain errors into a JSON line on stderr and an exit code."""

    @wraps(func)
    def wrapper(*args: Any, **kwargs: Any) -> Any:
        try:
            return func(*args, **kwargs)
        except LabelanaError as err:
            click.echo(json.dumps({"error": err.kind, "message": str(err)}), err=True)
            sys.exit(exit_code_for(err))

    return wrapper


def _load_graph(path: Path, config: Config) -> LabeledGraph:
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as err:
        raise ParseError(f"cannot read {path}: {err}") from err
    return parse(text, path.stem, config.max_vertices, config.max_edges)


def _emit(config: Config, document: dict[str, Any], text: str) -> None:
    if config.output_format == FORMAT_JSON:
        click.echo(dumps(document))
    else:
        click.echo(text, nl=False)


_file_argument = click.argument(
    "file", type=click.Path(exists=True, dir_okay=False, path_type=Path)
)


@click.group()
@click.option("--config", "config_path", type=click.Path(dir_okay=False, path_type=Path), help="YAML configuration file")
@click.option("--verbose", "-v", is_flag=True, default=False, help="Log debug output to stderr")
@click.option("--format", "output_format", type=click.Choice(OUTPUT_FORMATS), help="Output format")
@click.option("--max-atoms", type=int, help="Cap on atoms for explicit enumeration")
@click.option("--word-bound-multiplier", type=int, help="Multiplier for word search bounds")
@click.option("--cover-mode", type=click.Choice(COVER_MODES), help="Cover search for connects-to-loop")
@click.option("--allow-epsilon-cover", is_flag=True, default=None, help="Admit the empty path as a cover")
@click.version_option(version=__version__, prog_name="labelana")
@click.pass_context
@handle_errors
def main(
    ctx: click.Context,
    config_path: Path | None,
    verbose: bool,
    output_format: str | None,
    max_atoms: int | None,
    word_bound_multiplier: int | None,
    cover_mode: str | None,
    allow_epsilon_cover: bool | None,
) -> None:
    """Analyze finite labeled graphs and their algebras."""
    logging.basicConfig(
        level=logging.DEBUG if verbose else logging.WARNING,
        stream=sys.stderr,
        format="%(levelname)s %(name)s: %(message)s",
    )
    ctx.obj = load_config(
        config_path,
        output_format=output_format,
        max_atoms=max_atoms,
        word_bound_multiplier=word_bound_multiplier,
        cover_mode=cover_mode,
        allow_epsilon_cover=allow_epsilon_cover or None,
    )


@main.command("analyze")
@_file_argument
@click.pass_obj
@handle_errors
def cmd_analyze(config: Config, file: Path) -> None:
    """Run every analysis and print the full report."""
    result = analyze(_load_graph(file, config), config)
    _emit(config, build_report(result), render_text(result))


@main.command("check")
@_file_argument
@click.option("--property", "prop", required=True, type=click.Choice(PROPERTIES), help="Predicate to decide")
@click.pass_obj
@handle_errors
def cmd_check(config: Config, file: Path, prop: str) -> None:
    """Decide a single predicate with its certificate."""
    outcome = check_property(_load_graph(file, config), prop, config)
    text = f"{prop}: {'true' if outcome['holds'] else 'false'}\n"
    if outcome.get("witness") is not None:
        text += f"witness: {json.dumps(outcome['witness'])}\n"
    _emit(config, {"schema": SCHEMA_VERSION, **outcome}, text)


@main.command("ideals")
@_file_argument
@click.pass_obj
@handle_errors
def cmd_ideals(config: Config, file: Path) -> None:
    """Print the lattice of hereditary saturated cores."""
    space = build_space(_load_graph(file, config), config)
    lattice = enumerate_cores(space)
    summaries = proper_core_summaries(
        space, lattice, config.cover_mode, config.allow_epsilon_cover, config.word_bound_multiplier
    )
    document = {
        "schema": SCHEMA_VERSION,
        **lattice_fragment(space, lattice),
        "quotients": [quotient_fragment(space, s) for s in summaries],
    }
    lines = [f"{len(lattice.cores)} core(s)"]
    lines.extend("{" + ", ".join(space.names(core)) + "}" for core in lattice.cores)
    lines.extend(f"cover {lower} < {upper}" for lower, upper in lattice.hasse)
    _emit(config, document, "\n".join(lines) + "\n")


@main.command("quotient")
@_file_argument
@click.option("--core", "core_spec", required=True, help="Comma-separated vertices")
@click.pass_obj
@handle_errors
def cmd_quotient(config: Config, file: Path, core_spec: str) -> None:
    """Divide by the smallest core holding the given vertices."""
    space = build_space(_load_graph(file, config), config)
    names = [name.strip() for name in core_spec.split(",") if name.strip()]
    requested = space.graph.mask_of(names)
    core = saturate_hereditary_closure(space, requested)
    if core != requested:
        _LOGGER.warning(
            "Core %s enlarged to %s by hereditary saturated closure",
            ",".join(space.names(requested)),
            ",".join(space.names(core)),
        )
    quotient_space = quotient(space, core)
    summary = None if quotient_space.is_zero else quotient_predicates(
        quotient_space, config.cover_mode, config.allow_epsilon_cover, config.word_bound_multiplier
    )
    document = quotient_report(space, quotient_space, summary, requested)
    lines = ["core: {" + ", ".join(document["core"]) + "}"]
    if document["enlarged"]:
        lines.append("note: closure enlarged the requested core")
    if summary is None:
        lines.append("zero quotient")
    else:
        lines.append("atoms: " + " ".join("{" + ", ".join(a) + "}" for a in document["atoms"]))
        lines.append(f"alphabet: {', '.join(document['alphabet'])}")
        lines.append(f"disagreeable: {'true' if document['disagreeable'] else 'false'}")
        lines.append(f"connects: {'true' if document['connects'] else 'false'}")
    _emit(config, document, "\n".join(lines) + "\n")


@main.command("oracle")
@_file_argument
@click.pass_obj
@handle_errors
def cmd_oracle(config: Config, file: Path) -> None:
    """Evaluate conditions (L) and (K) on an injectively labeled graph."""
    graph = _load_graph(file, config)
    report = oracle_report(graph)
    agrees = compare_with_oracle(graph, config) is None
    document = oracle_document(report, agrees)
    text = "\n".join(f"{key}: {'true' if value else 'false'}" for key, value in document.items()) + "\n"
    _emit(config, document, text)


@main.command("fuzz")
@click.option("--n", "count", default=200, show_default=True, type=click.IntRange(min=1), help="Number of graphs")
@click.option("--size", default=6, show_default=True, type=click.IntRange(min=1), help="Maximum vertices")
@click.option("--seed", type=int, help="Random seed")
@click.pass_obj
@handle_errors
def cmd_fuzz(config: Config, count: int, size: int, seed: int | None) -> None:
    """Differential test against the classical oracle."""
    summary = run_fuzz(count, size, config.seed if seed is None else seed, config)
    text = summary.describe() + "\n"
    if summary.counterexample is not None:
        click.echo(f"counterexample: {summary.reason}", err=True)
        text += to_lgr(summary.counterexample)
    _emit(config, summary.as_dict(), text)
    if summary.counterexample is not None:
        sys.exit(EXIT_FAILURE)


@main.command("dot")
@_file_argument
@click.option("--core", "core_spec", default="", help="Comma-separated vertices to mark")
@click.pass_obj
@handle_errors
def cmd_dot(config: Config, file: Path, core_spec: str) -> None:
    """Export the graph as Graphviz DOT."""
    space = build_space(_load_graph(file, config), config)
    names = [name.strip() for name in core_spec.split(",") if name.strip()]
    core = saturate_hereditary_closure(space, space.graph.mask_of(names)) if names else 0
    click.echo(generate_dot(space, core), nl=False)


if __name__ == "__main__":
    main()
