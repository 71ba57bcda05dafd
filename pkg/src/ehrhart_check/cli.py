"""Command-line interface.

Exit codes: 0 success, 1 verification failure, 2 input error, 3 resource cap.
Reports go to stdout as JSON; logging goes to stderr.
"""

import json
import logging
import sys
from collections.abc import Iterator
from contextlib import contextmanager
from pathlib import Path

import click
import yaml
from pydantic import ValidationError

from . import __version__
from .catalog import catalog_examples
from .config import Config, CorpusConfig
from .errors import CapExceededError, InputError, NotIDPError
from .formats import dump_model, json_safe, load_polytope, load_schema, vertices_to_text
from .harness import build_report, compare_oracle, corpus_verify, enforce_dimension_cap

logger = logging.getLogger(__name__)

EXIT_VERIFICATION = 1
EXIT_INPUT = 2
EXIT_CAP = 3

LOG_LEVELS = ["DEBUG", "INFO", "WARNING", "ERROR"]
FORMATS = ["auto", "text", "json", "normaliz"]


def _setup(config_path: str | None, log_level: str | None) -> Config:
    try:
        config = Config.from_yaml(config_path) if config_path else Config()
    except (ValidationError, yaml.YAMLError, TypeError) as e:
        click.echo(f"error: invalid configuration {config_path}: {e}", err=True)
        raise SystemExit(EXIT_INPUT)
    logging.basicConfig(stream=sys.stderr, format="%(levelname)s %(name)s: %(message)s")
    logging.getLogger("ehrhart_check").setLevel((log_level or config.log_level).upper())
    return config


@contextmanager
def _exit_codes() -> Iterator[None]:
    try:
        yield
    except InputError as e:
        click.echo(f"error: {e}", err=True)
        raise SystemExit(EXIT_INPUT)
    except NotIDPError as e:
        click.echo(f"error: {e}", err=True)
        raise SystemExit(EXIT_INPUT)
    except CapExceededError as e:
        logger.warning("Refused: %s", e)
        click.echo(f"refused: {e}", err=True)
        raise SystemExit(EXIT_CAP)


def _config_options(fn):
    fn = click.option("--log-level", type=click.Choice(LOG_LEVELS, case_sensitive=False), default=None,
                      help="Logging threshold (default from config)")(fn)
    fn = click.option("--config", "config_path", type=click.Path(dir_okay=False), default=None,
                      help="YAML configuration file")(fn)
    return fn


@click.group()
@click.version_option(version=__version__, prog_name="ehrhart-check")
def main():
    """Ehrhart invariants of lattice polytopes and corpus verification."""


@main.command()
@click.argument("path", type=click.Path(exists=True, dir_okay=False))
@click.option("--format", "fmt", type=click.Choice(FORMATS), default="auto", help="Input format")
@click.option("--hstar", is_flag=True, help="h*-vector, degree, codegree, volume (always reported)")
@click.option("--idp", is_flag=True, help="Integer decomposition property and generator profile")
@click.option("--spanning", is_flag=True, help="Sublattice index and P~")
@click.option("--level", is_flag=True, help="Levelness")
@click.option("--betti", nargs=2, type=int, default=None, metavar="P_MAX J_MAX", help="Graded Betti numbers")
@click.option("--toric", type=int, default=None, metavar="J_MAX", help="Toric ideal generators up to degree J_MAX")
@click.option("--implications", is_flag=True, help="Predicates A-F and their arrows")
@click.option("--all", "select_all", is_flag=True, help="Everything except --betti and --toric")
@_config_options
def invariants(path, fmt, hstar, idp, spanning, level, betti, toric, implications, select_all, config_path, log_level):
    """Compute invariants of the polytope in PATH."""
    config = _setup(config_path, log_level)
    with _exit_codes():
        P = load_polytope(path, fmt)
        enforce_dimension_cap(P, config.caps)
        report = build_report(
            P,
            idp=idp or select_all,
            spanning=spanning or select_all,
            level=level or select_all,
            betti=tuple(betti) if betti else None,
            toric=toric,
            implications=implications or select_all,
            caps=config.caps,
        )
    click.echo(dump_model(report))


@main.command()
@click.option("--seed", type=int, default=None, help="PRNG seed")
@click.option("--count", type=int, default=None, help="Number of random polytopes")
@click.option("--dim", type=int, default=None, help="Fix the dimension")
@click.option("--bound", type=int, default=None, help="Entry bound of random HNF simplices")
@click.option("--degree", type=int, default=None, help="Keep only polytopes of this degree")
@click.option("--workers", type=int, default=None, help="Worker processes")
@click.option("--out", type=click.Path(dir_okay=False), default=None, help="JSONL report file (default stdout)")
@click.option("--summary", "summary_path", type=click.Path(dir_okay=False), default=None, help="Summary JSON file")
@click.option("--catalog", "--paper-examples", "catalog_only", is_flag=True, help="Verify only the catalog examples")
@_config_options
def corpus(seed, count, dim, bound, degree, workers, out, summary_path, catalog_only, config_path, log_level):
    """Generate a random corpus and verify every invariant check on it."""
    config = _setup(config_path, log_level)
    overrides = {"seed": seed, "count": count, "entry_bound": bound, "degree": degree, "workers": workers}
    if dim is not None:
        overrides["dim_min"] = overrides["dim_max"] = dim
    overrides = {k: v for k, v in overrides.items() if v is not None}
    try:
        corpus_config = CorpusConfig(**{**config.corpus.model_dump(), **overrides})
    except ValidationError as e:
        click.echo(f"error: invalid corpus options: {e}", err=True)
        raise SystemExit(EXIT_INPUT)

    with _exit_codes():
        run = corpus_verify(corpus_config, config.caps, polytopes=catalog_examples() if catalog_only else None)

    lines = "".join(dump_model(report) + "\n" for report in run.reports)
    if out:
        Path(out).write_text(lines, encoding="utf-8")
    else:
        click.echo(lines, nl=False)

    summary = json.dumps(json_safe(run.summary.model_dump(exclude_none=True)), indent=2)
    if summary_path:
        Path(summary_path).write_text(summary + "\n", encoding="utf-8")
    else:
        click.echo(summary, err=out is None)

    if not run.passed:
        for violation in run.summary.violations:
            click.echo(f"violation [{violation.severity}] {violation.check} on {violation.polytope}: {violation.message}", err=True)
            ambient = len(violation.vertices[0]) if violation.vertices else 0
            click.echo(vertices_to_text(ambient, violation.vertices), err=True, nl=False)
        raise SystemExit(EXIT_VERIFICATION)


@main.command()
@click.argument("path", type=click.Path(exists=True, dir_okay=False))
@click.option("--mode", type=click.Choice(["hstar", "idp"]), required=True, help="Quantity to cross-check")
@click.option("--format", "fmt", type=click.Choice(FORMATS), default="auto", help="Input format")
@_config_options
def oracle(path, mode, fmt, config_path, log_level):
    """Compare a fast path with its brute-force oracle on a small polytope."""
    config = _setup(config_path, log_level)
    with _exit_codes():
        P = load_polytope(path, fmt)
        comparison = compare_oracle(P, mode, config.caps)
    payload = {"mode": mode, "match": comparison.match, "fast": comparison.fast, "oracle": comparison.oracle}
    click.echo(json.dumps(json_safe(payload)))
    if not comparison.match:
        click.echo(f"mismatch: fast {comparison.fast} != oracle {comparison.oracle}", err=True)
        raise SystemExit(EXIT_VERIFICATION)


@main.command()
def schema():
    """Print the JSON schema of invariant reports."""
    click.echo(json.dumps(load_schema(), indent=2))


if __name__ == "__main__":
    main()
