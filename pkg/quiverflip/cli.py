"""
Command-line interface.

Exit codes: 0 success or certificate accepted, 1 certificate rejected,
2 usage or schema error, 3 invariant violation (the partial trace is dumped
to stderr), 130 interrupted.
"""

import logging
import sys
from concurrent.futures import ProcessPoolExecutor
from contextlib import contextmanager
from enum import Enum
from pathlib import Path
from typing import Iterator, Optional, Sequence

import numpy as np
import typer

from quiverflip import __version__
from quiverflip.config import Settings, load_settings
from quiverflip.construction.steps import bipartitize
from quiverflip.core.mutation import mutate
from quiverflip.core.quiver import Quiver
from quiverflip.exceptions import InvariantViolation, QuiverError
from quiverflip.formats.documents import dump_quiver, dump_trace, parse_quiver, parse_trace
from quiverflip.formats.dot import emit_dot
from quiverflip.generate import GenSpec, enumerate_small, random_acyclic
from quiverflip.schema import SchemaError
from quiverflip.verify.certificate import certify

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_REJECTED = 1
EXIT_USAGE = 2
EXIT_INVARIANT = 3
EXIT_INTERRUPTED = 130

STATS_COLUMNS = ("seed", "n", "arrows", "ell", "step1_iterations", "step2_iterations", "inserted_vertices")

app = typer.Typer(
    name="quiverflip",
    help="Bipartitize acyclic quivers by vertex insertions and mutations, and certify the result.",
    add_completion=False,
    no_args_is_help=True,
)


class ArrowChoice(str, Enum):
    LEAST = "least"
    RANDOM = "random"


def _settings() -> Settings:
    try:
        return load_settings()
    except SchemaError as exc:
        typer.echo(f"error: invalid environment: {exc}", err=True)
        raise typer.Exit(EXIT_USAGE)


@contextmanager
def _exit_on_errors() -> Iterator[None]:
    """Translate library errors into the documented exit codes."""
    try:
        yield
    except InvariantViolation as exc:
        typer.echo(f"invariant violation: {exc}", err=True)
        if exc.trace is not None:
            typer.echo(dump_trace(exc.trace), err=True, nl=False)
        raise typer.Exit(EXIT_INVARIANT)
    except (QuiverError, SchemaError, OSError) as exc:
        typer.echo(f"error: {exc}", err=True)
        raise typer.Exit(EXIT_USAGE)
    except KeyboardInterrupt:
        typer.echo("interrupted", err=True)
        raise typer.Exit(EXIT_INTERRUPTED)


def _read_quiver(path: Path) -> Quiver:
    return parse_quiver(path.read_text(encoding="utf-8"))


def _rng(choice: ArrowChoice, seed: int) -> Optional[np.random.Generator]:
    return np.random.default_rng(seed) if choice is ArrowChoice.RANDOM else None


def _show_version(value: bool) -> None:
    if value:
        typer.echo(__version__)
        raise typer.Exit()


@app.callback()
def configure(
    log_level: Optional[str] = typer.Option(
        None, "--log-level", help="Log level on stderr (default: QUIVERFLIP_LOG_LEVEL or WARNING)."
    ),
    version: bool = typer.Option(
        False, "--version", help="Show the version and exit.", callback=_show_version, is_eager=True
    ),
) -> None:
    """Configure logging for every subcommand."""
    level = (log_level or _settings().log_level).upper()
    if level not in logging.getLevelNamesMapping():
        typer.echo(f"error: unknown log level {log_level!r}", err=True)
        raise typer.Exit(EXIT_USAGE)
    logging.basicConfig(
        level=level, stream=sys.stderr, format="%(levelname)s %(name)s: %(message)s", force=True
    )


@app.command("bipartitize")
def bipartitize_command(
    input_path: Path = typer.Argument(..., help="Quiver document (JSON)."),
    trace_path: Optional[Path] = typer.Option(None, "--trace", help="Write the trace document here."),
    dot_path: Optional[Path] = typer.Option(None, "--dot", help="Write the final quiver as DOT here."),
    dot_states: Optional[Path] = typer.Option(
        None, "--dot-states", help="Write every state Q^(i) as state-<i>.dot into this directory."
    ),
    report: bool = typer.Option(False, "--report", help="Also print the path profile of every state."),
    max_iterations: Optional[int] = typer.Option(None, "--max-iterations", min=0, help="Step 1 iteration cap."),
    choice: ArrowChoice = typer.Option(ArrowChoice.LEAST, "--choice", help="Step 1 arrow choice."),
    seed: int = typer.Option(0, "--seed", min=0, help="Seed for --choice random."),
) -> None:
    """Run Step 1 and Step 2 and print the run report."""
    with _exit_on_errors():
        q = _read_quiver(input_path)
        trace, run = bipartitize(
            q, max_iterations=max_iterations, rng=_rng(choice, seed), settings=_settings()
        )
        if trace_path is not None:
            trace_path.write_text(dump_trace(trace), encoding="utf-8")
        if dot_path is not None:
            dot_path.write_text(emit_dot(trace.final, name="final"), encoding="utf-8")
        if dot_states is not None:
            dot_states.mkdir(parents=True, exist_ok=True)
            for i, state in enumerate(trace.states()):
                (dot_states / f"state-{i}.dot").write_text(emit_dot(state, name=f"state_{i}"), encoding="utf-8")

    for key, value in run.as_dict().items():
        typer.echo(f"{key}={value}")
    if report:
        for i, profile in enumerate(run.profiles):
            phase = "step1" if i <= run.step1_iterations else "step2"
            typer.echo(
                f"state {i} ({phase}): ell={profile.ell} "
                f"maximal_lengths={sorted(profile.maximal_lengths)}"
            )


@app.command("verify")
def verify_command(
    input_path: Path = typer.Argument(..., help="Quiver document (JSON)."),
    trace_path: Path = typer.Argument(..., help="Trace document (JSON)."),
) -> None:
    """Certify a trace; exit 0 iff the certificate accepts."""
    with _exit_on_errors():
        q = _read_quiver(input_path)
        trace = parse_trace(trace_path.read_text(encoding="utf-8"))

    certificate = certify(q, trace)
    for key, value in certificate.as_dict().items():
        if value is not None:
            typer.echo(f"{key}={str(value).lower() if isinstance(value, bool) else value}")
    raise typer.Exit(EXIT_OK if certificate.accepted else EXIT_REJECTED)


@app.command("mutate")
def mutate_command(
    input_path: Path = typer.Argument(..., help="Quiver document (JSON)."),
    vertex: str = typer.Option(..., "-k", "--vertex", help="Label of the mutation vertex."),
) -> None:
    """Print the quiver mutated at one vertex."""
    with _exit_on_errors():
        mutated = mutate(_read_quiver(input_path), vertex)
    typer.echo(dump_quiver(mutated), nl=False)


def _stats_row(task: tuple[int, int, float, int, ArrowChoice, Settings]) -> tuple[int, ...]:
    seed, n, edge_prob, max_mult, choice, settings = task
    q = random_acyclic(GenSpec(n, edge_prob, max_mult, seed))
    _, run = bipartitize(q, rng=_rng(choice, seed), settings=settings)
    return (seed, n, q.total_multiplicity, run.ell,
            run.step1_iterations, run.step2_iterations, run.inserted_vertices)


@app.command("stats")
def stats_command(
    n: int = typer.Option(..., "--n", min=0, help="Vertices per sample."),
    samples: int = typer.Option(..., "--samples", min=0, help="Number of samples."),
    seed: int = typer.Option(..., "--seed", min=0, max=2 ** 64 - 1, help="Base seed."),
    edge_prob: float = typer.Option(0.4, "--edge-prob", min=0.0, max=1.0, help="Arrow probability per pair."),
    max_mult: int = typer.Option(1, "--max-mult", min=1, help="Maximum arrow multiplicity."),
    choice: ArrowChoice = typer.Option(ArrowChoice.LEAST, "--choice", help="Step 1 arrow choice."),
    jobs: int = typer.Option(1, "--jobs", min=1, help="Worker processes."),
) -> None:
    """Print one CSV row per random sample; sample i uses seed + i."""
    settings = _settings()
    tasks = [((seed + i) % 2 ** 64, n, edge_prob, max_mult, choice, settings) for i in range(samples)]

    typer.echo(",".join(STATS_COLUMNS))
    with _exit_on_errors():
        if jobs == 1:
            for row in map(_stats_row, tasks):
                typer.echo(",".join(str(value) for value in row))
        else:
            with ProcessPoolExecutor(max_workers=jobs) as pool:
                for row in pool.map(_stats_row, tasks, chunksize=max(1, samples // (4 * jobs))):
                    typer.echo(",".join(str(value) for value in row))


@app.command("enumerate")
def enumerate_command(
    max_n: int = typer.Option(..., "--max-n", min=1, help="Largest vertex count."),
    max_mult: int = typer.Option(1, "--max-mult", min=0, help="Maximum arrow multiplicity."),
) -> None:
    """Bipartitize and certify every labeled acyclic quiver up to --max-n vertices."""
    settings = _settings()
    rejected = 0
    with _exit_on_errors():
        quivers = enumerate_small(max_n, max_mult)
        typer.echo("index,n,arrows,ell,accepted")
        for index, q in enumerate(quivers):
            trace, run = bipartitize(q, settings=settings)
            accepted = certify(q, trace).accepted
            rejected += not accepted
            typer.echo(f"{index},{q.n},{q.total_multiplicity},{run.ell},{str(accepted).lower()}")
    if rejected:
        logger.warning("%d certificates rejected", rejected)
    raise typer.Exit(EXIT_REJECTED if rejected else EXIT_OK)


def cli_main(args: Optional[Sequence[str]] = None) -> int:
    """Run the CLI on ``args`` (default: sys.argv[1:]) and return the exit code."""
    command = typer.main.get_command(app)
    try:
        command.main(args=list(args) if args is not None else None, prog_name="quiverflip")
    except SystemExit as exc:
        if exc.code is None:
            return EXIT_OK
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    return EXIT_OK


def main() -> None:
    sys.exit(cli_main())
