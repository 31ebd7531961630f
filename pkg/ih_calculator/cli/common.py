"""Options and output handling shared by every subcommand."""
from __future__ import annotations

import logging
import time
from contextlib import contextmanager
from pathlib import Path
from typing import Iterator, Optional

import typer

from ..config import configure_logging, get_settings
from ..constants import EXIT_CHECK_FAILED, EXIT_OK, OUTPUT_FORMATS
from ..exceptions import IHCalculatorError, InputError
from ..fs import write_output
from ..reporting import RunReport, render

logger = logging.getLogger(__name__)

FormatOption = typer.Option(
    None, "--format", "-f", help="Output format: text or structured (default from IH_DEFAULT_FORMAT)"
)
OutputOption = typer.Option(None, "--output", "-o", help="Write the report to this file instead of stdout")
LogLevelOption = typer.Option(None, "--log-level", help="Logging level (DEBUG, INFO, WARNING, ERROR)")


def resolve_format(fmt: Optional[str]) -> str:
    resolved = (fmt or get_settings().DEFAULT_FORMAT).lower()
    if resolved not in OUTPUT_FORMATS:
        raise InputError(
            f"Unknown output format '{fmt}'. Choose one of: {', '.join(OUTPUT_FORMATS)}"
        )
    return resolved


@contextmanager
def command_errors() -> Iterator[None]:
    """Turn package errors into their exit status with a one-line message."""
    try:
        yield
    except IHCalculatorError as exc:
        logger.error("%s: %s", type(exc).__name__, exc)
        typer.echo(f"Error ({type(exc).__name__}): {exc}", err=True)
        raise typer.Exit(exc.exit_code)


@contextmanager
def timed(report: RunReport) -> Iterator[RunReport]:
    start = time.perf_counter()
    try:
        yield report
    finally:
        report.elapsed_seconds = round(time.perf_counter() - start, 6)


def start_command(log_level: Optional[str]) -> None:
    configure_logging(log_level)


def emit(report: RunReport, fmt: str, output: Optional[Path]) -> None:
    """Print or write ``report`` and exit 1 when any check failed."""
    text = render(report, fmt)
    if output is not None:
        write_output(text, output)
    else:
        typer.echo(text)
    if not report.passed:
        logger.error("%d check(s) failed in %s", len(report.failed_checks), report.command)
        raise typer.Exit(EXIT_CHECK_FAILED)
    raise typer.Exit(EXIT_OK)
