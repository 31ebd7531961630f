"""CLI command running the verification sweeps."""
import logging
from pathlib import Path
from typing import List, Optional

import typer

from ..config import get_settings
from ..reporting import RunReport, export_sweep
from ..schubert import verify_identities
from ..sweeps import SweepResult, sweep_engine, sweep_hypersurface, sweep_schubert
from .common import (
    FormatOption,
    LogLevelOption,
    OutputOption,
    command_errors,
    emit,
    resolve_format,
    start_command,
    timed,
)

logger = logging.getLogger(__name__)

# Failures listed in a report before the rest are only counted
MAX_LISTED_FAILURES = 20


def _record_sweep(report: RunReport, sweep: SweepResult) -> None:
    failures = sweep.failures
    report.values[f"{sweep.name}_sweep_size"] = sweep.size
    report.values[f"{sweep.name}_failures"] = len(failures)
    detail = "; ".join(
        row.get("error") or str({k: v for k, v in row.items() if v is False})
        for row in failures[:MAX_LISTED_FAILURES]
    )
    report.add_check(f"{sweep.name}_sweep", not failures, detail)
    logger.info("%s sweep: %d data, %d failures", sweep.name, sweep.size, len(failures))


def build_verify_report(
    schubert: bool,
    hypersurface: bool,
    engine: bool,
    max_l: int,
    max_d: int,
    samples: int,
    seed: int,
    max_workers: int,
    show_progress: bool,
) -> tuple[RunReport, List[SweepResult]]:
    if not (schubert or hypersurface or engine):
        schubert = hypersurface = engine = True

    report = RunReport(
        command="verify",
        inputs={
            "schubert": schubert,
            "hypersurface": hypersurface,
            "engine": engine,
            "max_l": max_l,
            "max_d": max_d,
            "samples": samples,
            "seed": seed,
        },
    )
    sweeps: List[SweepResult] = []
    with timed(report):
        if schubert:
            identities = verify_identities(max_l)
            report.values.update(
                identities_checked=len(identities.checked),
                identity_mismatches=len(identities.mismatches),
                identities_skipped=len(identities.skipped),
                identity_skip_list=[
                    f"{s.datum} {s.case.value}: {s.reason}" for s in identities.skipped
                ],
            )
            report.add_check(
                "schubert_identities",
                identities.passed,
                "; ".join(f"{m.datum} {m.case.value}: {m.lhs} != {m.rhs}" for m in identities.mismatches),
            )
            sweeps.append(sweep_schubert(max_l, max_workers, show_progress))
        if hypersurface:
            sweeps.append(sweep_hypersurface(max_d, max_workers, show_progress))
        if engine:
            sweeps.append(sweep_engine(samples, seed, max_workers, show_progress))
        for sweep in sweeps:
            _record_sweep(report, sweep)
    return report, sweeps


def verify(
    schubert: bool = typer.Option(False, "--schubert", help="Schubert identities and route sweep"),
    hypersurface: bool = typer.Option(False, "--hypersurface", help="Hypersurface closed-form sweep"),
    engine: bool = typer.Option(False, "--engine", help="Randomized generic-engine sweep"),
    max_l: Optional[int] = typer.Option(None, "--max-l", help="Largest ambient dimension l"),
    max_d: Optional[int] = typer.Option(None, "--max-d", help="Largest degree d_i"),
    samples: Optional[int] = typer.Option(None, "--samples", help="Number of random engine instances"),
    seed: Optional[int] = typer.Option(None, "--seed", help="Seed for the engine sweep"),
    workers: Optional[int] = typer.Option(None, "--workers", help="Process-pool size (1 runs in-process)"),
    export: bool = typer.Option(False, "--export", help="Write sweep tables (to IH_OUTPUT_DIR unless --output-dir)"),
    output_dir: Optional[Path] = typer.Option(None, "--output-dir", help="Export sweep tables here"),
    export_format: List[str] = typer.Option(["csv"], "--export-format", help="csv, json or html; repeatable"),
    fmt: Optional[str] = FormatOption,
    output: Optional[Path] = OutputOption,
    log_level: Optional[str] = LogLevelOption,
):
    """Run the exhaustive and randomized consistency sweeps."""
    with command_errors():
        start_command(log_level)
        resolved = resolve_format(fmt)
        settings = get_settings()
        report, sweeps = build_verify_report(
            schubert=schubert,
            hypersurface=hypersurface,
            engine=engine,
            max_l=max_l if max_l is not None else settings.SCHUBERT_MAX_L,
            max_d=max_d if max_d is not None else settings.HYPERSURFACE_MAX_D,
            samples=samples if samples is not None else settings.ENGINE_SAMPLES,
            seed=seed if seed is not None else settings.RANDOM_SEED,
            max_workers=workers if workers is not None else settings.MAX_WORKERS,
            show_progress=settings.SHOW_PROGRESS,
        )
        if export and output_dir is None:
            output_dir = settings.OUTPUT_DIR
        if output_dir is not None:
            for sweep in sweeps:
                paths = export_sweep(sweep.rows, output_dir, f"verify_{sweep.name}", export_format)
                report.values[f"{sweep.name}_exports"] = {k: str(v) for k, v in paths.items()}
    emit(report, resolved, output)
