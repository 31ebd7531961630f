"""CLI command running the generic two-strata engine on an input document."""
import logging
from pathlib import Path
from typing import Optional

import typer

from .. import twostrata
from ..document_loader import load_document
from ..exceptions import CaseNotApplicableError, CheckFailure
from ..laurent import is_palindromic
from ..reporting import RunReport
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


def build_generic_report(document_path: Path) -> RunReport:
    document = load_document(document_path)
    data = document.to_data()
    report = RunReport(
        command="generic",
        inputs={"document": str(document_path)},
        assumed_hypotheses=list(data.assumed_hypotheses),
        two_strata_data=document,
    )

    with timed(report):
        report.values.update(n=data.n, m=data.m, p=data.p, q=data.q, p_minus_q=data.p - data.q)
        violations = twostrata.validate(data)
        report.add_check("valid_two_strata_data", not violations, "; ".join(violations))
        if violations:
            return report

        report.values["resolution_is_small"] = twostrata.is_small(data)
        report.add_polynomial("h_resolution", data.h_resolution)
        report.add_polynomial("h_delta", data.h_delta)
        try:
            report.add_polynomial("r", twostrata.r_poly(data))
        except CaseNotApplicableError:
            report.notes.append("r(t) is undefined because p - q < 0; g and f vanish")

        try:
            g = twostrata.g_poly(data)
            f = twostrata.f_poly(data)
            report.add_polynomial("g", g)
            report.add_polynomial("f", f)
            report.add_check("f_equals_h_delta_times_g", f == data.h_delta * g)

            decomposition = twostrata.decomposition_report(data)
            report.values["decomposition_summands"] = [list(s) for s in decomposition.summands]
            report.values["decomposition_ic_summand"] = decomposition.ic_summand
            report.add_check("decomposition_self_dual", decomposition.is_symmetric())
            report.add_check(
                "decomposition_reproduces_f",
                decomposition.shift_polynomial(data.n) * data.h_delta == f,
            )
            mismatches = twostrata.stalk_mismatches(data)
            report.values["stalk_dimensions"] = {
                str(k): v for k, v in twostrata.stalk_dimensions(data).items()
            }
            report.add_check(
                "stalks_match_fiber",
                not mismatches,
                "; ".join(f"degree {a}: {s} != {b}" for a, s, b in mismatches),
            )

            ih = twostrata.ih_poly(data)
            report.add_polynomial("ih", ih)
            report.add_check("ih_nonnegative", ih.has_nonnegative_coefficients())
            if data.resolution_is_projective and data.delta_is_projective:
                report.add_check("ih_palindromic", is_palindromic(ih, 2 * data.n))
        except CheckFailure as exc:
            report.add_check(type(exc).__name__, False, str(exc))
    return report


def generic(
    document: Path = typer.Argument(..., help="YAML or JSON two-strata document"),
    fmt: Optional[str] = FormatOption,
    output: Optional[Path] = OutputOption,
    log_level: Optional[str] = LogLevelOption,
):
    """Compute IH from abstract two-strata resolution data."""
    with command_errors():
        start_command(log_level)
        resolved = resolve_format(fmt)
        report = build_generic_report(document)
    emit(report, resolved, output)
