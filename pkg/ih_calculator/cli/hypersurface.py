"""CLI command for hypersurfaces of P^5 singular along a curve."""
import logging
from pathlib import Path
from typing import Optional

import typer

from .. import blowup5
from ..constants import GENERIC_HYPERSURFACE_CAVEAT
from ..document_schema import TwoStrataDocument
from ..exceptions import CheckFailure
from ..laurent import is_palindromic
from ..reporting import RunReport
from ..twostrata import ih_poly
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


def build_hypersurface_report(d1: int, d2: int, d3: int, d4: int) -> RunReport:
    d = blowup5.HypersurfaceDatum(d1, d2, d3, d4)
    data = blowup5.two_strata_data(d)
    report = RunReport(
        command="hypersurface",
        inputs={"d1": d1, "d2": d2, "d3": d3, "d4": d4},
        assumed_hypotheses=list(data.assumed_hypotheses),
        notes=[GENERIC_HYPERSURFACE_CAVEAT],
        two_strata_data=TwoStrataDocument.from_data(data),
    )
    with timed(report):
        c4_ring = blowup5.c4_intersection_ring(d)
        c4_closed = blowup5.c4_closed_form(d)
        report.values.update(
            x=d.x,
            delta=d.delta,
            genus=d.genus,
            c4_intersection_ring=c4_ring,
            c4_closed_form=c4_closed,
        )
        report.add_check("c4_closed_form", c4_ring == c4_closed)
        for name, passed in blowup5.divisor_class_checks(d.x).items():
            report.add_check(name, passed)

        try:
            b4 = blowup5.b4_closed_form(d)
            b4_euler = blowup5.b4_gauss_bonnet(d)
            report.values.update(b4_closed_form=b4, b4_gauss_bonnet=b4_euler)
            report.add_check(
                "b4_gauss_bonnet", b4 == b4_euler, f"closed form {b4}, c4 + 4(2g-2) = {b4_euler}"
            )

            betti = blowup5.betti_resolution(d)
            report.values["betti_resolution"] = list(betti)
            report.values["euler_characteristic"] = blowup5.euler_characteristic(d)
            report.add_check("euler_equals_c4", report.values["euler_characteristic"] == c4_ring)

            closed = blowup5.ih_closed_form(d)
            engine = ih_poly(data)
            report.add_polynomial("ih", closed)
            report.add_polynomial("ih_engine", engine)
            report.add_polynomial("h_resolution", data.h_resolution)
            report.add_polynomial("h_delta", data.h_delta)
            report.add_check("ih_matches_engine", closed == engine)
            report.add_check("ih_nonnegative", closed.has_nonnegative_coefficients())
            report.add_check("ih_constant_term_one", closed.coefficient(0) == 1)
            report.add_check("ih_palindromic", is_palindromic(closed, 8), "degree 8")
        except CheckFailure as exc:
            report.add_check(type(exc).__name__, False, str(exc))
    return report


def hypersurface(
    d1: int = typer.Argument(..., help="Degree of t1"),
    d2: int = typer.Argument(..., help="Degree of t2"),
    d3: int = typer.Argument(..., help="Degree of t3"),
    d4: int = typer.Argument(..., help="Degree of t4"),
    fmt: Optional[str] = FormatOption,
    output: Optional[Path] = OutputOption,
    log_level: Optional[str] = LogLevelOption,
):
    """IH of the hypersurface t1*t3 - t2*t4 = 0 in P^5 (requires d1+d3 = d2+d4)."""
    with command_errors():
        start_command(log_level)
        resolved = resolve_format(fmt)
        report = build_hypersurface_report(d1, d2, d3, d4)
    emit(report, resolved, output)
