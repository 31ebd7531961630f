"""CLI command for single-condition Schubert varieties."""
import logging
from pathlib import Path
from typing import Optional

import typer

from .. import schubert as sch
from ..constants import ROUTE_F3
from ..document_schema import TwoStrataDocument
from ..grassmann import q_poly
from ..laurent import is_palindromic
from ..reporting import RunReport
from ..twostrata import g_poly
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


def build_schubert_report(i: int, j: int, k: int, l: int) -> RunReport:  # noqa: E741
    d = sch.SchubertDatum(i, j, k, l)
    report = RunReport(command="schubert", inputs={"i": i, "j": j, "k": k, "l": l})
    with timed(report):
        inv = sch.invariants(d)
        result = sch.RouteRunner().run_all(d, require_agreement=False)
        h_res = sch.h_resolution(d)
        data = sch.to_two_strata_data(d)
        pi_small, pi1_small = sch.is_small_pi(d), sch.is_small_pi1(d)

        report.values.update(
            case=inv.case_tag.value,
            n=inv.n,
            m=inv.m,
            p=inv.p,
            q=inv.q,
            p_minus_q=inv.p_minus_q,
            singular_locus=str(inv.sing_locus),
            fiber=f"P^{inv.fiber_dim}",
            codim_singular_locus=sch.codim_singular_locus(d),
            pi_small=pi_small,
            pi1_small=pi1_small,
        )
        if ROUTE_F3 in result.routes:
            second_dim = sch.small_resolution_dimension(d)
            report.values["small_resolution_dimension"] = second_dim
            report.add_check("second_resolution_dimension", second_dim == inv.n)
        report.routes = list(result.routes)
        report.notes.extend(f"route {name} skipped: {why}" for name, why in result.skipped.items())
        report.assumed_hypotheses = list(data.assumed_hypotheses)

        ih = result.polynomial
        report.add_polynomial("ih", ih)
        report.add_polynomial("h_resolution", h_res)
        report.add_polynomial("h_delta", q_poly(inv.sing_locus))
        report.add_polynomial("g", g_poly(data))

        report.add_check(
            "routes_agree",
            result.routes_agree,
            "; ".join(f"{name}: {poly}" for name, poly in result.values.items()),
        )
        report.add_check("ih_nonnegative", ih.has_nonnegative_coefficients())
        report.add_check("ih_constant_term_one", ih.coefficient(0) == 1)
        report.add_check("ih_palindromic", is_palindromic(ih, 2 * inv.n), f"degree {2 * inv.n}")
        if pi_small:
            report.add_check("small_resolution_law", ih == h_res)
        else:
            report.add_check("bounded_by_resolution", (h_res - ih).has_nonnegative_coefficients())
        report.two_strata_data = TwoStrataDocument.from_data(data)
    return report


def schubert(
    i: int = typer.Argument(..., help="Required intersection dimension"),
    j: int = typer.Argument(..., help="Dimension of the flag subspace F^j"),
    k: int = typer.Argument(..., help="Dimension of the subspaces V^k"),
    l: int = typer.Argument(..., help="Ambient dimension"),  # noqa: E741
    fmt: Optional[str] = FormatOption,
    output: Optional[Path] = OutputOption,
    log_level: Optional[str] = LogLevelOption,
):
    """IH of the Schubert variety {V^k in C^l : dim(V cap F^j) >= i}."""
    with command_errors():
        start_command(log_level)
        resolved = resolve_format(fmt)
        report = build_schubert_report(i, j, k, l)
    emit(report, resolved, output)
