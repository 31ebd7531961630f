"""reporting.py
Run reports for the CLI commands plus sweep-table export via pandas.
"""
from __future__ import annotations

import logging
from pathlib import Path
from typing import Any, Dict, List, Optional, Union

import pandas as pd
from pydantic import BaseModel, ConfigDict, Field

from .constants import EXPORT_FORMATS, FORMAT_STRUCTURED, FORMAT_TEXT
from .document_schema import PolynomialDocument, TwoStrataDocument
from .exceptions import InputError
from .laurent import LaurentPoly

logger = logging.getLogger(__name__)


class Check(BaseModel):
    name: str
    passed: bool
    detail: str = ""


class RunReport(BaseModel):
    """Everything a command computed, checked and assumed."""

    model_config = ConfigDict(extra="forbid")

    command: str
    inputs: Dict[str, Any] = Field(default_factory=dict)
    routes: List[str] = Field(default_factory=list)
    polynomials: Dict[str, PolynomialDocument] = Field(default_factory=dict)
    values: Dict[str, Any] = Field(default_factory=dict)
    checks: List[Check] = Field(default_factory=list)
    assumed_hypotheses: List[str] = Field(default_factory=list)
    notes: List[str] = Field(default_factory=list)
    elapsed_seconds: float = 0.0
    two_strata_data: Optional[TwoStrataDocument] = None

    @property
    def passed(self) -> bool:
        return all(check.passed for check in self.checks)

    @property
    def failed_checks(self) -> List[Check]:
        return [check for check in self.checks if not check.passed]

    def add_check(self, name: str, passed: bool, detail: str = "") -> bool:
        self.checks.append(Check(name=name, passed=bool(passed), detail=detail))
        if not passed:
            logger.error("Check failed: %s %s", name, detail)
        return bool(passed)

    def add_polynomial(self, name: str, poly: LaurentPoly) -> None:
        self.polynomials[name] = PolynomialDocument.from_poly(poly)


# --------------------------------------------------------------------------- #
# Rendering
# --------------------------------------------------------------------------- #
def _block(title: str, rows: Dict[str, Any]) -> List[str]:
    if not rows:
        return []
    width = max(len(str(key)) for key in rows)
    lines = [f"{title}:"]
    lines.extend(f"  {str(key):<{width}}  {value}" for key, value in rows.items())
    return lines


def render_text(report: RunReport) -> str:
    lines = [f"== {report.command} =="]
    lines += _block("Input", report.inputs)
    lines += _block("Values", report.values)
    if report.routes:
        lines.append(f"Routes: {', '.join(report.routes)}")
    lines += _block("Polynomials", {k: v.terms for k, v in report.polynomials.items()})
    if report.checks:
        lines.append("Checks:")
        for check in report.checks:
            status = "PASS" if check.passed else "FAIL"
            detail = f"  ({check.detail})" if check.detail else ""
            lines.append(f"  [{status}] {check.name}{detail}")
    if report.assumed_hypotheses:
        lines.append("Assumed hypotheses:")
        lines.extend(f"  - {h}" for h in report.assumed_hypotheses)
    if report.notes:
        lines.append("Notes:")
        lines.extend(f"  - {note}" for note in report.notes)
    status = "all checks passed" if report.passed else f"{len(report.failed_checks)} check(s) failed"
    lines.append(f"Result: {status} in {report.elapsed_seconds:.3f}s")
    return "\n".join(lines)


def render_structured(report: RunReport) -> str:
    return report.model_dump_json(indent=2)


def render(report: RunReport, fmt: str) -> str:
    if fmt == FORMAT_TEXT:
        return render_text(report)
    if fmt == FORMAT_STRUCTURED:
        return render_structured(report)
    raise InputError(f"Unknown output format: {fmt}", format=fmt)


# --------------------------------------------------------------------------- #
# Sweep export
# --------------------------------------------------------------------------- #
def to_csv(df: pd.DataFrame, path: Path) -> Path:
    path.parent.mkdir(parents=True, exist_ok=True)
    df.to_csv(path, index=False, encoding="utf-8")
    logger.info("CSV written to %s", path)
    return path


def to_html(df: pd.DataFrame, path: Path) -> Path:
    path.parent.mkdir(parents=True, exist_ok=True)
    df.to_html(path, index=False, justify="center")
    logger.info("HTML written to %s", path)
    return path


def to_json(df: pd.DataFrame, path: Path) -> Path:
    path.parent.mkdir(parents=True, exist_ok=True)
    df.to_json(path, orient="records", indent=2)
    logger.info("JSON written to %s", path)
    return path


def export_sweep(
    rows: List[Dict[str, Any]],
    output_dir: Path,
    base_name: str,
    formats: Union[List[str], str] = "csv",
) -> Dict[str, Path]:
    """Tabulate sweep rows and write them in each requested format.

    Args:
        rows: One mapping per swept datum, in sweep order.
        output_dir: Directory to write files to.
        base_name: Base filename without extension.
        formats: "csv", "json", "html" or a list of them.

    Returns:
        Dictionary mapping format names to output paths.

    Raises:
        InputError: If no supported format was requested.
    """
    output_dir = Path(output_dir)
    output_dir.mkdir(parents=True, exist_ok=True)

    if isinstance(formats, str):
        formats = [formats.lower()]
    else:
        formats = [f.lower() for f in formats]
    for fmt in formats:
        if fmt not in EXPORT_FORMATS:
            logger.warning("Ignoring unsupported format: %s", fmt)
    formats = [fmt for fmt in formats if fmt in EXPORT_FORMATS]
    if not formats:
        raise InputError(f"No valid export formats specified. Supported formats: {list(EXPORT_FORMATS)}")

    df = pd.DataFrame.from_records(rows)
    writers = {"csv": to_csv, "html": to_html, "json": to_json}
    result_paths = {}
    for fmt in formats:
        result_paths[fmt] = writers[fmt](df, output_dir / f"{base_name}.{fmt}")
    return result_paths
