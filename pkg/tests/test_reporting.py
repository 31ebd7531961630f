import json

import pandas as pd
import pytest

from ih_calculator.exceptions import InputError
from ih_calculator.laurent import LaurentPoly
from ih_calculator.reporting import RunReport, export_sweep, render


@pytest.fixture
def report():
    report = RunReport(command="demo", inputs={"i": 1})
    report.add_polynomial("ih", LaurentPoly.parse("1 + t^2 + t^4"))
    report.add_check("ih_nonnegative", True)
    report.notes.append("a note")
    return report


def test_text_rendering(report):
    text = render(report, "text")
    assert text.startswith("== demo ==")
    assert "ih  1 + t^2 + t^4" in text
    assert "[PASS] ih_nonnegative" in text
    assert "Result: all checks passed" in text


def test_failed_check_is_rendered(report):
    assert not report.add_check("palindromic", False, "degree 4")
    assert not report.passed
    assert [c.name for c in report.failed_checks] == ["palindromic"]
    assert "[FAIL] palindromic  (degree 4)" in render(report, "text")


def test_structured_rendering(report):
    document = json.loads(render(report, "structured"))
    assert document["command"] == "demo"
    assert document["polynomials"]["ih"]["coefficients"] == [1, 0, 1, 0, 1]
    assert document["two_strata_data"] is None


def test_unknown_format(report):
    with pytest.raises(InputError):
        render(report, "xml")


def test_export_sweep(tmp_path):
    rows = [{"i": 1, "passed": True}, {"i": 2, "passed": False}]
    paths = export_sweep(rows, tmp_path, "verify_demo", ["csv", "json", "pdf"])
    assert set(paths) == {"csv", "json"}
    assert pd.read_csv(paths["csv"])["i"].tolist() == [1, 2]
    assert json.loads(paths["json"].read_text())[1]["passed"] is False
    with pytest.raises(InputError):
        export_sweep(rows, tmp_path, "verify_demo", "pdf")
