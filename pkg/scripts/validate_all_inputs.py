#!/usr/bin/env python3
"""
Validate All Inputs Script

Checks every two-strata document under inputs/ for:
- Schema compliance (using TwoStrataDocument)
- The numerically checkable two-strata conditions (twostrata.validate)
- An IH polynomial that the engine accepts, compared against the
  "Expected IH:" comment line when the document carries one

Usage:
  python scripts/validate_all_inputs.py
  python scripts/validate_all_inputs.py --only <document_name_or_path>
"""
import argparse
import sys
from pathlib import Path

from ih_calculator.document_loader import load_document
from ih_calculator.exceptions import IHCalculatorError
from ih_calculator.laurent import LaurentPoly
from ih_calculator.twostrata import ih_poly, validate

INPUTS_DIR = Path(__file__).resolve().parent.parent / "inputs"
EXPECTED_MARKER = "# Expected IH:"


def expected_ih(path):
    for line in path.read_text(encoding="utf-8").splitlines():
        if line.startswith(EXPECTED_MARKER):
            return LaurentPoly.parse(line[len(EXPECTED_MARKER):])
    return None


def validate_input(path):
    try:
        data = load_document(path).to_data()
        violations = validate(data)
        if violations:
            print(f"[FAIL] {path.name}: {'; '.join(violations)}")
            return 1
        ih = ih_poly(data)
        expected = expected_ih(path)
        if expected is not None and expected != ih:
            print(f"[FAIL] {path.name}: IH {ih} != expected {expected}")
            return 1
        print(f"[OK]   {path.name}: {ih}")
        return 0
    except IHCalculatorError as e:
        print(f"[ERROR] {path.name}: {e}")
        return 1


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument('--only', type=str, default=None, help='Validate only the given document (name or path)')
    args = parser.parse_args()
    failures = 0
    if args.only:
        path = Path(args.only)
        if not path.is_file():
            path = INPUTS_DIR / args.only
        failures += validate_input(path)
    else:
        for path in sorted(INPUTS_DIR.glob("*.y*ml")):
            failures += validate_input(path)
    if failures:
        print(f"\nValidation failed for {failures} document(s). See above for details.")
        sys.exit(1)
    else:
        print("\nAll input documents validated successfully.")

if __name__ == "__main__":
    main()
