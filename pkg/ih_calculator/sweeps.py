"""sweeps.py
Deterministic parameter sweeps behind ``verify``.

Each sweep maps a top-level row function over its parameter grid, in the
grid's order, either in-process or on a process pool, and returns one flat
row per datum.  A row never raises for a mathematical failure; failures are
recorded in its ``passed`` and ``error`` columns.
"""
from __future__ import annotations

import logging
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import partial
from typing import Any, Callable, Dict, Iterable, Iterator, List, Sequence

from tqdm import tqdm

from . import blowup5
from .exceptions import CheckFailure
from .laurent import LaurentPoly, is_palindromic, reciprocal
from .schubert import SchubertDatum, h_resolution, ih, is_small_pi, validate
from .twostrata import (
    BettiVector,
    TwoStrataData,
    decomposition_report,
    f_poly,
    g_poly,
    ih_poly,
    stalk_mismatches,
)

logger = logging.getLogger(__name__)

Row = Dict[str, Any]


@dataclass
class SweepResult:
    name: str
    rows: List[Row] = field(default_factory=list)

    @property
    def size(self) -> int:
        return len(self.rows)

    @property
    def failures(self) -> List[Row]:
        return [row for row in self.rows if not row["passed"]]


def run_rows(
    func: Callable[[Any], Row],
    items: Sequence[Any],
    max_workers: int = 1,
    show_progress: bool = False,
    desc: str = "Sweep",
) -> List[Row]:
    """Apply ``func`` to every item, preserving item order in the result."""
    if max_workers <= 1:
        iterator: Iterable[Row] = map(func, items)
        return list(tqdm(iterator, total=len(items), desc=desc, unit="datum", disable=not show_progress))

    logger.info("Running %s on %d items with %d workers", desc, len(items), max_workers)
    with ProcessPoolExecutor(max_workers=max_workers) as executor:
        futures = [executor.submit(func, item) for item in items]
        return [
            future.result()
            for future in tqdm(futures, desc=desc, unit="datum", disable=not show_progress)
        ]


def _coefficientwise_le(a: LaurentPoly, b: LaurentPoly) -> bool:
    return (b - a).has_nonnegative_coefficients()


def _structural_checks(poly: LaurentPoly, degree: int) -> Dict[str, bool]:
    return {
        "nonnegative": poly.has_nonnegative_coefficients(),
        "constant_term_one": poly.coefficient(0) == 1,
        "palindromic": is_palindromic(poly, degree),
    }


# --------------------------------------------------------------------------- #
# Schubert
# --------------------------------------------------------------------------- #
def schubert_data(max_l: int) -> Iterator[SchubertDatum]:
    """Valid data with l ≤ max_l in lexicographic (l, j, k, i) order."""
    for l in range(1, max_l + 1):  # noqa: E741
        for j in range(0, l + 1):
            for k in range(0, l + 1):
                for i in range(0, min(j, k) + 1):
                    d = SchubertDatum(i, j, k, l)
                    if not validate(d):
                        yield d


def schubert_row(d: SchubertDatum) -> Row:
    row: Row = {"i": d.i, "j": d.j, "k": d.k, "l": d.l, "error": ""}
    try:
        result = ih(d)
        inv = result.invariants
        h_res = h_resolution(d)
        small = is_small_pi(d)
        checks = _structural_checks(result.polynomial, 2 * inv.n)
        if small:
            checks["small_equals_resolution"] = result.polynomial == h_res
        else:
            checks["bounded_by_resolution"] = _coefficientwise_le(result.polynomial, h_res)
        row.update(
            case=inv.case_tag.value,
            n=inv.n,
            m=inv.m,
            p=inv.p,
            q=inv.q,
            pi_small=small,
            routes=",".join(result.routes),
            ih=str(result.polynomial),
            **checks,
        )
        row["passed"] = all(checks.values())
    except CheckFailure as exc:
        logger.error("Schubert sweep failure at %s: %s", d, exc)
        row.update(passed=False, error=f"{type(exc).__name__}: {exc}")
    return row


def sweep_schubert(max_l: int, max_workers: int = 1, show_progress: bool = False) -> SweepResult:
    items = list(schubert_data(max_l))
    rows = run_rows(schubert_row, items, max_workers, show_progress, desc="Schubert")
    return SweepResult("schubert", rows)


# --------------------------------------------------------------------------- #
# Hypersurfaces
# --------------------------------------------------------------------------- #
def hypersurface_row(degrees: Sequence[int]) -> Row:
    d = blowup5.HypersurfaceDatum(*degrees)
    row: Row = {
        "d1": d.d1,
        "d2": d.d2,
        "d3": d.d3,
        "d4": d.d4,
        "x": d.x,
        "delta": d.delta,
        "genus": d.genus,
        "error": "",
    }
    try:
        c4_ring = blowup5.c4_intersection_ring(d)
        c4_closed = blowup5.c4_closed_form(d)
        poly = blowup5.ih_hypersurface(d)
        checks = _structural_checks(poly, 8)
        checks["c4_closed_form"] = c4_ring == c4_closed
        checks["euler_equals_c4"] = blowup5.euler_characteristic(d) == c4_ring
        checks.update(blowup5.divisor_class_checks(d.x))
        row.update(c4_ring=c4_ring, c4_closed=c4_closed, ih=str(poly), **checks)
        row["passed"] = all(checks.values())
    except CheckFailure as exc:
        logger.error("Hypersurface sweep failure at %s: %s", d.as_tuple(), exc)
        row.update(passed=False, error=f"{type(exc).__name__}: {exc}")
    return row


def sweep_hypersurface(max_d: int, max_workers: int = 1, show_progress: bool = False) -> SweepResult:
    items = [d.as_tuple() for d in blowup5.valid_degree_vectors(max_d)]
    rows = run_rows(hypersurface_row, items, max_workers, show_progress, desc="Hypersurfaces")
    return SweepResult("hypersurface", rows)


# --------------------------------------------------------------------------- #
# Generic engine
# --------------------------------------------------------------------------- #
def _random_palindrome(rng: random.Random, degree: int, high: int = 4) -> LaurentPoly:
    """Random palindromic polynomial of ``degree`` with constant term ≥ 1."""
    coeffs: Dict[int, int] = {}
    for alpha in range(0, degree // 2 + 1):
        value = rng.randint(1 if alpha == 0 else 0, high)
        coeffs[alpha] = value
        coeffs[degree - alpha] = value
    return LaurentPoly(coeffs)


def random_two_strata_data(
    rng: random.Random, max_p: int = 8, max_q: int = 8, max_m: int = 3
) -> TwoStrataData:
    """A valid instance: palindromic fiber and H_Δ, H_X̃ = (random IH) + H_Δ·g."""
    p = rng.randint(0, max_p)
    q = rng.randint(1, max_q)
    m = rng.randint(0, max_m)
    n = m + p + q
    half = [rng.randint(1, 5)] + [rng.randint(0, 5) for _ in range(p)]
    dims = tuple(half + half[-2::-1])
    fiber = BettiVector(dims, p)
    h_delta = _random_palindrome(rng, 2 * m)
    partial_data = TwoStrataData(n, m, p, q, fiber, LaurentPoly.one(), h_delta)
    h_res = _random_palindrome(rng, 2 * n) + h_delta * g_poly(partial_data)
    return TwoStrataData(n, m, p, q, fiber, h_res, h_delta)


def engine_row(seed: int, index: int) -> Row:
    rng = random.Random(seed * 1_000_003 + index)
    data = random_two_strata_data(rng)
    row: Row = {"sample": index, "n": data.n, "m": data.m, "p": data.p, "q": data.q, "error": ""}
    try:
        g = g_poly(data)
        f = f_poly(data)
        report = decomposition_report(data)
        checks = {
            "f_equals_h_delta_g": f == data.h_delta * g,
            "g_integral": g.is_integral(),
            "g_symmetric": reciprocal(g, 2 * data.p + 2 * data.q) == g,
            "g_support": g.support_within(2 * data.q, 2 * data.p),
            "ih_restates_resolution": ih_poly(data) + data.h_delta * g == data.h_resolution,
            "report_symmetric": report.is_symmetric(),
            "report_reproduces_f": report.shift_polynomial(data.n) * data.h_delta == f,
            "stalks_match_fiber": not stalk_mismatches(data),
        }
        row.update(g=str(g), **checks)
        row["passed"] = all(checks.values())
    except CheckFailure as exc:
        logger.error("Engine sweep failure at sample %d: %s", index, exc)
        row.update(passed=False, error=f"{type(exc).__name__}: {exc}")
    return row


def sweep_engine(
    samples: int, seed: int = 0, max_workers: int = 1, show_progress: bool = False
) -> SweepResult:
    rows = run_rows(partial(engine_row, seed), list(range(samples)), max_workers, show_progress, desc="Engine")
    return SweepResult("engine", rows)
