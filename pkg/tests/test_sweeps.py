import random

import pytest

from ih_calculator import sweeps
from ih_calculator.schubert import SchubertDatum
from ih_calculator.twostrata import validate


def test_schubert_data_order_and_validity():
    data = list(sweeps.schubert_data(5))
    keys = [(d.l, d.j, d.k, d.i) for d in data]
    assert keys == sorted(keys)
    assert SchubertDatum(1, 2, 2, 3) in data
    assert SchubertDatum(1, 2, 3, 3) not in data


def test_schubert_row():
    row = sweeps.schubert_row(SchubertDatum(1, 2, 2, 3))
    assert row["passed"]
    assert row["routes"] == "f1,f2,f3,generic"
    assert row["ih"] == "1 + t^2 + t^4"
    assert row["pi_small"] is False
    assert row["bounded_by_resolution"]


def test_schubert_sweep():
    result = sweeps.sweep_schubert(5)
    assert result.name == "schubert"
    assert result.size == len(list(sweeps.schubert_data(5)))
    assert result.failures == []


def test_hypersurface_sweep():
    result = sweeps.sweep_hypersurface(3)
    assert result.size == 19
    assert result.failures == []
    first = result.rows[0]
    assert (first["c4_ring"], first["c4_closed"]) == (12, 12)
    assert first["ih"] == "1 + 2*t^2 + 2*t^4 + 2*t^6 + t^8"


def test_random_instances_are_valid():
    rng = random.Random(7)
    for _ in range(50):
        assert validate(sweeps.random_two_strata_data(rng)) == []


def test_engine_sweep_is_deterministic():
    first = sweeps.sweep_engine(40, seed=3)
    second = sweeps.sweep_engine(40, seed=3)
    assert first.rows == second.rows
    assert first.failures == []
    assert [row["sample"] for row in first.rows] == list(range(40))


@pytest.mark.slow
def test_engine_sweep_with_process_pool():
    serial = sweeps.sweep_engine(20, seed=1)
    pooled = sweeps.sweep_engine(20, seed=1, max_workers=2)
    assert pooled.rows == serial.rows
