# SPDX-FileCopyrightText: 2026 Blade-DLT contributors.
# SPDX-License-Identifier: MIT

"""Quantization sweep tests."""

import csv
import io

import pytest

from blade_dlt.errors import ValidationError
from blade_dlt.sweep import CSV_COLUMNS, monte_carlo_sweep, write_sweep_csv
from blade_dlt.tester import Rounding, TesterModel


@pytest.mark.parametrize("rounding", list(Rounding))
@pytest.mark.parametrize("r", [1, 2, 4, 8, 16])
def test_errors_stay_inside_bounds(e3, r, rounding):
    result = monte_carlo_sweep(e3, TesterModel(r, rounding), trials=1000, seed=1)
    assert result.contained
    assert result.resolution == r
    for stats in result.stats:
        assert stats.trials == 1000
        assert stats.bound.contains(stats.min_signed)
        assert stats.bound.contains(stats.max_signed)


def test_unit_resolution_is_exact(e3):
    result = monte_carlo_sweep(e3, TesterModel(1), trials=50)
    assert all(s.max_err == 0 for s in result.stats)


def test_ideal_tester_has_no_error(e3):
    result = monte_carlo_sweep(e3, TesterModel.perfect(), trials=20)
    assert {s.max_err for s in result.stats} == {0}
    assert {s.mean_err for s in result.stats} == {0.0}


def test_coarse_tester_shows_errors(e3):
    result = monte_carlo_sweep(e3, TesterModel(16), trials=200, seed=3)
    assert max(s.max_err for s in result.stats) > 0


def test_seed_is_reproducible(e3):
    first = monte_carlo_sweep(e3, TesterModel(8), trials=100, seed=42)
    second = monte_carlo_sweep(e3, TesterModel(8), trials=100, seed=42)
    assert first == second


def test_workers_do_not_change_the_result(e3):
    single = monte_carlo_sweep(e3, TesterModel(8), trials=40, seed=5)
    pooled = monte_carlo_sweep(e3, TesterModel(8), trials=40, seed=5, workers=2)
    assert single == pooled


def test_trials_must_be_positive(e3):
    with pytest.raises(ValidationError):
        monte_carlo_sweep(e3, TesterModel(8), trials=0)


def test_csv(e3):
    results = [
        monte_carlo_sweep(e3, TesterModel(r), trials=100, seed=0) for r in (1, 2, 4, 8)
    ]
    fp = io.StringIO()
    write_sweep_csv(results, fp)
    rows = list(csv.reader(io.StringIO(fp.getvalue())))
    assert tuple(rows[0]) == CSV_COLUMNS
    assert rows[0][:6] == [
        "quantity",
        "trials",
        "max_err_ps",
        "mean_err_ps",
        "bound_lo_ps",
        "bound_hi_ps",
    ]
    assert len(rows) == 1 + 4 * 7
    first = dict(zip(CSV_COLUMNS, rows[1]))
    assert first["resolution_ps"] == "1"
    assert first["quantity"] == "t_sum"
    assert first["trials"] == "100"
    assert first["bound_lo_ps"] == "-1.0"
    assert first["bound_hi_ps"] == "1.0"
    by_quantity = results[-1].by_quantity()
    assert by_quantity["delta_small_2"].bound.width == 160


def test_step3_errors_on_reference_pipeline(e3):
    # with r=8 the error of every quantity depends only on t0 mod 8; the
    # bounds widen along the chain while the observed errors shrink
    result = monte_carlo_sweep(e3, TesterModel(8), trials=1000, seed=2)
    stats = result.by_quantity()
    assert [stats[f"delta_small_{i}"].max_err for i in range(3)] == [12, 6, 0]
    assert [stats[f"delta_small_{i}"].bound.hi for i in range(3)] == [24, 48, 80]
    assert stats["delta_small_1"].mean_err == pytest.approx(
        stats["delta_small_0"].mean_err / 2
    )
    assert stats["t_sum"].max_err == 6
    assert result.contained
