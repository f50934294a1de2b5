# SPDX-FileCopyrightText: 2026 Blade-DLT contributors.
# SPDX-License-Identifier: MIT

"""Closed-form schedule tests."""

import pytest
from hypothesis import given
from hypothesis import strategies as st
from strategies import any_pipelines, scan_vectors

from blade_dlt.errors import ScanError
from blade_dlt.oracle import closed_form_schedule
from blade_dlt.parasitics import ParasiticModel
from blade_dlt.scan import ScanVector


def test_all_err0(e3):
    schedule = closed_form_schedule(e3, ScanVector.all_err0(3))
    assert schedule.arrival == (0, 100, 250, 370)
    assert schedule.sample_rise == (60, 170, 300)
    assert schedule.rreq_out == 370
    assert schedule.reack_out == 370
    assert schedule.error1_rise is None


@pytest.mark.parametrize(
    "index,reack,error1",
    [(0, 430, 60), (1, 440, 170), (2, 420, 300)],
)
def test_single_err1(e3, index, reack, error1):
    schedule = closed_form_schedule(e3, ScanVector.single_err1(3, index))
    assert schedule.reack_out == reack
    assert schedule.error1_rise == error1


def test_extension_delays_the_token(e3):
    schedule = closed_form_schedule(e3, ScanVector.single_err1(3, 0))
    assert schedule.arrival == (0, 160, 310, 430)
    assert schedule.sample_rise == (60, 230, 360)
    assert schedule.extension_end == (120, 230, 360)


def test_extension_dominates_reack_when_delta_is_long(e3):
    broken = e3.replace_stage(2, delta_big=500)
    schedule = closed_form_schedule(broken, ScanVector.single_err1(3, 2))
    assert schedule.rreq_out == 870
    assert schedule.reack_out == 1250


def test_t0_shifts_everything(e3):
    base = closed_form_schedule(e3, ScanVector.single_err1(3, 1))
    shifted = closed_form_schedule(e3, ScanVector.single_err1(3, 1), t0=1000)
    assert shifted.rreq_out - base.rreq_out == 1000
    assert shifted.error1_rise - base.error1_rise == 1000
    assert [b + 1000 for b in base.clk_rise] == list(shifted.clk_rise)


def test_parasitics(e3):
    parasitics = ParasiticModel((1, 2, 3), (4, 5, 6), v=7, rho=8)
    schedule = closed_form_schedule(
        e3, ScanVector.all_err0(3), parasitics=parasitics
    )
    assert schedule.arrival == (0, 101, 253, 376)
    assert schedule.sample_rise == (64, 176, 309)
    assert schedule.reack_out == 384

    schedule = closed_form_schedule(
        e3, ScanVector.single_err1(3, 1), parasitics=parasitics
    )
    assert schedule.error1_rise == 176 + 7


def test_scan_length_mismatch(e3):
    with pytest.raises(ScanError):
        closed_form_schedule(e3, ScanVector.all_err0(4))


def _fields(schedule):
    return (
        schedule.arrival
        + schedule.sample_rise
        + schedule.extension_end
        + (schedule.rreq_out, schedule.reack_out, schedule.error1_rise or 0)
    )


@given(st.data())
def test_slower_lines_never_advance_events(data):
    pipeline = data.draw(any_pipelines())
    scan = data.draw(scan_vectors(pipeline.n))
    i = data.draw(st.integers(0, pipeline.n - 1))
    line = data.draw(st.sampled_from(("delta_big", "delta_small")))
    extra = data.draw(st.integers(1, 1000))
    slower = pipeline.replace_stage(
        i, **{line: getattr(pipeline.stages[i], line) + extra}
    )

    before = _fields(closed_form_schedule(pipeline, scan))
    after = _fields(closed_form_schedule(slower, scan))
    assert all(b <= a for b, a in zip(before, after))
