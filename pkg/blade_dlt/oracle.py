# SPDX-FileCopyrightText: 2026 Blade-DLT contributors.
# SPDX-License-Identifier: MIT

"""Closed-form timing of a single token through the pipeline.

This is the analytic reference the event-driven kernel is checked against.
It assumes an empty, freshly reset pipeline, zero-delay gates and
environment, and one request injected on ``Lreq`` at ``t0``.
"""

from dataclasses import dataclass
from typing import Optional, Tuple

from .errors import ScanError
from .model import Time
from .parasitics import ParasiticModel
from .scan import ScanState, scan_load_direct


@dataclass(frozen=True)
class Schedule:
    """Analytic rise times of every traced net."""

    arrival: Tuple[Time, ...]
    clk_rise: Tuple[Time, ...]
    sample_rise: Tuple[Time, ...]
    err_rise: Tuple[Time, ...]
    extension_end: Tuple[Time, ...]
    rreq_out: Time
    reack_out: Time
    error1_rise: Optional[Time]


def closed_form_schedule(pipeline, scan, t0=0, parasitics=None):
    """Compute every rise time for ``scan`` analytically.

    :param pipeline: the :class:`~blade_dlt.model.PipelineSpec`.
    :param scan: a :class:`~blade_dlt.scan.ScanVector` or loaded
        :class:`~blade_dlt.scan.ScanState`.
    :param t0: time of the ``Lreq`` rise.
    :param parasitics: optional :class:`~blade_dlt.parasitics.ParasiticModel`.
    """
    n = pipeline.n
    if not isinstance(scan, ScanState):
        scan = scan_load_direct(scan, n)
    elif len(scan) != n:
        raise ScanError(f"Scan state has {len(scan)} bits, pipeline has {n} SQFs.")
    parasitics = (parasitics or ParasiticModel.zero(n)).check(n)

    arrival = [t0]
    sample_rise = []
    extension_end = []
    for i, stage in enumerate(pipeline.stages):
        extension = stage.delta_big if scan.is_err1(i) else 0
        sample = arrival[i] + stage.delta_big + parasitics.u[i]
        sample_rise.append(sample)
        extension_end.append(sample + extension)
        arrival.append(arrival[i] + stage.delta_small + parasitics.w[i] + extension)

    rreq_out = arrival[n]
    reack_out = max(rreq_out, max(extension_end)) + parasitics.rho
    err1_rises = [sample_rise[i] for i in range(n) if scan.is_err1(i)]
    error1_rise = min(err1_rises) + parasitics.v if err1_rises else None

    return Schedule(
        arrival=tuple(arrival),
        clk_rise=tuple(arrival[:n]),
        sample_rise=tuple(sample_rise),
        err_rise=tuple(sample_rise),
        extension_end=tuple(extension_end),
        rreq_out=rreq_out,
        reack_out=reack_out,
        error1_rise=error1_rise,
    )
