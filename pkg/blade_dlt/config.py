# SPDX-FileCopyrightText: 2026 Blade-DLT contributors.
# SPDX-License-Identifier: MIT

"""Default configuration for Blade-DLT.

Values are read from the Flask application config when the library runs
inside an application context (see :class:`blade_dlt.ext.BladeDLT`),
otherwise from this module.
"""

from flask import current_app, has_app_context

BLADE_DLT_TOLERANCE_PCT = 5.0
"""Symmetric verdict tolerance around nominal delays, in percent."""

BLADE_DLT_TESTER_RESOLUTION_PS = 1
"""Timing resolution of the external tester in picoseconds."""

BLADE_DLT_TESTER_ROUNDING = "nearest"
"""Tester rounding mode, ``nearest`` (half up) or ``floor``."""

BLADE_DLT_TESTER_IDEAL = True
"""When true, pin timestamps are captured exactly.

Only used when a config file names no tester resolution: a file giving
``resolution_ps`` without ``ideal`` gets a quantizing tester.
"""

BLADE_DLT_T0_PS = 0
"""Time of the ``Lreq`` stimulus used by the orchestrator."""

BLADE_DLT_SEED = 0
"""Seed for randomized sweeps. The ``BLADE_DLT_SEED`` env var wins over it."""

BLADE_DLT_SWEEP_WORKERS = 1
"""Number of worker processes used by Monte-Carlo sweeps."""

BLADE_DLT_CELL_LIBRARY = {
    "a_control": 27.0,
    "a_qflop": 7.0,
    "a_sqf": 10.0,
    "a_nin_or": 2.6,
    "t_qflop": 28,
    "t_sqf": 40,
    "sqf_per_32bit_stage": 4,
}
"""28 nm cell areas (µm²) and transistor counts used by the area model."""


def get_setting(key):
    """Return a setting from the current app config or the module defaults."""
    if has_app_context():
        return current_app.config.get(key, globals()[key])
    return globals()[key]
