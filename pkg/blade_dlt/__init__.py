# SPDX-FileCopyrightText: 2026 Blade-DLT contributors.
# SPDX-License-Identifier: MIT

"""Offline delay-line test of Blade asynchronous pipelines.

A Blade pipeline stage has two delay lines: δ, the matched delay of the
request sent to the next stage, and Δ, the timing window during which
late data is detected. This package measures both from the primary pins
of a pipeline model, the way a tester would after scan insertion.

Library usage
~~~~~~~~~~~~~

    >>> from blade_dlt.model import PipelineSpec
    >>> from blade_dlt.device import Device
    >>> from blade_dlt.orchestrator import extract_all
    >>> pipeline = PipelineSpec.from_delays((100, 150, 120), (60, 70, 50))
    >>> report = extract_all(Device(pipeline))
    >>> report.delta_big_hat, report.delta_small_hat
    ((60, 70, 50), (100, 150, 120))

Flask integration
~~~~~~~~~~~~~~~~~

    >>> from flask import Flask
    >>> from blade_dlt import BladeDLT
    >>> app = Flask('myapp')
    >>> ext = BladeDLT(app)

The extension applies the ``BLADE_DLT_*`` defaults of
:mod:`blade_dlt.config` and installs the ``blade`` command group:

 * ``validate`` - Check a pipeline configuration.
 * ``extract`` - Run the test procedure and write a JSON report.
 * ``sweep`` - Monte-Carlo study of the tester quantization error.
 * ``area`` - Area overhead of the DfT.

The same commands are available without Flask as ``blade-dlt``.
"""

__version__ = "0.1.0"

from .ext import BladeDLT  # noqa: E402

__all__ = (
    "__version__",
    "BladeDLT",
)
