# SPDX-FileCopyrightText: 2026 Blade-DLT contributors.
# SPDX-License-Identifier: MIT

"""Value change dump of event traces.

Output is byte-stable: the ``$date`` and ``$version`` header fields are
fixed strings. Pins sit in the top ``pipeline`` scope, internal nets in
one scope per controller named after the stage. Every net starts at 0 and
each event is one change record, events at the first timestamp included.
"""

import io
import logging
import os

from vcd import VCDWriter

from .orchestrator import MeasurementHook
from .sim import PIN_SIGNALS, STAGE_SIGNALS, Edge, SignalId

logger = logging.getLogger(__name__)

VCD_TIMESCALE = "1 ps"
VCD_DATE = "1970-01-01"
VCD_VERSION = "blade-dlt"
TOP_SCOPE = "pipeline"


def _register(writer, pipeline):
    variables = {}
    for name in PIN_SIGNALS:
        variables[SignalId.pin(name)] = writer.register_var(
            TOP_SCOPE, name, "wire", size=1, init=0
        )
    for i, stage in enumerate(pipeline.stages):
        scope = f"{TOP_SCOPE}.{stage.name}"
        for name in STAGE_SIGNALS:
            variables[SignalId.net(i, name)] = writer.register_var(
                scope, name, "wire", size=1, init=0
            )
    return variables


def emit_vcd(trace, pipeline):
    """Render ``trace`` of ``pipeline`` as VCD text and return the bytes."""
    buffer = io.StringIO()
    with VCDWriter(
        buffer, timescale=VCD_TIMESCALE, date=VCD_DATE, version=VCD_VERSION
    ) as writer:
        variables = _register(writer, pipeline)
        # header and all-zero $dumpvars go out before the first change
        writer.flush()
        for event in trace:
            value = 1 if event.edge is Edge.RISE else 0
            writer.change(variables[event.signal], event.time, value)
    return buffer.getvalue().encode("ascii")


def write_vcd(path, trace, pipeline):
    """Write the dump of ``trace`` to ``path``."""
    data = emit_vcd(trace, pipeline)
    with open(path, "wb") as fp:
        fp.write(data)
    logger.debug("Wrote %d bytes of VCD to %s", len(data), path)
    return path


class VcdDumpHook(MeasurementHook):
    """Dump one VCD file per measurement run into a directory.

    Files are named ``step1.vcd``, ``step2_<i>.vcd`` and ``step3_<i>.vcd``.
    """

    def __init__(self, directory, pipeline):
        """Initialize the hook."""
        self.directory = directory
        self.pipeline = pipeline
        self.written = []

    def on_measurement(self, measurement, trace):
        """Dump the trace of ``measurement``."""
        os.makedirs(self.directory, exist_ok=True)
        path = os.path.join(self.directory, f"{measurement.label}.vcd")
        self.written.append(write_vcd(path, trace, self.pipeline))
