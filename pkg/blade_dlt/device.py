# SPDX-FileCopyrightText: 2026 Blade-DLT contributors.
# SPDX-License-Identifier: MIT

"""Device under test as seen from the tester.

The tester only reaches the primary pins and the scan chain. A
measurement run is: reset, shift the scan vector in, raise ``Lreq`` and
capture the first transition of each response pin. Every run needs a
fresh reset:

.. code-block:: python

    device = Device(pipeline, tester=TesterModel(resolution=8))
    device.reset()
    device.load_scan(ScanVector.all_err0(pipeline.n))
    capture = device.stimulate(t0=0)
    capture.t_rreq - capture.t_lreq
"""

import logging
from dataclasses import dataclass
from typing import Optional

from .errors import DeviceStateError
from .model import Time
from .parasitics import ParasiticModel
from .scan import ScanVector, scan_load_direct, scan_load_serial
from .sim import SignalId, simulate
from .tester import TesterModel, quantize

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class PinCapture:
    """Tester timestamps of the first rise on every pin, ``None`` if absent."""

    t_lreq: Time
    t_rreq: Optional[Time]
    t_reack: Optional[Time]
    t_error1: Optional[Time]

    def pin(self, name):
        """Timestamp of pin ``name``."""
        return {
            "Lreq": self.t_lreq,
            "Rreq": self.t_rreq,
            "REack": self.t_reack,
            "Error1": self.t_error1,
        }[name]


class Device:
    """A pipeline instance with its parasitics, tester and pin faults."""

    def __init__(self, pipeline, parasitics=None, tester=None, stuck_pins=()):
        """Initialize a device; it still needs a :meth:`reset`."""
        self.pipeline = pipeline
        self.parasitics = (parasitics or ParasiticModel.zero(pipeline.n)).check(
            pipeline.n
        )
        self.tester = tester or TesterModel.perfect()
        self.stuck_pins = frozenset(stuck_pins)
        self._scan = None
        self._trace = None
        self._dirty = True

    @property
    def trace(self):
        """Trace of the last run."""
        return self._trace

    @property
    def scan_state(self):
        """Current SQF contents."""
        return self._scan

    def reset(self):
        """Bring the device into its reset state with all SQFs at ``err0``."""
        n = self.pipeline.n
        self._scan = scan_load_direct(ScanVector.all_err0(n), n)
        self._trace = None
        self._dirty = False

    def load_scan(self, vector, serial=True):
        """Load ``vector`` through the scan chain (or directly)."""
        if not isinstance(vector, ScanVector):
            vector = ScanVector(tuple(vector))
        if serial:
            self._scan = scan_load_serial(vector.shift_sequence(), self.pipeline.n)
        else:
            self._scan = scan_load_direct(vector, self.pipeline.n)

    def _mark_dirty(self):
        """Mark the device as used since the last reset."""
        if self._dirty:
            raise DeviceStateError(
                "The device must be reset before a new measurement run."
            )
        self._dirty = True

    def stimulate(self, t0=0):
        """Raise ``Lreq`` at ``t0`` and capture the response pins."""
        self._mark_dirty()
        trace = simulate(self.pipeline, self._scan, t0, self.parasitics)
        if self.stuck_pins:
            trace = trace.without_pins(self.stuck_pins)
        self._trace = trace

        def captured(name):
            t = trace.first_rise(SignalId.pin(name))
            return None if t is None else quantize(t, self.tester)

        capture = PinCapture(
            t_lreq=quantize(t0, self.tester),
            t_rreq=captured("Rreq"),
            t_reack=captured("REack"),
            t_error1=captured("Error1"),
        )
        logger.debug("Captured %s", capture)
        return capture


def apply_parasitics(pipeline, parasitics, tester=None, stuck_pins=()):
    """Return a device whose timing includes the ``parasitics``."""
    return Device(pipeline, parasitics, tester=tester, stuck_pins=stuck_pins)
