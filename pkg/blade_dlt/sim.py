# SPDX-FileCopyrightText: 2026 Blade-DLT contributors.
# SPDX-License-Identifier: MIT

"""Discrete-event simulation of a Blade pipeline.

Controllers are state machines, delay lines are scheduled events. A run
injects one request on ``Lreq`` into an empty pipeline and ends when the
event queue is empty. Only rising edges are produced.

Simultaneous events are taken in (stage index, pins last, insertion order).
The outcome does not depend on that order, which can be flipped with
``reverse_ties`` to check it.
"""

import enum
import heapq
import itertools
import logging
from dataclasses import dataclass
from typing import Optional

from .model import Time
from .parasitics import ParasiticModel
from .scan import ScanState, scan_load_direct

logger = logging.getLogger(__name__)

PIN_SIGNALS = ("Lreq", "Rreq", "REack", "Error1")
"""Primary pins observed by the tester."""

STAGE_SIGNALS = ("CLK", "Sample", "err0", "err1")
"""Internal nets of each controller."""


class Edge(enum.Enum):
    """Signal transition."""

    RISE = "rise"
    FALL = "fall"


@dataclass(frozen=True)
class SignalId:
    """A pin (``stage is None``) or a per-stage net."""

    name: str
    stage: Optional[int] = None

    def __post_init__(self):
        """Check the name against the scope."""
        names = PIN_SIGNALS if self.stage is None else STAGE_SIGNALS
        if self.name not in names:
            raise ValueError(f"Unknown signal {self.name!r} for scope {self.stage}.")

    @classmethod
    def pin(cls, name):
        """Primary pin ``name``."""
        return cls(name)

    @classmethod
    def net(cls, stage, name):
        """Net ``name`` of controller ``stage``."""
        return cls(name, stage)

    @property
    def is_pin(self):
        """True for primary pins."""
        return self.stage is None

    def order(self, n):
        """Sort key inside a time step; pins sort after all stages."""
        if self.is_pin:
            return (n, PIN_SIGNALS.index(self.name))
        return (self.stage, STAGE_SIGNALS.index(self.name))

    def __str__(self):
        """Pin name, or ``<stage>.<net>`` for internal nets."""
        return self.name if self.is_pin else f"{self.stage}.{self.name}"


@dataclass(frozen=True)
class Event:
    """One recorded transition."""

    time: Time
    signal: SignalId
    edge: Edge
    seq: int


class EventTrace:
    """Time-ordered, immutable record of signal edges."""

    def __init__(self, events, n):
        """Sort ``events`` of an ``n`` stage pipeline."""
        self._n = n
        self._events = tuple(
            sorted(events, key=lambda e: (e.time, e.signal.order(n), e.seq))
        )

    @property
    def n(self):
        """Number of stages of the simulated pipeline."""
        return self._n

    @property
    def events(self):
        """Sorted events."""
        return self._events

    def __iter__(self):
        """Iterate in time order."""
        return iter(self._events)

    def __len__(self):
        """Number of events."""
        return len(self._events)

    def __eq__(self, other):
        """Traces are equal when their events are."""
        if not isinstance(other, EventTrace):
            return NotImplemented
        return self._n == other._n and self._events == other._events

    __hash__ = None

    def rises(self, signal):
        """All rise times of ``signal``."""
        return [
            e.time for e in self._events if e.signal == signal and e.edge is Edge.RISE
        ]

    def first_rise(self, signal):
        """Earliest rise of ``signal`` or ``None``."""
        for event in self._events:
            if event.signal == signal and event.edge is Edge.RISE:
                return event.time
        return None

    def high_phase(self, stage):
        """Distance from ``CLK`` to ``Sample`` of ``stage``."""
        clk = self.first_rise(SignalId.net(stage, "CLK"))
        sample = self.first_rise(SignalId.net(stage, "Sample"))
        if clk is None or sample is None:
            return None
        return sample - clk

    def without_pins(self, names):
        """Copy of the trace with the given pins never transitioning."""
        names = set(names)
        kept = (
            e
            for e in self._events
            if not (e.signal.is_pin and e.signal.name in names)
        )
        return EventTrace(kept, self._n)


def first_rise(trace, signal):
    """Return the earliest rise of ``signal`` in ``trace``, or ``None``."""
    if isinstance(signal, str):
        signal = SignalId.pin(signal)
    return trace.first_rise(signal)


class ControllerState(enum.Enum):
    """Phases of a Blade controller handling one token."""

    IDLE = "idle"
    CLK_HIGH = "clk_high"
    EXTENDING = "extending"
    RESOLVED = "resolved"


_TRANSITIONS = {
    ControllerState.IDLE: {ControllerState.CLK_HIGH},
    ControllerState.CLK_HIGH: {ControllerState.EXTENDING, ControllerState.RESOLVED},
    ControllerState.EXTENDING: {ControllerState.RESOLVED},
    ControllerState.RESOLVED: set(),
}


class Controller:
    """Blade controller ``Ci`` with its SQF, Δ and outgoing δ."""

    def __init__(self, index, stage, forced_err1, forward_overhead, sample_overhead):
        """Initialize an idle controller."""
        self.index = index
        self.stage = stage
        self.forced_err1 = forced_err1
        self.forward_overhead = forward_overhead
        self.sample_overhead = sample_overhead
        self.state = ControllerState.IDLE

    def move(self, state):
        """Enter ``state``."""
        if state not in _TRANSITIONS[self.state]:
            raise RuntimeError(
                f"Controller {self.index}: illegal transition "
                f"{self.state.value} -> {state.value}."
            )
        self.state = state


class Simulator:
    """Event-driven kernel for one measurement run."""

    def __init__(self, pipeline, scan, parasitics=None, reverse_ties=False):
        """Build controllers from ``pipeline`` and a loaded ``scan`` state."""
        n = pipeline.n
        if not isinstance(scan, ScanState):
            scan = scan_load_direct(scan, n)
        self.pipeline = pipeline
        self.parasitics = (parasitics or ParasiticModel.zero(n)).check(n)
        self.reverse_ties = reverse_ties
        self.controllers = [
            Controller(
                i,
                stage,
                scan.is_err1(i),
                self.parasitics.w[i],
                self.parasitics.u[i],
            )
            for i, stage in enumerate(pipeline.stages)
        ]
        self.now = 0
        self._queue = []
        self._queue_seq = itertools.count()
        self._trace_seq = itertools.count()
        self._events = []
        self._output_done = False
        self._error1_pending = False
        self._reack_pending = False

    #
    # Kernel
    #
    def schedule(self, time, scope, action, *args):
        """Queue ``action(*args)`` at ``time`` for a stage or ``None`` (pins)."""
        rank = self.pipeline.n if scope is None else scope
        if self.reverse_ties:
            rank = -rank
        heapq.heappush(self._queue, (time, rank, next(self._queue_seq), action, args))

    def record(self, signal):
        """Trace a rising edge of ``signal`` at the current time."""
        self._events.append(Event(self.now, signal, Edge.RISE, next(self._trace_seq)))

    def run(self, t0=0):
        """Inject a request at ``t0`` and simulate until quiescence."""
        self.schedule(t0, None, self._lreq)
        processed = 0
        while self._queue:
            time, _rank, _seq, action, args = heapq.heappop(self._queue)
            self.now = time
            action(*args)
            processed += 1
        logger.debug("Quiescent after %d actions at t=%d", processed, self.now)
        return EventTrace(self._events, self.pipeline.n)

    #
    # Pipeline behaviour
    #
    def _lreq(self):
        self.record(SignalId.pin("Lreq"))
        # the left channel is forwarded straight to C0
        self._request_arrives(0)

    def _request_arrives(self, i):
        ctrl = self.controllers[i]
        ctrl.move(ControllerState.CLK_HIGH)
        self.record(SignalId.net(i, "CLK"))
        self.schedule(
            self.now + ctrl.stage.delta_big + ctrl.sample_overhead, i, self._sample, i
        )
        self.schedule(
            self.now + ctrl.stage.delta_small + ctrl.forward_overhead,
            i,
            self._delta_small_done,
            i,
        )

    def _sample(self, i):
        ctrl = self.controllers[i]
        self.record(SignalId.net(i, "Sample"))
        if ctrl.forced_err1:
            self.record(SignalId.net(i, "err1"))
            ctrl.move(ControllerState.EXTENDING)
            self.schedule(self.now + ctrl.stage.delta_big, i, self._extension_end, i)
            if not self._error1_pending:
                self._error1_pending = True
                self.schedule(self.now + self.parasitics.v, None, self._error1)
        else:
            self.record(SignalId.net(i, "err0"))
            ctrl.move(ControllerState.RESOLVED)
            self._check_reack()

    def _extension_end(self, i):
        self.controllers[i].move(ControllerState.RESOLVED)
        self._check_reack()

    def _delta_small_done(self, i):
        ctrl = self.controllers[i]
        if ctrl.forced_err1:
            # the extension phase holds the request for another Δ
            self.schedule(self.now + ctrl.stage.delta_big, i, self._forward, i)
        else:
            self._forward(i)

    def _forward(self, i):
        if i + 1 < self.pipeline.n:
            self.schedule(self.now, i + 1, self._request_arrives, i + 1)
        else:
            self.record(SignalId.pin("Rreq"))
            self._output_done = True
            self._check_reack()

    def _check_reack(self):
        if self._reack_pending or not self._output_done:
            return
        if all(c.state is ControllerState.RESOLVED for c in self.controllers):
            self._reack_pending = True
            self.schedule(self.now + self.parasitics.rho, None, self._reack)

    def _reack(self):
        self.record(SignalId.pin("REack"))

    def _error1(self):
        self.record(SignalId.pin("Error1"))


def simulate(pipeline, scan, t0=0, parasitics=None, reverse_ties=False):
    """Simulate one request through ``pipeline`` with the SQFs set to ``scan``."""
    return Simulator(pipeline, scan, parasitics, reverse_ties=reverse_ties).run(t0)
