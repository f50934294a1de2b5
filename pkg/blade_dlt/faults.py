# SPDX-FileCopyrightText: 2026 Blade-DLT contributors.
# SPDX-License-Identifier: MIT

"""Delay and pin fault injection.

A bundled-data circuit is faulty if the data path becomes slower or the
delay lines become faster than specified. Delay faults scale or offset a
single Δ or δ line. Pin faults hold a primary output at zero, e.g. a
broken OR tree on ``Error1``.

Faults are written on the command line as ``KIND:TARGET:OP:VALUE``::

    delta_small:1:scale:1.2
    delta_big:2:offset:-10
    pin:Error1:stuck:0
"""

import enum
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .errors import FaultError
from .sim import PIN_SIGNALS


class LineKind(enum.Enum):
    """The two delay lines of a stage."""

    DELTA_BIG = "delta_big"
    DELTA_SMALL = "delta_small"


class FaultOp(enum.Enum):
    """Fault operations."""

    SCALE = "scale"
    OFFSET = "offset"
    STUCK = "stuck"


@dataclass(frozen=True)
class FaultSpec:
    """A single fault on a delay line or primary pin."""

    target: Union[LineKind, str]
    index: Union[int, str]
    op: FaultOp
    value: Fraction = Fraction(0)

    @property
    def is_pin_fault(self):
        """True for stuck pins."""
        return self.op is FaultOp.STUCK

    @classmethod
    def scale(cls, line, index, factor):
        """Multiply one delay line by ``factor``."""
        return cls(LineKind(line), index, FaultOp.SCALE, Fraction(str(factor)))

    @classmethod
    def offset(cls, line, index, picoseconds):
        """Add a signed offset to one delay line."""
        return cls(LineKind(line), index, FaultOp.OFFSET, Fraction(int(picoseconds)))

    @classmethod
    def stuck(cls, pin):
        """Hold primary output ``pin`` at zero."""
        return cls.parse(f"pin:{pin}:stuck:0")

    @classmethod
    def parse(cls, text):
        """Parse ``KIND:TARGET:OP:VALUE``."""
        parts = text.split(":")
        if len(parts) != 4:
            raise FaultError(f"Fault {text!r} is not KIND:TARGET:OP:VALUE.")
        kind, target, op, value = parts
        try:
            op = FaultOp(op)
        except ValueError:
            raise FaultError(f"Unknown fault operation {op!r}.") from None

        if kind == "pin":
            if op is not FaultOp.STUCK or value != "0":
                raise FaultError("Pin faults must be written as pin:NAME:stuck:0.")
            if target not in PIN_SIGNALS or target == "Lreq":
                raise FaultError(f"Pin {target!r} cannot be stuck.")
            return cls("pin", target, op)

        try:
            line = LineKind(kind)
        except ValueError:
            raise FaultError(f"Unknown delay line kind {kind!r}.") from None
        if op is FaultOp.STUCK:
            raise FaultError("Delay lines take scale or offset faults.")
        try:
            index = int(target)
            amount = Fraction(value)
        except (ValueError, ZeroDivisionError):
            raise FaultError(f"Fault {text!r} has a malformed number.") from None
        if op is FaultOp.OFFSET and amount.denominator != 1:
            raise FaultError("Offsets are integer picoseconds.")
        return cls(line, index, op, amount)

    def __str__(self):
        """Render back to the command line syntax."""
        kind = "pin" if self.is_pin_fault else self.target.value
        value = "0" if self.is_pin_fault else str(self.value)
        return f"{kind}:{self.index}:{self.op.value}:{value}"


def _faulty_delay(delay, fault):
    if fault.op is FaultOp.SCALE:
        # round half up
        return math.floor(delay * fault.value + Fraction(1, 2))
    return delay + int(fault.value)


def inject_fault(pipeline, fault):
    """Return a copy of ``pipeline`` with a delay ``fault`` applied."""
    if fault.is_pin_fault:
        raise FaultError("Pin faults apply to a device, not to the pipeline.")
    if not 0 <= fault.index < pipeline.n:
        raise FaultError(
            f"Stage index {fault.index} out of range for {pipeline.n} stages."
        )
    stage = pipeline.stages[fault.index]
    field = fault.target.value
    delay = _faulty_delay(getattr(stage, field), fault)
    if delay <= 0:
        raise FaultError(
            f"Fault {fault} leaves {field}[{fault.index}] at {delay} ps; "
            f"delays must stay positive."
        )
    return pipeline.replace_stage(fault.index, **{field: delay})


def apply_faults(pipeline, faults):
    """Apply all delay faults and collect the stuck pins."""
    stuck = []
    for fault in faults:
        if fault.is_pin_fault:
            stuck.append(fault.index)
        else:
            pipeline = inject_fault(pipeline, fault)
    return pipeline, frozenset(stuck)
