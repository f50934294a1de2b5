# SPDX-FileCopyrightText: 2026 Blade-DLT contributors.
# SPDX-License-Identifier: MIT

"""External tester accuracy and the error it introduces.

The tester drives ``Lreq`` and samples the response pins on its own
clock, so both stimulus and response timestamps are quantized to its
resolution ``r``. :func:`error_bounds` pushes the per-timestamp error
intervals through the extraction equations with interval arithmetic.
"""

import enum
from dataclasses import dataclass
from fractions import Fraction

from .errors import ValidationError


class Rounding(enum.Enum):
    """How a timestamp is mapped onto the tester grid."""

    NEAREST = "nearest"
    FLOOR = "floor"


@dataclass(frozen=True)
class TesterModel:
    """Timing resolution and rounding of the external tester."""

    resolution: int = 1
    rounding: Rounding = Rounding.NEAREST
    ideal: bool = False

    def __post_init__(self):
        """Check the resolution."""
        object.__setattr__(self, "rounding", Rounding(self.rounding))
        if (
            isinstance(self.resolution, bool)
            or not isinstance(self.resolution, int)
            or self.resolution <= 0
        ):
            raise ValidationError(
                f"Tester resolution must be a positive integer, "
                f"got {self.resolution!r}."
            )

    @classmethod
    def perfect(cls):
        """Tester capturing exact timestamps."""
        return cls(ideal=True)


def quantize(t, tester):
    """Map ``t`` onto the grid of ``tester``.

    ``nearest`` rounds half up to a multiple of the resolution, ``floor``
    takes the largest multiple not above ``t``.
    """
    if tester.ideal:
        return t
    r = tester.resolution
    if tester.rounding is Rounding.FLOOR:
        return (t // r) * r
    return ((2 * t + r) // (2 * r)) * r


@dataclass(frozen=True)
class Interval:
    """Closed interval of picoseconds with exact rational bounds."""

    lo: Fraction
    hi: Fraction

    @classmethod
    def point(cls, value=0):
        """Degenerate interval."""
        return cls(Fraction(value), Fraction(value))

    def __add__(self, other):
        """Sum of two independent errors."""
        return Interval(self.lo + other.lo, self.hi + other.hi)

    def __sub__(self, other):
        """Difference of two independent errors."""
        return Interval(self.lo - other.hi, self.hi - other.lo)

    @property
    def width(self):
        """``hi - lo``."""
        return self.hi - self.lo

    def contains(self, value):
        """True if ``value`` lies inside the interval."""
        return self.lo <= value <= self.hi

    def as_list(self):
        """JSON friendly ``[lo, hi]``."""
        return [float(self.lo), float(self.hi)]


def timestamp_error(tester):
    """Error interval of one quantized timestamp."""
    if tester.ideal:
        return Interval.point()
    r = Fraction(tester.resolution)
    if tester.rounding is Rounding.FLOOR:
        return Interval(-r, Fraction(0))
    return Interval(-r / 2, r / 2)


def quantity_names(n):
    """Names of the reported quantities of an ``n`` stage pipeline."""
    return (
        ["t_sum"]
        + [f"delta_big_{i}" for i in range(n)]
        + [f"delta_small_{i}" for i in range(n)]
    )


def error_bounds(pipeline, tester):
    """Error interval of every reported quantity.

    Measured values are reused downstream exactly as the orchestrator does:
    Step 2 subtracts the measured ``T_Sum`` and Step 3 subtracts the
    measured δ̂ of earlier lines and Δ̂ of the following controller.

    :param pipeline: the :class:`~blade_dlt.model.PipelineSpec` under test.
    :param tester: the :class:`TesterModel`.
    :returns: a dict mapping :func:`quantity_names` to :class:`Interval`.
    """
    n = pipeline.n
    stamp = timestamp_error(tester)
    t_sum = stamp - stamp
    delta_big = [stamp - stamp - t_sum for _ in range(n)]
    delta_small = []
    for i in range(n - 1):
        acc = stamp - stamp
        for earlier in delta_small:
            acc = acc - earlier
        delta_small.append(acc - delta_big[i + 1])
    last = t_sum
    for earlier in delta_small:
        last = last - earlier
    delta_small.append(last)

    bounds = {"t_sum": t_sum}
    bounds.update({f"delta_big_{i}": b for i, b in enumerate(delta_big)})
    bounds.update({f"delta_small_{i}": b for i, b in enumerate(delta_small)})
    return bounds
