# SPDX-FileCopyrightText: 2026 Blade-DLT contributors.
# SPDX-License-Identifier: MIT

"""Area overhead of the delay-line DfT.

Without DfT each stage has a controller and a Q-Flop. With DfT the
Q-Flop becomes a scan Q-Flop (SQF) and one N-input OR gate drives the
``Error1`` pin::

    with    = n * (a_control + a_sqf) + a_nin_or
    without = n * (a_control + a_qflop)

Delay line area is design dependent and not counted.
"""

from dataclasses import asdict, dataclass, fields
from fractions import Fraction

from .config import get_setting
from .errors import ValidationError

OR_REFERENCE_INPUTS = 3
"""Input count the default OR gate area refers to."""


@dataclass(frozen=True)
class CellLibrary:
    """Cell areas in µm² and transistor counts (28 nm defaults)."""

    a_control: float = 27.0
    a_qflop: float = 7.0
    a_sqf: float = 10.0
    a_nin_or: float = 2.6
    t_qflop: int = 28
    t_sqf: int = 40
    sqf_per_32bit_stage: int = 4
    or_scaling: str = "constant"

    def __post_init__(self):
        """Check that every figure is positive."""
        for f in fields(self):
            value = getattr(self, f.name)
            if f.name == "or_scaling":
                if value not in ("constant", "linear"):
                    raise ValidationError(
                        f"or_scaling must be 'constant' or 'linear', got {value!r}."
                    )
            elif value <= 0:
                raise ValidationError(f"{f.name} must be positive, got {value}.")

    @classmethod
    def from_config(cls, **overrides):
        """Library from ``BLADE_DLT_CELL_LIBRARY`` with ``overrides`` applied."""
        values = dict(get_setting("BLADE_DLT_CELL_LIBRARY"))
        values.update(overrides)
        defaults = {f.name: f.default for f in fields(cls)}
        unknown = set(values) - set(defaults)
        if unknown:
            raise ValidationError(f"Unknown cell library keys: {sorted(unknown)}.")
        for key, value in values.items():
            # overrides given as text on the command line
            if isinstance(value, str) and key != "or_scaling":
                try:
                    values[key] = type(defaults[key])(value)
                except ValueError:
                    raise ValidationError(f"Bad value {value!r} for {key}.") from None
        return cls(**values)

    def or_area(self, n):
        """Area of the OR gate collecting ``n`` err1 signals."""
        if self.or_scaling == "linear":
            return self.a_nin_or * n / OR_REFERENCE_INPUTS
        return self.a_nin_or

    def to_dict(self):
        """Plain dict of the library."""
        return asdict(self)


@dataclass(frozen=True)
class AreaReport:
    """Area with and without the DfT."""

    n: int
    area_with_test: float
    area_without_test: float
    overhead: float

    def to_dict(self):
        """JSON friendly dict, values rounded for display."""
        return {
            "n": self.n,
            "area_with_test": round(self.area_with_test, 4),
            "area_without_test": round(self.area_without_test, 4),
            "overhead": round(self.overhead, 2),
        }


@dataclass(frozen=True)
class DftCost:
    """Scan elements added by the DfT and the extra transistors."""

    sqf_count: int
    transistor_delta: int


def area_report(n, lib=None):
    """Area of an ``n`` stage pipeline with and without DfT."""
    if n < 1:
        raise ValidationError(f"Area needs at least one stage, got {n}.")
    lib = lib or CellLibrary()
    with_test = n * (lib.a_control + lib.a_sqf) + lib.or_area(n)
    without_test = n * (lib.a_control + lib.a_qflop)
    overhead = (with_test - without_test) / without_test * 100
    return AreaReport(n, with_test, without_test, overhead)


def dft_cost(n, bits_per_stage=32, lib=None):
    """SQF count and transistor delta for ``n`` stages of ``bits_per_stage``."""
    if n < 1:
        raise ValidationError(f"DfT cost needs at least one stage, got {n}.")
    if bits_per_stage <= 0 or bits_per_stage % 8:
        raise ValidationError(
            f"Data width must be a positive multiple of 8, got {bits_per_stage}."
        )
    lib = lib or CellLibrary()
    per_stage = Fraction(bits_per_stage, 32) * lib.sqf_per_32bit_stage
    if per_stage.denominator != 1:
        raise ValidationError(
            f"{bits_per_stage}-bit stages need a fractional number of SQFs."
        )
    sqf_count = n * int(per_stage)
    return DftCost(sqf_count, sqf_count * (lib.t_sqf - lib.t_qflop))
