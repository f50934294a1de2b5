# SPDX-FileCopyrightText: 2026 Blade-DLT contributors.
# SPDX-License-Identifier: MIT

"""Domain types of the Blade pipeline under test.

All times are integer picoseconds. Stage ``i`` owns two delay lines:
``delta_big`` (Δ, the CLK high phase of controller ``Ci``) and
``delta_small`` (δ, the request-forwarding path from ``Ci`` to ``Ci+1``,
matched to the combinational logic between the two stages).
"""

import logging
import re
from dataclasses import dataclass, field
from typing import Tuple

from .errors import ValidationError

logger = logging.getLogger(__name__)

Time = int
"""Integer picoseconds. No floating point is used on the simulation path."""

STAGE_NAME = re.compile(r"[A-Za-z_][A-Za-z0-9_]*\Z")
"""Stage names double as waveform scope names."""


@dataclass(frozen=True)
class StageSpec:
    """One Blade controller with its Δ and the δ delay line that follows it."""

    name: str
    delta_big: Time
    delta_small: Time


@dataclass(frozen=True)
class PipelineSpec:
    """Linear Blade pipeline of ``n`` stages."""

    stages: Tuple[StageSpec, ...]

    def __post_init__(self):
        """Normalize the stage container and check the structure."""
        object.__setattr__(self, "stages", tuple(self.stages))
        if len(self.stages) < 2:
            raise ValidationError(
                f"A pipeline needs at least 2 stages, got {len(self.stages)}."
            )
        seen = set()
        for stage in self.stages:
            if not isinstance(stage.name, str) or not STAGE_NAME.match(stage.name):
                raise ValidationError(f"Invalid stage name {stage.name!r}.")
            if stage.name in seen:
                raise ValidationError(f"Duplicate stage name {stage.name!r}.")
            seen.add(stage.name)
            for label, value in (
                ("delta_big", stage.delta_big),
                ("delta_small", stage.delta_small),
            ):
                if isinstance(value, bool) or not isinstance(value, int):
                    raise ValidationError(
                        f"Stage {stage.name!r}: {label} must be integer ps, "
                        f"got {value!r}."
                    )
                if value <= 0:
                    raise ValidationError(
                        f"Stage {stage.name!r}: {label} must be positive, "
                        f"got {value}."
                    )

    @classmethod
    def from_delays(cls, delta_small, delta_big, names=None):
        """Build a pipeline from parallel δ and Δ sequences."""
        delta_small = list(delta_small)
        delta_big = list(delta_big)
        if len(delta_small) != len(delta_big):
            raise ValidationError("delta_small and delta_big differ in length.")
        names = list(names) if names else [f"C{i}" for i in range(len(delta_big))]
        return cls(
            tuple(
                StageSpec(name, big, small)
                for name, big, small in zip(names, delta_big, delta_small)
            )
        )

    @property
    def n(self):
        """Number of stages."""
        return len(self.stages)

    @property
    def delta_big(self):
        """Δ of every stage."""
        return tuple(s.delta_big for s in self.stages)

    @property
    def delta_small(self):
        """δ of every stage."""
        return tuple(s.delta_small for s in self.stages)

    def tail_sums(self):
        """Return Σ_{k>=j} δk for every j."""
        tails = []
        acc = 0
        for small in reversed(self.delta_small):
            acc += small
            tails.append(acc)
        return tuple(reversed(tails))

    def replace_stage(self, index, **changes):
        """Return a copy with one stage updated."""
        stages = list(self.stages)
        old = stages[index]
        stages[index] = StageSpec(
            changes.get("name", old.name),
            changes.get("delta_big", old.delta_big),
            changes.get("delta_small", old.delta_small),
        )
        return PipelineSpec(tuple(stages))


@dataclass(frozen=True)
class ValidationResult:
    """Outcome of :func:`validate`: structurally valid, possibly with warnings."""

    warnings: Tuple[str, ...] = field(default_factory=tuple)

    @property
    def ok(self):
        """True when no warning was raised."""
        return not self.warnings


def validate(pipeline):
    """Check the timing assumption under which extraction is exact.

    Structural problems (fewer than two stages, non-positive delays,
    duplicate names) are rejected when the :class:`PipelineSpec` is built.
    Here we only look for stages whose Δ exceeds the remaining δ chain, in
    which case the REack observed in Step 2 is set by the extension and
    not by the output request.
    """
    if not isinstance(pipeline, PipelineSpec):
        raise ValidationError(f"Expected a PipelineSpec, got {type(pipeline)!r}.")
    warnings = []
    for j, (big, tail) in enumerate(zip(pipeline.delta_big, pipeline.tail_sums())):
        if big > tail:
            message = f"P1 violated at stage {j}"
            logger.debug("Stage %d: delta_big=%d, tail delta_small=%d", j, big, tail)
            warnings.append(message)
    return ValidationResult(tuple(warnings))
