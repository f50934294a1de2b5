# SPDX-FileCopyrightText: 2026 Blade-DLT contributors.
# SPDX-License-Identifier: MIT

"""Propagation delays outside the delay lines.

A mapped netlist adds gate and wire delays that the delay-line model
ignores. They are lumped into four classes:

* ``w[i]`` - forwarding overhead added to the δ path of stage ``i``,
* ``u[i]`` - sampling overhead added before ``Sample`` of stage ``i``,
* ``v`` - observation overhead of the OR tree and the ``Error1`` pin,
* ``rho`` - overhead of the ``REack`` pin path.
"""

from dataclasses import dataclass
from typing import Tuple

from .errors import ValidationError


@dataclass(frozen=True)
class ParasiticModel:
    """Non-negative parasitic delays in picoseconds."""

    w: Tuple[int, ...]
    u: Tuple[int, ...]
    v: int = 0
    rho: int = 0

    def __post_init__(self):
        """Normalize and check the values."""
        object.__setattr__(self, "w", tuple(self.w))
        object.__setattr__(self, "u", tuple(self.u))
        if len(self.w) != len(self.u):
            raise ValidationError("Parasitics w and u must have the same length.")
        for value in self.w + self.u + (self.v, self.rho):
            if isinstance(value, bool) or not isinstance(value, int) or value < 0:
                raise ValidationError(
                    f"Parasitic delays must be non-negative integers, got {value!r}."
                )

    @classmethod
    def zero(cls, n):
        """Parasitic-free model of an ``n`` stage pipeline."""
        return cls((0,) * n, (0,) * n)

    def is_zero(self):
        """True if no parasitic delay is present."""
        return not any(self.w + self.u) and not self.v and not self.rho

    def check(self, n):
        """Ensure the model matches an ``n`` stage pipeline."""
        if len(self.w) != n:
            raise ValidationError(
                f"Parasitics describe {len(self.w)} stages, pipeline has {n}."
            )
        return self
