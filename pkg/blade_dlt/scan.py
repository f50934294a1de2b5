# SPDX-FileCopyrightText: 2026 Blade-DLT contributors.
# SPDX-License-Identifier: MIT

"""Scan chain through the Scan Q-Flops (SQF).

Each controller ``Ci`` has one SQF whose error outputs are forced through
the scan chain, so ``err0``/``err1`` resolve immediately after ``Sample``
rises. The chain is shifted from the scan-in pin into ``SQF0`` towards
``SQF(n-1)``: after ``n`` shift pulses, the first bit shifted in sits in
the SQF of the highest stage index.
"""

import enum
import itertools
import logging
from dataclasses import dataclass
from typing import Tuple

from .errors import ScanError

logger = logging.getLogger(__name__)


class ForcedError(enum.Enum):
    """Value forced on an SQF output."""

    ERR0 = 0
    ERR1 = 1

    @classmethod
    def coerce(cls, value):
        """Accept a :class:`ForcedError`, a bit or a ``err0``/``err1`` string."""
        if isinstance(value, cls):
            return value
        if isinstance(value, str):
            try:
                return cls[value.upper()]
            except KeyError:
                raise ScanError(f"Unknown forced error {value!r}.") from None
        if value in (0, 1) and not isinstance(value, float):
            return cls(int(value))
        raise ScanError(f"Scan bit must be 0 or 1, got {value!r}.")


@dataclass(frozen=True)
class ScanVector:
    """Per-stage forced error outcomes; bit ``i`` drives the SQF of ``Ci``."""

    bits: Tuple[ForcedError, ...]

    def __post_init__(self):
        """Coerce bits to :class:`ForcedError`."""
        object.__setattr__(
            self, "bits", tuple(ForcedError.coerce(b) for b in self.bits)
        )

    def __len__(self):
        """Number of SQFs addressed."""
        return len(self.bits)

    @classmethod
    def all_err0(cls, n):
        """Vector used in Step 1."""
        return cls((ForcedError.ERR0,) * n)

    @classmethod
    def single_err1(cls, n, index):
        """Vector forcing ``err1`` on stage ``index`` only."""
        if not 0 <= index < n:
            raise ScanError(f"Stage index {index} out of range for {n} stages.")
        return cls(
            tuple(
                ForcedError.ERR1 if i == index else ForcedError.ERR0 for i in range(n)
            )
        )

    @classmethod
    def exhaustive(cls, n):
        """Iterate over all ``2**n`` vectors."""
        for combo in itertools.product((ForcedError.ERR0, ForcedError.ERR1), repeat=n):
            yield cls(combo)

    def has_err1(self):
        """True if at least one stage is forced to ``err1``."""
        return ForcedError.ERR1 in self.bits

    def shift_sequence(self):
        """Return the serial bit stream that loads this vector."""
        return tuple(bit.value for bit in reversed(self.bits))


@dataclass(frozen=True)
class ScanState:
    """SQF contents after loading; ``forced[i]`` belongs to ``Ci``."""

    forced: Tuple[ForcedError, ...]

    def resolves(self, index):
        """Error signal stage ``index`` raises when ``Sample`` rises."""
        return self.forced[index]

    def is_err1(self, index):
        """True if stage ``index`` enters the extension phase."""
        return self.forced[index] is ForcedError.ERR1

    def __len__(self):
        """Number of SQFs."""
        return len(self.forced)


def scan_load_direct(scan, n):
    """Load ``scan`` into the SQFs of an ``n`` stage pipeline in one go."""
    if not isinstance(scan, ScanVector):
        scan = ScanVector(tuple(scan))
    if len(scan) != n:
        raise ScanError(f"Scan vector has {len(scan)} bits, pipeline has {n} SQFs.")
    return ScanState(scan.bits)


class ScanChain:
    """Shift register model of the SQF chain."""

    def __init__(self, n):
        """Create a chain of ``n`` SQFs, all holding ``err0``."""
        self._cells = [ForcedError.ERR0] * n
        self._pulses = 0

    def shift(self, bit):
        """Apply one shift pulse with ``bit`` on the scan-in pin."""
        self._cells = [ForcedError.coerce(bit)] + self._cells[:-1]
        self._pulses += 1

    @property
    def pulses(self):
        """Shift pulses applied since construction."""
        return self._pulses

    def capture(self):
        """Freeze the current contents."""
        return ScanState(tuple(self._cells))


def scan_load_serial(bits, n):
    """Shift ``bits`` into an ``n`` SQF chain, one pulse per bit."""
    bits = list(bits)
    if len(bits) != n:
        raise ScanError(f"Expected exactly {n} shift pulses, got {len(bits)}.")
    chain = ScanChain(n)
    for bit in bits:
        chain.shift(bit)
    logger.debug("Shifted %d scan bits", chain.pulses)
    return chain.capture()
