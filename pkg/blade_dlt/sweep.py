# SPDX-FileCopyrightText: 2026 Blade-DLT contributors.
# SPDX-License-Identifier: MIT

"""Monte-Carlo characterization of tester quantization error.

Each trial runs the full extraction with the stimulus placed at a random
offset ``t0`` in ``[0, r)``, sampling the quantization phase uniformly.
Errors are taken against the extraction with a perfect tester.
"""

import csv
import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

import numpy as np

from .device import Device
from .errors import ValidationError
from .orchestrator import extract_all
from .tester import Interval, TesterModel, error_bounds, quantity_names

logger = logging.getLogger(__name__)

CSV_COLUMNS = (
    "quantity",
    "trials",
    "max_err_ps",
    "mean_err_ps",
    "bound_lo_ps",
    "bound_hi_ps",
    "resolution_ps",
)


@dataclass(frozen=True)
class QuantityStats:
    """Empirical error of one reported quantity."""

    quantity: str
    trials: int
    max_err: int
    mean_err: float
    min_signed: int
    max_signed: int
    bound: Interval

    @property
    def contained(self):
        """True if every observed error lies inside the bound."""
        return self.bound.contains(self.min_signed) and self.bound.contains(
            self.max_signed
        )


@dataclass(frozen=True)
class SweepResult:
    """Statistics of one sweep at a fixed tester resolution."""

    resolution: int
    trials: int
    stats: tuple

    @property
    def contained(self):
        """True if all quantities stayed inside their bounds."""
        return all(s.contained for s in self.stats)

    def by_quantity(self):
        """Stats keyed by quantity name."""
        return {s.quantity: s for s in self.stats}


def _run_trial(args):
    pipeline, parasitics, tester, t0 = args
    report = extract_all(Device(pipeline, parasitics, tester), t0=t0)
    return report.quantities()


def monte_carlo_sweep(pipeline, tester, trials, seed=0, workers=1, parasitics=None):
    """Run ``trials`` quantized extractions and compare with the ideal one.

    :param workers: worker processes; results are merged by trial index so
        the outcome does not depend on it.
    :returns: a :class:`SweepResult`.
    """
    if trials < 1:
        raise ValidationError(f"A sweep needs at least one trial, got {trials}.")
    names = quantity_names(pipeline.n)
    ideal = _run_trial((pipeline, parasitics, TesterModel.perfect(), 0))

    rng = np.random.default_rng(seed)
    offsets = rng.integers(0, tester.resolution, size=trials)
    jobs = [(pipeline, parasitics, tester, int(t0)) for t0 in offsets]
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_run_trial, jobs, chunksize=64))
    else:
        results = [_run_trial(job) for job in jobs]

    errors = np.array(
        [[result[name] - ideal[name] for name in names] for result in results],
        dtype=np.int64,
    )
    magnitude = np.abs(errors)
    bounds = error_bounds(pipeline, tester)
    stats = tuple(
        QuantityStats(
            quantity=name,
            trials=trials,
            max_err=int(magnitude[:, j].max()),
            mean_err=float(magnitude[:, j].mean()),
            min_signed=int(errors[:, j].min()),
            max_signed=int(errors[:, j].max()),
            bound=bounds[name],
        )
        for j, name in enumerate(names)
    )
    result = SweepResult(tester.resolution, trials, stats)
    if not result.contained:
        logger.info(
            "Sweep at r=%d produced errors outside the interval bounds",
            tester.resolution,
        )
    return result


def write_sweep_csv(results, fp):
    """Write sweep ``results`` as CSV rows to the text stream ``fp``."""
    writer = csv.writer(fp, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    for result in results:
        for s in result.stats:
            writer.writerow(
                (
                    s.quantity,
                    s.trials,
                    s.max_err,
                    f"{s.mean_err:.3f}",
                    f"{float(s.bound.lo):.1f}",
                    f"{float(s.bound.hi):.1f}",
                    result.resolution,
                )
            )
