# SPDX-FileCopyrightText: 2026 Blade-DLT contributors.
# SPDX-License-Identifier: MIT

"""Offline delay-line test procedure.

Every delay line is measured from the primary pins only, one measurement
run per step with a complete reset in between:

* **Step 1** - all SQFs forced to ``err0``; ``T_Sum = T_Rreq - T_Lreq`` is
  the sum of all δ lines.
* **Step 2** - for each controller ``i`` only ``SQFi`` is forced to
  ``err1``; the extension delays the token by Δi, so
  ``Δi = T_REack - T_Lreq - T_Sum``.
* **Step 3** - for each δ line ``i < n-1`` only the SQF of the following
  controller ``i+1`` is forced to ``err1``; its ``err1`` reaches the
  ``Error1`` pin once ``Δi+1`` after the request arrived, so
  ``δi = T_Error1 - T_Lreq - Σ_{k<i} δk - Δi+1``.

The last δ has no following controller and is derived from ``T_Sum``.
Measured values, not nominals, are fed into later equations.

Hooks follow the same registration pattern as unit-of-work operations:

.. code-block:: python

    class PrintHook(MeasurementHook):
        def on_measurement(self, measurement, trace):
            print(measurement.label, measurement.t_observed)

    report = extract_all(device, hooks=[PrintHook()])
"""

import enum
import logging
from dataclasses import dataclass, field, replace
from fractions import Fraction
from typing import Dict, Optional, Tuple

from .errors import ValidationError
from .faults import LineKind
from .model import Time, validate
from .scan import ScanVector

logger = logging.getLogger(__name__)


class Step(enum.Enum):
    """Test procedure step and the pin it observes."""

    STEP1 = "step1"
    STEP2 = "step2"
    STEP3 = "step3"

    @property
    def pin(self):
        """Response pin read by this step."""
        return {"step1": "Rreq", "step2": "REack", "step3": "Error1"}[self.value]


class Verdict(enum.Enum):
    """Judgement of one delay line against its timing specification."""

    OK = "OK"
    TOO_FAST = "TooFast"
    TOO_SLOW = "TooSlow"
    UNMEASURED = "Unmeasured"


@dataclass(frozen=True)
class Measurement:
    """Timestamps of one measurement run."""

    step: Step
    target: Optional[int]
    t_lreq: Time
    t_observed: Optional[Time]

    @property
    def pin(self):
        """Pin ``t_observed`` was read from."""
        return self.step.pin

    @property
    def label(self):
        """``step1``, ``step2_<i>`` or ``step3_<i>``."""
        if self.target is None:
            return self.step.value
        return f"{self.step.value}_{self.target}"


@dataclass(frozen=True)
class StepResult:
    """Outcome of one step: the measurement and the value derived from it."""

    measurement: Measurement
    value: Optional[Time]
    warnings: Tuple[str, ...] = ()
    faults: Tuple[str, ...] = ()


@dataclass(frozen=True)
class ExtractionReport:
    """All measured delays of a pipeline."""

    t_sum: Optional[Time]
    delta_big_hat: Tuple[Optional[Time], ...]
    delta_small_hat: Tuple[Optional[Time], ...]
    residual: Optional[Time]
    warnings: Tuple[str, ...] = ()
    faults: Tuple[str, ...] = ()
    measurements: Tuple[Measurement, ...] = ()
    verdicts: Dict = field(default_factory=dict)
    """``(LineKind, index)`` to :class:`Verdict`, empty until judged."""

    @property
    def n(self):
        """Number of stages."""
        return len(self.delta_big_hat)

    @property
    def complete(self):
        """True if every delay line was measured."""
        return self.t_sum is not None and None not in (
            self.delta_big_hat + self.delta_small_hat
        )

    def quantities(self):
        """Reported quantities keyed like :func:`~blade_dlt.tester.quantity_names`."""
        values = {"t_sum": self.t_sum}
        values.update({f"delta_big_{i}": v for i, v in enumerate(self.delta_big_hat)})
        values.update(
            {f"delta_small_{i}": v for i, v in enumerate(self.delta_small_hat)}
        )
        return values

    def with_verdicts(self, verdicts):
        """Copy of the report carrying ``verdicts``."""
        return replace(self, verdicts=dict(verdicts))


@dataclass(frozen=True)
class TimingSpec:
    """Nominal delays and the symmetric verdict tolerance (a fraction)."""

    delta_big: Tuple[Time, ...]
    delta_small: Tuple[Time, ...]
    tolerance: Fraction = Fraction(5, 100)

    def __post_init__(self):
        """Check nominals and tolerance."""
        object.__setattr__(self, "tolerance", Fraction(str(self.tolerance)))
        if not 0 < self.tolerance < 1:
            raise ValidationError(
                f"Tolerance must lie in (0, 1), got {float(self.tolerance)}."
            )
        if len(self.delta_big) != len(self.delta_small):
            raise ValidationError("Nominal Δ and δ lists differ in length.")
        if any(v <= 0 for v in self.delta_big + self.delta_small):
            raise ValidationError("Nominal delays must be positive.")

    @classmethod
    def from_pipeline(cls, pipeline, tolerance=Fraction(5, 100)):
        """Use the delays of ``pipeline`` as nominals."""
        return cls(pipeline.delta_big, pipeline.delta_small, tolerance)


class MeasurementHook:
    """Base class for measurement observers."""

    def on_reset(self, device):
        """Called after the device was reset."""
        pass

    def on_measurement(self, measurement, trace):
        """Called after a measurement run."""
        pass

    def on_warning(self, message):
        """Called for every warning or fault message."""
        pass


def _measure(device, step, target, vector, t0, hooks):
    device.reset()
    for hook in hooks:
        hook.on_reset(device)
    device.load_scan(vector)
    capture = device.stimulate(t0)
    measurement = Measurement(step, target, capture.t_lreq, capture.pin(step.pin))
    for hook in hooks:
        hook.on_measurement(measurement, device.trace)
    return measurement


def _notify(hooks, messages):
    for message in messages:
        for hook in hooks:
            hook.on_warning(message)


def run_step1(device, t0=0, hooks=()):
    """Measure ``T_Sum`` with all SQFs forced to ``err0``."""
    n = device.pipeline.n
    m = _measure(device, Step.STEP1, None, ScanVector.all_err0(n), t0, hooks)
    if m.t_observed is None:
        result = StepResult(m, None, faults=("step1: pipeline stuck (no Rreq)",))
    else:
        result = StepResult(m, m.t_observed - m.t_lreq)
    _notify(hooks, result.warnings + result.faults)
    return result


def run_step2(device, i, t_sum, t0=0, hooks=()):
    """Measure Δ of controller ``i`` given the measured ``t_sum``."""
    n = device.pipeline.n
    m = _measure(device, Step.STEP2, i, ScanVector.single_err1(n, i), t0, hooks)
    if m.t_observed is None:
        result = StepResult(m, None, faults=(f"step2_{i}: pipeline stuck (no REack)",))
    else:
        value = m.t_observed - m.t_lreq - t_sum
        warnings = ()
        if value < 0:
            warnings = (f"step2_{i}: inconsistent measurement (delta_big={value})",)
        result = StepResult(m, value, warnings)
    _notify(hooks, result.warnings + result.faults)
    return result


def run_step3(device, i, delta_small_hat, delta_big_next, t0=0, hooks=()):
    """Measure δ of the line between controllers ``i`` and ``i+1``.

    :param delta_small_hat: measured δ of the lines ``0..i-1``.
    :param delta_big_next: measured Δ of controller ``i+1``.
    """
    n = device.pipeline.n
    if not 0 <= i <= n - 2:
        raise ValidationError(
            f"Step 3 measures delta_small 0..{n - 2}; line {i} has no "
            f"following controller and is derived from T_Sum."
        )
    if len(delta_small_hat) < i:
        raise ValidationError(f"Step 3 on line {i} needs {i} earlier delta_small.")
    vector = ScanVector.single_err1(n, i + 1)
    m = _measure(device, Step.STEP3, i, vector, t0, hooks)
    if m.t_observed is None:
        result = StepResult(
            m, None, faults=(f"step3_{i}: stuck or OR-gate fault (no Error1)",)
        )
    else:
        value = (
            m.t_observed - m.t_lreq - sum(delta_small_hat[:i]) - delta_big_next
        )
        warnings = ()
        if value < 0:
            warnings = (f"step3_{i}: inconsistent measurement (delta_small={value})",)
        result = StepResult(m, value, warnings)
    _notify(hooks, result.warnings + result.faults)
    return result


def derive_last_delta(t_sum, delta_small_hat):
    """Return δ of the last line: ``T_Sum`` minus all earlier δ."""
    return t_sum - sum(delta_small_hat)


def extract_all(device, t0=0, hooks=(), timing=None):
    """Run the full procedure and return an :class:`ExtractionReport`.

    :param timing: optional :class:`TimingSpec`; when given, the report
        carries the verdict of every delay line.
    """
    n = device.pipeline.n
    warnings = list(validate(device.pipeline).warnings)
    _notify(hooks, warnings)
    faults = []
    measurements = []

    def collect(result):
        measurements.append(result.measurement)
        warnings.extend(result.warnings)
        faults.extend(result.faults)
        return result.value

    t_sum = collect(run_step1(device, t0, hooks))

    delta_big = [None] * n
    if t_sum is not None:
        for i in range(n):
            delta_big[i] = collect(run_step2(device, i, t_sum, t0, hooks))

    delta_small = []
    for i in range(n - 1):
        if None in delta_small or delta_big[i + 1] is None:
            delta_small.append(None)
            continue
        delta_small.append(
            collect(run_step3(device, i, delta_small, delta_big[i + 1], t0, hooks))
        )

    last = None
    if t_sum is not None and None not in delta_small:
        last = derive_last_delta(t_sum, delta_small)
        if last < 0:
            message = f"delta_small_{n - 1}: inconsistent measurement ({last})"
            warnings.append(message)
            _notify(hooks, [message])
    delta_small.append(last)

    residual = None
    if t_sum is not None and None not in delta_small:
        residual = t_sum - sum(delta_small)

    report = ExtractionReport(
        t_sum=t_sum,
        delta_big_hat=tuple(delta_big),
        delta_small_hat=tuple(delta_small),
        residual=residual,
        warnings=tuple(warnings),
        faults=tuple(faults),
        measurements=tuple(measurements),
    )
    logger.info(
        "Extracted %d stages: T_Sum=%s, %d warnings, %d faults",
        n,
        t_sum,
        len(report.warnings),
        len(report.faults),
    )
    if timing is not None:
        report = report.with_verdicts(judge(report, timing))
    return report


def _judge_value(value, nominal, tolerance):
    if value is None:
        return Verdict.UNMEASURED
    if value < nominal * (1 - tolerance):
        return Verdict.TOO_FAST
    if value > nominal * (1 + tolerance):
        return Verdict.TOO_SLOW
    return Verdict.OK


def judge(report, spec):
    """Judge every delay line against ``spec``.

    A δ line that is too fast no longer covers its data path, a Δ line too
    fast shortens the timing window; both are flagged ``TooFast``. Values
    strictly outside ``nominal * (1 ± tolerance)`` fail.

    :returns: dict mapping ``(LineKind, index)`` to :class:`Verdict`.
    """
    if report.n != len(spec.delta_big):
        raise ValidationError("Report and timing spec differ in stage count.")
    verdicts = {}
    for i in range(report.n):
        verdicts[(LineKind.DELTA_BIG, i)] = _judge_value(
            report.delta_big_hat[i], spec.delta_big[i], spec.tolerance
        )
        verdicts[(LineKind.DELTA_SMALL, i)] = _judge_value(
            report.delta_small_hat[i], spec.delta_small[i], spec.tolerance
        )
    return verdicts


def failing_lines(verdicts):
    """Delay lines whose verdict is not ``OK``, in a stable order."""
    return sorted(
        (key for key, verdict in verdicts.items() if verdict is not Verdict.OK),
        key=lambda key: (key[0].value, key[1]),
    )
