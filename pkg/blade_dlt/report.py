# SPDX-FileCopyrightText: 2026 Blade-DLT contributors.
# SPDX-License-Identifier: MIT

"""Extraction report files.

Reports are JSON with sorted keys, so identical inputs give identical
bytes. Top-level fields:

``tool_version``, ``config`` (normalized echo), ``faults_injected``,
``extraction`` (``t_sum``, ``delta_big_hat``, ``delta_small_hat``,
``residual``, ``measurements``), ``verdicts`` (per line kind, one entry per
stage), ``warnings``, ``faults`` and ``error_bounds`` (``null`` for an ideal
tester, otherwise ``[lo, hi]`` per quantity in ps).
"""

import json
from dataclasses import dataclass
from typing import Optional

from . import __version__
from .errors import ConfigError
from .faults import LineKind
from .orchestrator import judge
from .schemas import REPORT_SCHEMA, check_document, report_validator


@dataclass(frozen=True)
class ReportFile:
    """A parsed report."""

    tool_version: str
    config: dict
    faults_injected: list
    extraction: dict
    verdicts: dict
    warnings: list
    faults: list
    error_bounds: Optional[dict]

    @property
    def has_fault(self):
        """True if any line failed or a pin never answered."""
        return bool(self.faults) or any(
            v != "OK" for values in self.verdicts.values() for v in values
        )


def build_report(config, report, bounds=None, faults_injected=()):
    """Assemble the JSON document of an extraction run.

    A report that was not judged yet is judged against the nominals of
    ``config``.
    """
    n = report.n
    verdicts = report.verdicts or judge(report, config.timing_spec())
    return {
        "tool_version": __version__,
        "config": config.to_dict(),
        "faults_injected": [str(f) for f in faults_injected],
        "extraction": {
            "t_sum": report.t_sum,
            "delta_big_hat": list(report.delta_big_hat),
            "delta_small_hat": list(report.delta_small_hat),
            "residual": report.residual,
            "measurements": [
                {
                    "run": m.label,
                    "pin": m.pin,
                    "t_lreq": m.t_lreq,
                    "t_observed": m.t_observed,
                }
                for m in report.measurements
            ],
        },
        "verdicts": {
            kind.value: [verdicts[(kind, i)].value for i in range(n)]
            for kind in LineKind
        },
        "warnings": list(report.warnings),
        "faults": list(report.faults),
        "error_bounds": (
            None
            if bounds is None
            else {name: interval.as_list() for name, interval in bounds.items()}
        ),
    }


def dumps_report(document):
    """Serialize a report document deterministically."""
    return json.dumps(document, indent=2, sort_keys=True, ensure_ascii=False) + "\n"


def write_report(path, document):
    """Write a report document to ``path``."""
    with open(path, "w", encoding="utf-8") as fp:
        fp.write(dumps_report(document))


def parse_report(data):
    """Check a decoded report against :data:`~blade_dlt.schemas.REPORT_SCHEMA`."""
    check_document(report_validator, data, "Report")
    n = len(data["config"]["stages"])
    for kind in LineKind:
        if len(data["verdicts"][kind.value]) != n:
            raise ConfigError(f"Report verdicts for {kind.value} are incomplete.")
    return ReportFile(**{key: data[key] for key in REPORT_SCHEMA["required"]})


def load_report(path):
    """Read a report file and validate it."""
    try:
        with open(path, encoding="utf-8") as fp:
            data = json.load(fp)
    except (OSError, json.JSONDecodeError) as e:
        raise ConfigError(f"Cannot read report {path}: {e}") from e
    return parse_report(data)
