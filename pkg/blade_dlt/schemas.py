# SPDX-FileCopyrightText: 2026 Blade-DLT contributors.
# SPDX-License-Identifier: MIT

"""JSON Schemas of the config and report documents.

Schemas only check the shape of a document. Structural rules of the
pipeline itself (stage count, positive delays, unique names) stay with
:class:`~blade_dlt.model.PipelineSpec` so that they keep their own exit
code.
"""

from jsonschema import Draft202012Validator
from jsonschema.exceptions import best_match

from .errors import ConfigError
from .orchestrator import Verdict
from .sim import PIN_SIGNALS
from .tester import Rounding

DIALECT = "https://json-schema.org/draft/2020-12/schema"

_delay = {"type": "integer", "minimum": 0}
_optional_time = {"type": ["integer", "null"]}

CONFIG_SCHEMA = {
    "$schema": DIALECT,
    "title": "Blade-DLT pipeline configuration",
    "type": "object",
    "required": ["stages"],
    "additionalProperties": False,
    "properties": {
        "stages": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["delta_big_ps", "delta_small_ps"],
                "additionalProperties": False,
                "properties": {
                    "name": {"type": "string"},
                    "delta_big_ps": {"type": "integer"},
                    "delta_small_ps": {"type": "integer"},
                },
            },
        },
        "tester": {
            "type": "object",
            "additionalProperties": False,
            "properties": {
                "resolution_ps": {"type": "integer", "minimum": 1},
                "rounding": {"enum": [r.value for r in Rounding]},
                "ideal": {"type": "boolean"},
            },
        },
        "tolerance_pct": {
            "type": "number",
            "exclusiveMinimum": 0,
            "exclusiveMaximum": 100,
        },
        "parasitics": {
            "type": "object",
            "additionalProperties": False,
            "properties": {
                "w": {"type": "array", "items": _delay},
                "u": {"type": "array", "items": _delay},
                "v": _delay,
                "rho": _delay,
            },
        },
        "area": {
            "type": "object",
            "additionalProperties": {"type": ["number", "string"]},
        },
        "seed": {"type": "integer"},
    },
}

_verdict_list = {"type": "array", "items": {"enum": [v.value for v in Verdict]}}

REPORT_SCHEMA = {
    "$schema": DIALECT,
    "title": "Blade-DLT extraction report",
    "type": "object",
    "required": [
        "tool_version",
        "config",
        "faults_injected",
        "extraction",
        "verdicts",
        "warnings",
        "faults",
        "error_bounds",
    ],
    "additionalProperties": False,
    "properties": {
        "tool_version": {"type": "string"},
        "config": CONFIG_SCHEMA,
        "faults_injected": {"type": "array", "items": {"type": "string"}},
        "extraction": {
            "type": "object",
            "required": [
                "t_sum",
                "delta_big_hat",
                "delta_small_hat",
                "residual",
                "measurements",
            ],
            "additionalProperties": False,
            "properties": {
                "t_sum": _optional_time,
                "delta_big_hat": {"type": "array", "items": _optional_time},
                "delta_small_hat": {"type": "array", "items": _optional_time},
                "residual": _optional_time,
                "measurements": {
                    "type": "array",
                    "items": {
                        "type": "object",
                        "required": ["run", "pin", "t_lreq", "t_observed"],
                        "additionalProperties": False,
                        "properties": {
                            "run": {
                                "type": "string",
                                "pattern": "^step(1|[23]_[0-9]+)$",
                            },
                            "pin": {"enum": list(PIN_SIGNALS)},
                            "t_lreq": {"type": "integer"},
                            "t_observed": _optional_time,
                        },
                    },
                },
            },
        },
        "verdicts": {
            "type": "object",
            "required": ["delta_big", "delta_small"],
            "additionalProperties": False,
            "properties": {"delta_big": _verdict_list, "delta_small": _verdict_list},
        },
        "warnings": {"type": "array", "items": {"type": "string"}},
        "faults": {"type": "array", "items": {"type": "string"}},
        "error_bounds": {
            "type": ["object", "null"],
            "additionalProperties": {
                "type": "array",
                "prefixItems": [{"type": "number"}, {"type": "number"}],
                "minItems": 2,
                "maxItems": 2,
            },
        },
    },
}

config_validator = Draft202012Validator(CONFIG_SCHEMA)
report_validator = Draft202012Validator(REPORT_SCHEMA)


def check_document(validator, document, what):
    """Raise :class:`~blade_dlt.errors.ConfigError` unless ``document`` is valid."""
    error = best_match(validator.iter_errors(document))
    if error is not None:
        where = "/".join(str(p) for p in error.absolute_path) or "root"
        raise ConfigError(f"{what} is invalid at {where}: {error.message}")
    return document
