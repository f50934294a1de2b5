# SPDX-FileCopyrightText: 2026 Blade-DLT contributors.
# SPDX-License-Identifier: MIT

"""JSON configuration files.

Only ``stages`` is required; the other blocks fall back to the
``BLADE_DLT_*`` settings::

    {
      "stages": [
        {"name": "C0", "delta_big_ps": 60, "delta_small_ps": 100},
        {"name": "C1", "delta_big_ps": 70, "delta_small_ps": 150},
        {"name": "C2", "delta_big_ps": 50, "delta_small_ps": 120}
      ],
      "tester": {"resolution_ps": 8, "rounding": "nearest", "ideal": false},
      "tolerance_pct": 5.0,
      "parasitics": {"w": [0, 0, 0], "u": [0, 0, 0], "v": 0, "rho": 0},
      "area": {"a_nin_or": 2.6},
      "seed": 0
    }

Files are checked against :data:`~blade_dlt.schemas.CONFIG_SCHEMA`.
Ill-formed files raise :class:`~blade_dlt.errors.ConfigError`; a pipeline
that is structurally invalid raises
:class:`~blade_dlt.errors.ValidationError`.
"""

import json
from dataclasses import dataclass, replace
from fractions import Fraction

from .area import CellLibrary
from .config import get_setting
from .errors import ConfigError, ValidationError
from .model import PipelineSpec, StageSpec
from .orchestrator import TimingSpec
from .parasitics import ParasiticModel
from .schemas import check_document, config_validator
from .tester import Rounding, TesterModel


@dataclass(frozen=True)
class Config:
    """Validated content of a config file."""

    pipeline: PipelineSpec
    tester: TesterModel
    tolerance_pct: float
    parasitics: ParasiticModel
    cell_library: CellLibrary
    seed: int

    @property
    def tolerance(self):
        """Tolerance as an exact fraction."""
        return Fraction(str(self.tolerance_pct)) / 100

    def timing_spec(self):
        """Nominal timing of the configured pipeline."""
        return TimingSpec.from_pipeline(self.pipeline, self.tolerance)

    def with_seed(self, seed):
        """Copy with another seed."""
        return replace(self, seed=seed)

    def to_dict(self):
        """Normalized config echo, field names as in the file format."""
        return {
            "stages": [
                {
                    "name": s.name,
                    "delta_big_ps": s.delta_big,
                    "delta_small_ps": s.delta_small,
                }
                for s in self.pipeline.stages
            ],
            "tester": {
                "resolution_ps": self.tester.resolution,
                "rounding": self.tester.rounding.value,
                "ideal": self.tester.ideal,
            },
            "tolerance_pct": self.tolerance_pct,
            "parasitics": {
                "w": list(self.parasitics.w),
                "u": list(self.parasitics.u),
                "v": self.parasitics.v,
                "rho": self.parasitics.rho,
            },
            "area": self.cell_library.to_dict(),
            "seed": self.seed,
        }


def _block(data, key):
    return data.get(key, {})


def _integer(value, what):
    if isinstance(value, bool) or not isinstance(value, int):
        raise ConfigError(f"{what} must be an integer, got {value!r}.")
    return value


def _parse_stages(data):
    parsed = []
    for i, stage in enumerate(data["stages"]):
        parsed.append(
            StageSpec(
                stage.get("name", f"C{i}"),
                _integer(stage["delta_big_ps"], f"stages[{i}].delta_big_ps"),
                _integer(stage["delta_small_ps"], f"stages[{i}].delta_small_ps"),
            )
        )
    return PipelineSpec(tuple(parsed))


def _parse_tester(data):
    block = _block(data, "tester")
    try:
        rounding = Rounding(
            block.get("rounding", get_setting("BLADE_DLT_TESTER_ROUNDING"))
        )
    except ValueError:
        raise ConfigError(f"Unknown rounding {block.get('rounding')!r}.") from None
    resolution = _integer(
        block.get("resolution_ps", get_setting("BLADE_DLT_TESTER_RESOLUTION_PS")),
        "tester.resolution_ps",
    )
    if "ideal" in block:
        ideal = block["ideal"]
    else:
        ideal = "resolution_ps" not in block and get_setting("BLADE_DLT_TESTER_IDEAL")
    try:
        return TesterModel(resolution, rounding, ideal)
    except ValidationError as e:
        raise ConfigError(str(e)) from e


def _parse_parasitics(data, n):
    block = _block(data, "parasitics")
    try:
        return ParasiticModel(
            tuple(block.get("w", (0,) * n)),
            tuple(block.get("u", (0,) * n)),
            block.get("v", 0),
            block.get("rho", 0),
        ).check(n)
    except (TypeError, ValidationError) as e:
        raise ConfigError(f"Invalid parasitics: {e}") from e


def parse_config(data):
    """Validate a decoded JSON document into a :class:`Config`."""
    check_document(config_validator, data, "Config")
    pipeline = _parse_stages(data)
    tolerance_pct = data.get("tolerance_pct", get_setting("BLADE_DLT_TOLERANCE_PCT"))
    if not 0 < tolerance_pct < 100:
        raise ConfigError(f"tolerance_pct must lie in (0, 100), got {tolerance_pct}.")
    try:
        cell_library = CellLibrary.from_config(**_block(data, "area"))
    except (TypeError, ValidationError) as e:
        raise ConfigError(f"Invalid area block: {e}") from e
    seed = _integer(data.get("seed", get_setting("BLADE_DLT_SEED")), "seed")
    return Config(
        pipeline=pipeline,
        tester=_parse_tester(data),
        tolerance_pct=float(tolerance_pct),
        parasitics=_parse_parasitics(data, pipeline.n),
        cell_library=cell_library,
        seed=seed,
    )


def load_config(path):
    """Read and validate the config file at ``path``."""
    try:
        with open(path, encoding="utf-8") as fp:
            data = json.load(fp)
    except OSError as e:
        raise ConfigError(f"Cannot read config {path}: {e.strerror}") from e
    except json.JSONDecodeError as e:
        raise ConfigError(f"Config {path} is not valid JSON: {e}") from e
    return parse_config(data)
