# SPDX-FileCopyrightText: 2026 Blade-DLT contributors.
# SPDX-License-Identifier: MIT


"""Pytest configuration."""

import json

import pytest
from flask import Flask

from blade_dlt.model import PipelineSpec

E3_DELTA_SMALL = (100, 150, 120)
E3_DELTA_BIG = (60, 70, 50)


@pytest.fixture()
def e3():
    """Three stage reference pipeline."""
    return PipelineSpec.from_delays(E3_DELTA_SMALL, E3_DELTA_BIG)


@pytest.fixture()
def app():
    """Flask application fixture."""
    app = Flask(__name__)
    app.config.update(TESTING=True)
    return app


@pytest.fixture()
def write_config(tmp_path):
    """Write a JSON config into ``tmp_path`` and return its path."""

    def _write(data, name="pipeline.json"):
        path = tmp_path / name
        path.write_text(json.dumps(data), encoding="utf-8")
        return str(path)

    return _write


@pytest.fixture()
def e3_config():
    """Config document of the reference pipeline."""
    return {
        "stages": [
            {"name": f"C{i}", "delta_big_ps": big, "delta_small_ps": small}
            for i, (big, small) in enumerate(zip(E3_DELTA_BIG, E3_DELTA_SMALL))
        ]
    }
