# SPDX-FileCopyrightText: 2026 Blade-DLT contributors.
# SPDX-License-Identifier: MIT

"""Flask extension tests."""

from blade_dlt import BladeDLT, config


def test_version():
    """Test version import."""
    from blade_dlt import __version__

    assert __version__


def test_init(app):
    """Test extension initialization."""
    ext = BladeDLT(app)
    assert app.extensions["blade-dlt"] is ext
    assert "blade" in app.cli.commands
    assert app.config["BLADE_DLT_TOLERANCE_PCT"] == config.BLADE_DLT_TOLERANCE_PCT
    assert app.config["BLADE_DLT_CELL_LIBRARY"]["a_nin_or"] == 2.6


def test_init_app_keeps_app_settings(app):
    app.config["BLADE_DLT_SEED"] = 99
    ext = BladeDLT()
    assert "blade-dlt" not in app.extensions
    ext.init_app(app)
    assert app.config["BLADE_DLT_SEED"] == 99
    assert app.config["BLADE_DLT_SWEEP_WORKERS"] == 1


def test_cli_reads_app_config(app):
    BladeDLT(app)
    app.config["BLADE_DLT_CELL_LIBRARY"] = dict(
        app.config["BLADE_DLT_CELL_LIBRARY"], a_sqf=7.0
    )
    runner = app.test_cli_runner()
    result = runner.invoke(args=["blade", "area", "-n", "3"])
    assert result.exit_code == 0, result.output
    assert "2.55%" in result.output


def test_cli_extract_through_app(app, e3_config, write_config, tmp_path):
    BladeDLT(app)
    output = tmp_path / "report.json"
    runner = app.test_cli_runner()
    result = runner.invoke(
        args=["blade", "extract", "-c", write_config(e3_config), "-o", str(output)]
    )
    assert result.exit_code == 0, result.output
    assert output.exists()
