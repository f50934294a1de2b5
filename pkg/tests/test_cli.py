# SPDX-FileCopyrightText: 2026 Blade-DLT contributors.
# SPDX-License-Identifier: MIT

"""CLI tests."""

import csv
import json
from pathlib import Path

import pytest
from click.testing import CliRunner

from blade_dlt.cli import ResolutionRange, blade
from blade_dlt.report import load_report

DATA = Path(__file__).parent / "data"


@pytest.fixture()
def runner():
    return CliRunner()


def test_validate(runner, e3_config, write_config):
    result = runner.invoke(blade, ["validate", "-c", write_config(e3_config)])
    assert result.exit_code == 0
    assert "P1 violated" not in result.output
    assert "valid" in result.output


def test_validate_p1_warning(runner, e3_config, write_config):
    e3_config["stages"][2]["delta_big_ps"] = 500
    result = runner.invoke(blade, ["validate", "-c", write_config(e3_config)])
    assert result.exit_code == 0
    assert "P1 violated at stage 2" in result.output


def test_validate_warning_is_printed_once(runner, e3_config, write_config):
    e3_config["stages"][2]["delta_big_ps"] = 500
    result = runner.invoke(blade, ["-v", "validate", "-c", write_config(e3_config)])
    assert result.exit_code == 0
    assert result.output.count("P1 violated at stage 2") == 1


def test_validate_single_stage(runner, e3_config, write_config):
    e3_config["stages"] = e3_config["stages"][:1]
    result = runner.invoke(blade, ["validate", "-c", write_config(e3_config)])
    assert result.exit_code == 2


def test_validate_config_errors(runner, tmp_path, write_config):
    result = runner.invoke(blade, ["validate", "-c", str(tmp_path / "nope.json")])
    assert result.exit_code == 1
    result = runner.invoke(blade, ["validate", "-c", write_config({"stages": 3})])
    assert result.exit_code == 1


@pytest.mark.parametrize("args", [["validate"], ["validate", "--bogus"], ["bogus"]])
def test_usage_errors_exit_with_one(runner, args):
    assert runner.invoke(blade, args).exit_code == 1


def test_extract(runner, e3_config, write_config, tmp_path):
    output = tmp_path / "report.json"
    result = runner.invoke(
        blade, ["extract", "-c", write_config(e3_config), "-o", str(output)]
    )
    assert result.exit_code == 0, result.output
    report = load_report(output)
    assert report.extraction["delta_big_hat"] == [60, 70, 50]
    assert report.extraction["delta_small_hat"] == [100, 150, 120]
    assert report.extraction["residual"] == 0
    assert report.error_bounds is None
    assert not report.has_fault


def test_extract_fine_tester(runner, e3_config, write_config, tmp_path):
    e3_config["tester"] = {"resolution_ps": 2, "ideal": False}
    output = tmp_path / "report.json"
    result = runner.invoke(
        blade, ["extract", "-c", write_config(e3_config), "-o", str(output)]
    )
    assert result.exit_code == 0
    report = load_report(output)
    assert report.error_bounds["t_sum"] == [-2.0, 2.0]
    assert set(report.verdicts["delta_big"] + report.verdicts["delta_small"]) == {
        "OK"
    }


def test_extract_coarse_tester(runner, e3_config, write_config, tmp_path):
    # 8 ps steps cost up to 16 ps on each Δ, more than 5% of 50-70 ps
    e3_config["tester"] = {"resolution_ps": 8, "ideal": False}
    output = tmp_path / "report.json"
    result = runner.invoke(
        blade, ["extract", "-c", write_config(e3_config), "-o", str(output)]
    )
    assert result.exit_code == 3
    report = load_report(output)
    assert report.extraction["t_sum"] == 368
    assert report.extraction["delta_big_hat"] == [64, 72, 56]
    assert report.extraction["delta_small_hat"] == [96, 152, 120]
    assert report.verdicts["delta_big"] == ["TooSlow", "OK", "TooSlow"]
    assert report.verdicts["delta_small"] == ["OK", "OK", "OK"]
    nominal = {"delta_big": (60, 70, 50), "delta_small": (100, 150, 120)}
    for kind, values in nominal.items():
        for i, value in enumerate(values):
            lo, hi = report.error_bounds[f"{kind}_{i}"]
            measured = report.extraction[f"{kind}_hat"][i]
            assert lo <= measured - value <= hi


def test_extract_resolution_implies_quantizing_tester(
    runner, e3_config, write_config, tmp_path
):
    e3_config["tester"] = {"resolution_ps": 8}
    output = tmp_path / "report.json"
    result = runner.invoke(
        blade, ["extract", "-c", write_config(e3_config), "-o", str(output)]
    )
    assert result.exit_code == 3
    report = load_report(output)
    assert report.config["tester"]["ideal"] is False
    assert report.extraction["t_sum"] == 368
    assert report.error_bounds["t_sum"] == [-8.0, 8.0]


def test_extract_rejects_non_ascii_stage_names(
    runner, e3_config, write_config, tmp_path
):
    e3_config["stages"][1]["name"] = "Stufe_\u00e4"
    output = tmp_path / "report.json"
    args = ["extract", "-c", write_config(e3_config), "-o", str(output)]
    result = runner.invoke(blade, args + ["--vcd", str(tmp_path / "vcd")])
    assert result.exit_code == 2
    assert result.exception is None or isinstance(result.exception, SystemExit)
    assert not output.exists()
    assert "Invalid stage name" in result.output


def test_extract_warnings_are_printed_once(runner, e3_config, write_config, tmp_path):
    e3_config["stages"][2]["delta_big_ps"] = 500
    output = tmp_path / "report.json"
    result = runner.invoke(
        blade, ["extract", "-c", write_config(e3_config), "-o", str(output)]
    )
    assert result.output.count("P1 violated at stage 2") == 1
    report = load_report(output)
    assert report.warnings.count("P1 violated at stage 2") == 1


def test_extract_with_fault(runner, e3_config, write_config, tmp_path):
    output = tmp_path / "report.json"
    args = ["extract", "-c", write_config(e3_config), "-o", str(output)]
    result = runner.invoke(blade, args + ["--fault", "delta_small:1:scale:1.2"])
    assert result.exit_code == 3
    assert "delta_small[1]: TooSlow" in result.output
    report = load_report(output)
    assert report.faults_injected == ["delta_small:1:scale:1.2"]
    assert report.extraction["t_sum"] == 400
    assert report.verdicts["delta_small"] == ["OK", "TooSlow", "OK"]


def test_extract_with_stuck_pin(runner, e3_config, write_config, tmp_path):
    output = tmp_path / "report.json"
    args = ["extract", "-c", write_config(e3_config), "-o", str(output)]
    result = runner.invoke(blade, args + ["--fault", "pin:Error1:stuck:0"])
    assert result.exit_code == 3
    report = load_report(output)
    assert report.faults == ["step3_0: stuck or OR-gate fault (no Error1)"]
    assert report.verdicts["delta_small"] == ["Unmeasured"] * 3
    assert report.extraction["delta_small_hat"] == [None, None, None]


@pytest.mark.parametrize(
    "fault", ["delta_small:1:scale", "delta_big:0:offset:-60", "delta_small:7:scale:2"]
)
def test_extract_bad_fault(runner, e3_config, write_config, tmp_path, fault):
    args = ["extract", "-c", write_config(e3_config), "-o", str(tmp_path / "r.json")]
    assert runner.invoke(blade, args + ["--fault", fault]).exit_code == 1


def test_extract_is_deterministic(runner, e3_config, write_config, tmp_path):
    config = write_config(e3_config)
    for run in ("a", "b"):
        result = runner.invoke(
            blade,
            [
                "extract",
                "-c",
                config,
                "-o",
                str(tmp_path / f"{run}.json"),
                "--vcd",
                str(tmp_path / f"{run}_vcd"),
            ],
        )
        assert result.exit_code == 0
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    assert a.read_bytes() == b.read_bytes()
    files = sorted(p.name for p in (tmp_path / "a_vcd").iterdir())
    assert len(files) == 6
    for name in files:
        first = (tmp_path / "a_vcd" / name).read_bytes()
        assert first == (tmp_path / "b_vcd" / name).read_bytes()
    assert (tmp_path / "a_vcd" / "step1.vcd").read_bytes() == (
        DATA / "e3_step1.vcd"
    ).read_bytes()


def test_seed_from_environment(runner, e3_config, write_config, tmp_path):
    output = tmp_path / "report.json"
    result = runner.invoke(
        blade,
        ["extract", "-c", write_config(e3_config), "-o", str(output)],
        env={"BLADE_DLT_SEED": "7"},
    )
    assert result.exit_code == 0
    assert json.loads(output.read_text())["config"]["seed"] == 7


def test_sweep(runner, e3_config, write_config, tmp_path):
    output = tmp_path / "sweep.csv"
    result = runner.invoke(
        blade,
        [
            "sweep",
            "-c",
            write_config(e3_config),
            "--resolutions",
            "1,2,4,8",
            "--trials",
            "100",
            "-o",
            str(output),
        ],
    )
    assert result.exit_code == 0, result.output
    with open(output, newline="") as fp:
        rows = list(csv.DictReader(fp))
    assert len(rows) == 4 * 7
    assert {row["resolution_ps"] for row in rows} == {"1", "2", "4", "8"}
    assert all(
        int(row["max_err_ps"]) == 0 for row in rows if row["resolution_ps"] == "1"
    )


@pytest.mark.parametrize(
    "extra", [["--trials", "0"], ["--trials", "5", "--resolutions", "8:4"]]
)
def test_sweep_errors(runner, e3_config, write_config, tmp_path, extra):
    args = ["sweep", "-c", write_config(e3_config), "-o", str(tmp_path / "s.csv")]
    if "--resolutions" not in extra:
        args += ["--resolutions", "1:4"]
    assert runner.invoke(blade, args + extra).exit_code == 1


@pytest.mark.parametrize(
    "text,expected",
    [
        ("1:4", [1, 2, 3, 4]),
        ("2:8:2", [2, 4, 6, 8]),
        ("1:16:x2", [1, 2, 4, 8, 16]),
        ("8,1,4,4", [1, 4, 8]),
    ],
)
def test_resolution_range(text, expected):
    assert ResolutionRange().convert(text, None, None) == expected


def test_area(runner):
    result = runner.invoke(blade, ["area", "-n", "3"])
    assert result.exit_code == 0
    assert "113.6" in result.output
    assert "102 " in result.output
    assert "11.37%" in result.output


def test_area_ten_stages(runner):
    result = runner.invoke(blade, ["area", "-n", "10"])
    assert "372.6" in result.output
    assert "340 " in result.output
    assert "9.59%" in result.output


def test_area_override_and_json(runner, tmp_path):
    output = tmp_path / "area.json"
    result = runner.invoke(
        blade, ["area", "-n", "3", "--override", "a_sqf=7", "-o", str(output)]
    )
    assert result.exit_code == 0
    assert "2.55%" in result.output
    document = json.loads(output.read_text())
    assert document["area"]["overhead"] == 2.55
    assert document["dft_cost"] == {"sqf_count": 12, "transistor_delta": 144}
    assert document["cell_library"]["a_sqf"] == 7.0


def test_area_json_on_stdout(runner):
    result = runner.invoke(blade, ["area", "-n", "3"])
    assert result.exit_code == 0
    document = json.loads(result.output[result.output.index("{") :])
    assert document["area"]["overhead"] == 11.37
    assert document["dft_cost"]["sqf_count"] == 12


@pytest.mark.parametrize(
    "args",
    [
        ["area", "-n", "0"],
        ["area", "-n", "3", "--override", "a_magic=1"],
        ["area", "-n", "3", "--override", "a_sqf"],
        ["area", "-n", "3", "--bits", "12"],
    ],
)
def test_area_errors(runner, args):
    assert runner.invoke(blade, args).exit_code == 1
