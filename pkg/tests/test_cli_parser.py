# DESTILA (DEJMPS Entanglement Simulation of Two-parameter Infidelity and Loss Analysis) is an open-source Monte Carlo toolkit for entanglement purification under amplitude-damping and dephasing noise.
# Copyright (C) 2025 Gabriel Moraes - Noxfort Labs
#
# This program is free software: you can redistribute it and/or modify
# it under the terms of the GNU Affero General Public License as
# published by the Free Software Foundation, either version 3 of the
# License, or (at your option) any later version.
#
# This program is distributed in the hope that it will be useful,
# but WITHOUT ANY WARRANTY; without even the implied warranty of
# MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
# GNU Affero General Public License for more details.
#
# You should have received a copy of the GNU Affero General Public License
# along with this program.  If not, see <https://www.gnu.org/licenses/>.

# File: tests/test_cli_parser.py
# Author: Gabriel Moraes
# Date: 17 de Outubro de 2026

import pytest

from src.analysis.comparison_table import ReferenceHeadlines
from src.core.enums import (NoiseOrder, NoiseTarget, OutputFormat, PermutationObjective, SimulationMode,
                            SuccessCriterion)
from src.core.errors import UsageError
from src.engine.grid import GridSpec
from src.utils.cli_parser import ThroughputRequest, build_parser, parse_cli
from src.utils.settings_manager import BUILTIN_DEFAULTS, SettingsManager


def test_defaults():
    config = parse_cli([])
    assert config.grid == GridSpec()
    assert config.protocol.rounds == 1
    assert config.protocol.permutation_objective is PermutationObjective.FIDELITY
    assert config.protocol.success_criterion is SuccessCriterion.COINCIDENT
    assert config.mode is SimulationMode.MC_FULL
    assert config.noise.order is NoiseOrder.AD_FIRST
    assert config.noise.target is NoiseTarget.BOTH
    assert config.output_format is OutputFormat.CSV
    assert config.reference_headlines == ReferenceHeadlines()
    assert config.throughput is None
    assert not config.compare


def test_grid_flags_echo():
    config = parse_cli(["--gamma", "0:0.2:21", "--p", "0:0.2:21", "--trials", "10000", "--seed", "7"])
    assert config.grid == GridSpec(trials=10_000, base_seed=7)


def test_protocol_and_output_flags():
    config = parse_cli([
        "--rounds", "2", "--mode", "exact", "--objective", "paper-literal", "--criterion", "both-zero",
        "--noise-order", "deph-first", "--noise-target", "second-only", "--out", "x/run", "--format", "json",
        "--contour", "delta_f=0.01,0.02", "--contour", "delta_f=0.05", "--slice", "p=0.1", "--no-plots",
        "--compare", "--throughput", "0.1,0.05,4,0.95", "--workers", "2",
    ])
    assert config.protocol.rounds == 2
    assert config.mode is SimulationMode.EXACT
    assert config.protocol.permutation_objective is PermutationObjective.PAPER_LITERAL
    assert config.protocol.success_criterion is SuccessCriterion.BOTH_ZERO
    assert config.noise.order is NoiseOrder.DEPH_FIRST
    assert config.noise.target is NoiseTarget.SECOND_ONLY
    assert config.out_prefix == "x/run"
    assert config.output_format is OutputFormat.JSON
    assert config.contours == {"delta_f": (0.01, 0.02, 0.05)}
    assert config.slices == (("p", 0.1),)
    assert not config.plots
    assert config.compare
    assert config.throughput == ThroughputRequest(0.1, 0.05, 4, 0.95)
    assert config.workers == 2


def test_contours_and_slices_from_settings():
    config = parse_cli([])
    assert config.contours == {"delta_f": (0.01, 0.02, 0.03), "y_purify": (0.7, 0.8, 0.9)}
    assert config.slices == (("gamma", 0.0), ("p", 0.0))


@pytest.mark.parametrize("args, flag", [
    (["--trials", "0"], "--trials"),
    (["--gamma", "0.3:0.2:21"], "--gamma"),
    (["--p", "0:1.5:3"], "--p"),
    (["--p", "0:0.2"], "--p"),
    (["--seed", "-1"], "--seed"),
    (["--mode", "fast"], "--mode"),
    (["--contour", "stderr_f=0.1"], "--contour"),
    (["--slice", "q=0.1"], "--slice"),
    (["--throughput", "0.1"], "--throughput"),
    (["--bogus"], "--bogus"),
])
def test_usage_errors_name_the_flag(args, flag):
    with pytest.raises(UsageError) as info:
        parse_cli(args)
    assert info.value.parameter == flag


def test_abbreviations_are_rejected():
    with pytest.raises(UsageError):
        parse_cli(["--tri", "10"])


def test_every_flag_is_documented():
    help_text = build_parser(SettingsManager()).format_help()
    for flag in ("--gamma", "--p", "--trials", "--seed", "--rounds", "--mode", "--objective", "--criterion",
                 "--noise-order", "--noise-target", "--out", "--format", "--contour", "--slice",
                 "--compare", "--throughput", "--config", "--workers", "--log-dir", "--metrics-port"):
        assert flag in help_text


def test_config_file_overrides_defaults(tmp_path):
    ini = tmp_path / "custom.ini"
    ini.write_text(
        "[SIMULATION]\ntrials = 321\nmode = exact\n\n"
        "[OUTPUT]\ncontours =\nslices =\n\n"
        "[COMPARISON]\nreference_delta_f = 0.05\n",
        encoding="utf-8",
    )
    config = parse_cli(["--config", str(ini)])
    assert config.grid.trials == 321
    assert config.mode is SimulationMode.EXACT
    assert config.contours == {}
    assert config.slices == ()
    assert config.reference_headlines.delta_f == 0.05
    assert config.config_path == str(ini)
    assert parse_cli(["--config", str(ini), "--trials", "5"]).grid.trials == 5


def test_missing_explicit_config_is_usage_error(tmp_path):
    with pytest.raises(UsageError) as info:
        parse_cli(["--config", str(tmp_path / "missing.ini")])
    assert info.value.parameter == "--config"


def test_invalid_setting_value(tmp_path):
    ini = tmp_path / "bad.ini"
    ini.write_text("[SIMULATION]\nmode = turbo\n", encoding="utf-8")
    with pytest.raises(UsageError) as info:
        parse_cli(["--config", str(ini)])
    assert info.value.parameter == "SIMULATION.mode"


def test_run_config_serializes():
    document = parse_cli(["--seed", "3"]).to_dict()
    assert document["grid"]["base_seed"] == 3
    assert document["protocol"] == {"objective": "fidelity", "criterion": "coincident", "rounds": 1}
    assert document["noise"] == {"order": "ad-first", "target": "both"}


def test_worker_default_matches_builtin():
    assert SettingsManager().getint("SIMULATION", "workers") == int(BUILTIN_DEFAULTS["SIMULATION"]["workers"]) == 1
    assert parse_cli([]).workers == 1
