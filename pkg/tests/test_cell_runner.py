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

# File: tests/test_cell_runner.py
# Author: Gabriel Moraes
# Date: 17 de Outubro de 2026

import logging
import math

import numpy as np
import pytest

from src.core.enums import PermutationObjective, SimulationMode, SuccessCriterion
from src.core.errors import UsageError
from src.engine.cell_runner import exact_rounds, noisy_pair, run_cell
from src.protocol.protocol_config import ProtocolConfig
from src.quantum.channels import NoiseParams

EXACT_Y = 0.7048
EXACT_F = 0.6724 / 0.7048
THREE_SIGMA = 3 * math.sqrt(EXACT_Y * (1 - EXACT_Y) / 10_000)


@pytest.mark.parametrize("mode", list(SimulationMode))
def test_noiseless_corner(mode):
    stats = run_cell(NoiseParams(0.0, 0.0), ProtocolConfig(), mode, 500, seed=1)
    assert stats.f_noisy == pytest.approx(1.0)
    assert stats.f_purify == pytest.approx(1.0)
    assert stats.y_purify == pytest.approx(1.0)
    assert stats.delta_f == pytest.approx(0.0, abs=1e-12)
    assert stats.delta_y == pytest.approx(0.0, abs=1e-12)
    assert stats.successes == 500


def test_exact_dephased_cell():
    stats = run_cell(NoiseParams(0.0, 0.1), ProtocolConfig(), SimulationMode.EXACT, 10_000, seed=0)
    assert stats.f_noisy == pytest.approx(0.82, abs=1e-12)
    assert stats.y_purify == pytest.approx(EXACT_Y, abs=1e-12)
    assert stats.f_purify == pytest.approx(EXACT_F, abs=1e-10)
    assert stats.successes == 7048
    assert stats.stderr_f == 0.0
    assert stats.stderr_y == 0.0


def test_paper_literal_keeps_full_yield_on_pure_dephasing():
    cfg = ProtocolConfig(permutation_objective=PermutationObjective.PAPER_LITERAL)
    stats = run_cell(NoiseParams(0.0, 0.1), cfg, SimulationMode.EXACT, 100, seed=0)
    assert stats.y_purify == pytest.approx(1.0, abs=1e-12)
    assert stats.f_purify == pytest.approx(0.7048, abs=1e-12)


def test_mc_full_is_reproducible():
    a = run_cell(NoiseParams(0.1, 0.1), ProtocolConfig(), SimulationMode.MC_FULL, 2_000, seed=99)
    b = run_cell(NoiseParams(0.1, 0.1), ProtocolConfig(), SimulationMode.MC_FULL, 2_000, seed=99)
    assert a == b


def test_mc_full_within_binomial_bound():
    stats = run_cell(NoiseParams(0.0, 0.1), ProtocolConfig(), SimulationMode.MC_FULL, 10_000, seed=0)
    assert abs(stats.y_purify - EXACT_Y) <= THREE_SIGMA
    assert stats.stderr_y == pytest.approx(math.sqrt(stats.y_purify * (1 - stats.y_purify) / 10_000))
    assert stats.f_purify == pytest.approx(EXACT_F, abs=1e-10)


@pytest.mark.slow
def test_mc_full_binomial_bound_over_many_seeds():
    inside = 0
    for seed in range(100):
        stats = run_cell(NoiseParams(0.0, 0.1), ProtocolConfig(), SimulationMode.MC_FULL, 10_000, seed=seed)
        inside += abs(stats.y_purify - EXACT_Y) <= THREE_SIGMA
    assert inside >= 99


def test_mc_fast_uses_exact_fidelity():
    stats = run_cell(NoiseParams(0.0, 0.1), ProtocolConfig(), SimulationMode.MC_FAST, 10_000, seed=3)
    assert abs(stats.y_purify - EXACT_Y) <= THREE_SIGMA
    assert stats.f_purify == pytest.approx(EXACT_F, abs=1e-10)
    assert stats.stderr_f == 0.0


def test_multi_round_exact_cell_multiplies_yields():
    cfg = ProtocolConfig(rounds=3)
    outcomes = exact_rounds(noisy_pair(NoiseParams(0.1, 0.1)), cfg)
    stats = run_cell(NoiseParams(0.1, 0.1), cfg, SimulationMode.EXACT, 100, seed=0)
    assert len(outcomes) == 3
    assert stats.y_purify == pytest.approx(np.prod([o.success_probability for o in outcomes]))
    assert stats.f_purify == pytest.approx(outcomes[-1].fidelity)
    single = run_cell(NoiseParams(0.1, 0.1), ProtocolConfig(), SimulationMode.EXACT, 100, seed=0)
    assert stats.f_purify > single.f_purify
    assert stats.y_purify < single.y_purify


def test_zero_successes_leave_fidelity_undefined(caplog):
    # só o resultado 00 é aceito: sucesso com probabilidade 1/2 numa única tentativa
    params = NoiseParams(0.0, 0.5)
    cfg = ProtocolConfig(success_criterion=SuccessCriterion.BOTH_ZERO)
    with caplog.at_level(logging.WARNING):
        for seed in range(64):
            stats = run_cell(params, cfg, SimulationMode.MC_FULL, 1, seed=seed)
            if stats.successes == 0:
                break
    assert stats.successes == 0
    assert np.isnan(stats.f_purify)
    assert np.isnan(stats.delta_f)
    assert np.isnan(stats.stderr_f)
    assert stats.y_purify == 0.0
    assert "nenhuma tentativa" in caplog.text
    # avisos vão direto ao logger raiz
    assert {record.name for record in caplog.records} == {"root"}


@pytest.mark.parametrize("trials", [0, -5])
def test_trials_must_be_positive(trials):
    with pytest.raises(UsageError):
        run_cell(NoiseParams(0.0, 0.0), ProtocolConfig(), SimulationMode.EXACT, trials, seed=0)
