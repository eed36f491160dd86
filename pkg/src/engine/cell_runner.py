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

# File: src/engine/cell_runner.py (NOVO ARQUIVO)
# Author: Gabriel Moraes
# Date: 17 de Outubro de 2026

"""
Avaliação de uma célula (γ, p) da grade.

Cada tentativa gera dois pares ruidosos idênticos, aplica as rodadas de
purificação e registra o evento de sucesso e a fidelidade do sobrevivente.
Três estimadores:
    exact   - probabilidades do circuito usadas diretamente (erros padrão zero);
    mc-fast - circuito resolvido uma vez e só o sucesso sorteado (Bernoulli);
    mc-full - resultado de medição sorteado por tentativa e por rodada.

Com k rodadas, cada rodada purifica duas cópias do sobrevivente da rodada
anterior (estado condicionado ao sucesso); o rendimento é o produto dos
rendimentos por rodada.
"""

import logging

import numpy as np

from src.core.enums import SimulationMode
from src.core.errors import UsageError
from src.engine.grid import CellStats
from src.engine.seeding import cell_rng
from src.protocol.circuit import RoundSampler, circuit_round
from src.protocol.protocol_config import ProtocolConfig
from src.quantum.bell import target_state
from src.quantum.channels import NoiseModel, NoiseParams, apply_pair_noise
from src.quantum.qmat import DensityMatrix, pure_fidelity


def noisy_pair(params: NoiseParams, noise: NoiseModel = NoiseModel()) -> DensityMatrix:
    """|Φ+⟩⟨Φ+| após o ruído do canal."""
    return apply_pair_noise(DensityMatrix.from_pure(target_state()), params, noise.order, noise.target)


def exact_rounds(rho: DensityMatrix, cfg: ProtocolConfig) -> list:
    """
    Resolve as rodadas exatamente.

    Retorna a lista de CircuitOutcome; a lista termina antes de cfg.rounds se
    uma rodada for degenerada (sem estado condicional).
    """
    outcomes = []
    current = rho
    for _ in range(cfg.rounds):
        outcome = circuit_round(current, current, cfg)
        outcomes.append(outcome)
        if outcome.degenerate:
            break
        current = outcome.post_state
    return outcomes


def _cumulative_yield(outcomes: list, rounds: int) -> float:
    if len(outcomes) < rounds:
        return 0.0
    return float(np.prod([o.success_probability for o in outcomes]))


def _sample_full(rng: np.random.Generator, outcomes: list, rounds: int, trials: int) -> tuple:
    alive = np.ones(trials, dtype=bool)
    fidelities = np.full(trials, np.nan)
    for outcome in outcomes:
        success, fidelities = RoundSampler(outcome).sample_many(rng, trials)
        alive &= success
    if len(outcomes) < rounds:
        alive[:] = False
    return alive, fidelities


def run_cell(params: NoiseParams, cfg: ProtocolConfig, mode: SimulationMode, trials: int, seed: int,
             noise: NoiseModel = NoiseModel()) -> CellStats:
    if isinstance(trials, bool) or not isinstance(trials, int) or trials < 1:
        raise UsageError(f"O número de tentativas deve ser >= 1, recebido {trials!r}.", "trials")

    rho_noisy = noisy_pair(params, noise)
    f_noisy = pure_fidelity(rho_noisy, target_state())
    outcomes = exact_rounds(rho_noisy, cfg)
    exact_yield = _cumulative_yield(outcomes, cfg.rounds)
    exact_fidelity = outcomes[-1].fidelity if len(outcomes) == cfg.rounds else float("nan")

    if mode is SimulationMode.EXACT:
        y_purify = exact_yield
        f_purify = exact_fidelity
        successes = int(round(exact_yield * trials))
        stderr_f = 0.0 if not np.isnan(f_purify) else float("nan")
        stderr_y = 0.0

    elif mode is SimulationMode.MC_FAST:
        rng = cell_rng(seed)
        successes = int(np.count_nonzero(rng.random(trials) < exact_yield))
        y_purify = successes / trials
        f_purify = exact_fidelity if successes > 0 else float("nan")
        stderr_f = 0.0 if successes > 0 else float("nan")
        stderr_y = float(np.sqrt(y_purify * (1.0 - y_purify) / trials))

    elif mode is SimulationMode.MC_FULL:
        rng = cell_rng(seed)
        alive, fidelities = _sample_full(rng, outcomes, cfg.rounds, trials)
        survivors = fidelities[alive]
        successes = int(survivors.size)
        y_purify = successes / trials
        f_purify = float(np.mean(survivors)) if successes > 0 else float("nan")
        stderr_f = float(np.std(survivors, ddof=1) / np.sqrt(successes)) if successes > 1 else float("nan")
        stderr_y = float(np.sqrt(y_purify * (1.0 - y_purify) / trials))

    else:
        raise UsageError(f"Modo de simulação desconhecido: {mode!r}.", "mode")

    if successes == 0 and mode is not SimulationMode.EXACT:
        logging.warning(f"[CELL] γ={params.gamma:g} p={params.p:g}: nenhuma tentativa bem-sucedida "
                       f"em {trials}; f_purify indefinida.")

    stats = CellStats(
        gamma=params.gamma,
        p=params.p,
        f_noisy=f_noisy,
        f_purify=f_purify,
        y_purify=y_purify,
        delta_f=f_purify - f_noisy,
        delta_y=y_purify - 1.0,
        stderr_f=stderr_f,
        stderr_y=stderr_y,
        successes=successes,
        trials=trials,
    )
    logging.debug(f"[CELL] γ={params.gamma:g} p={params.p:g} modo={mode.value} F_noisy={f_noisy:.6f} "
                 f"F_purify={f_purify:.6f} Y={y_purify:.6f} sucessos={successes}/{trials}")
    return stats
