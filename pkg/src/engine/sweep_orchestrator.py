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

# File: src/engine/sweep_orchestrator.py (NOVO ARQUIVO)
# Author: Gabriel Moraes
# Date: 17 de Outubro de 2026

"""
Varredura da grade (γ, p).

As células são unidades independentes; cada uma usa seu próprio fluxo
aleatório (derive_cell_seed), e a superfície é montada por índice. Com
workers > 1 as células são distribuídas num multiprocessing.Pool; o resultado
é idêntico ao da execução sequencial.
"""

import logging
import multiprocessing

import psutil

from src.core.enums import SimulationMode
from src.core.errors import CellEvaluationError
from src.engine.cell_runner import run_cell
from src.engine.grid import GridSpec, SweepSurface
from src.engine.seeding import derive_cell_seed
from src.protocol.protocol_config import ProtocolConfig
from src.quantum.channels import NoiseModel, NoiseParams
from src.utils.metrics_manager import MetricsManager


def resolve_workers(workers: int) -> int:
    """0 = núcleos físicos da máquina (psutil), com mínimo de 1."""
    if workers and workers > 0:
        return int(workers)
    return psutil.cpu_count(logical=False) or 1


def _evaluate_task(task: tuple) -> tuple:
    """Função de topo (serializável) executada pelos processos do Pool."""
    index, i, j, gamma, p, cfg, mode, trials, seed, noise = task
    try:
        stats = run_cell(NoiseParams(gamma, p), cfg, mode, trials, seed, noise)
    except Exception as exc:
        raise CellEvaluationError(f"Falha ao avaliar a célula: {exc}", i, j, gamma, p) from exc
    return index, stats


def _build_tasks(grid: GridSpec, cfg: ProtocolConfig, mode: SimulationMode, noise: NoiseModel) -> list:
    return [
        (grid.index_of(i, j), i, j, gamma, p, cfg, mode, grid.trials,
         derive_cell_seed(grid.base_seed, i, j, grid.steps_p), noise)
        for i, j, gamma, p in grid.points()
    ]


def sweep(grid: GridSpec, cfg: ProtocolConfig, mode: SimulationMode, workers: int = 1,
          noise: NoiseModel = NoiseModel(), metrics: MetricsManager | None = None) -> SweepSurface:
    tasks = _build_tasks(grid, cfg, mode, noise)
    total = len(tasks)
    workers = min(resolve_workers(workers), total)
    logging.info(f"[SWEEP] Iniciando varredura {grid.steps_gamma}x{grid.steps_p} ({total} células), "
                 f"modo={mode.value}, tentativas={grid.trials}, rodadas={cfg.rounds}, processos={workers}.")

    cells = [None] * total
    report_every = max(1, total // 10)

    def collect(results):
        for done, (index, stats) in enumerate(results, start=1):
            cells[index] = stats
            if metrics is not None:
                metrics.record_cell(done, total)
            if done % report_every == 0 or done == total:
                logging.info(f"[SWEEP] {done}/{total} células concluídas ({100.0 * done / total:.0f}%).")

    if workers <= 1:
        collect(map(_evaluate_task, tasks))
    else:
        chunksize = max(1, total // (workers * 8))
        with multiprocessing.Pool(processes=workers) as pool:
            collect(pool.imap(_evaluate_task, tasks, chunksize=chunksize))

    logging.info("[SWEEP] Varredura concluída.")
    return SweepSurface(grid=grid, cells=tuple(cells))
