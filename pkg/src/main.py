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

# File: src/main.py
# Author: Gabriel Moraes
# Date: 17 de Outubro de 2026

"""
Orquestração de uma execução completa do DESTILA a partir de um RunConfig:
varredura, superfície, resumo, curvas de nível, gráficos e, quando pedidos,
a tabela de comparação e a análise de vazão.

Nomes dos arquivos gerados (PREFIX = --out):
  PREFIX.csv | PREFIX.json        superfície
  PREFIX_summary.json             resumo + impressão digital + RunConfig
  PREFIX_<campo>.dat              dados para superfícies 3D
  PREFIX_contour_<campo>.svg      mapas de curvas de nível
  PREFIX_slice_<eixo>_<v>.csv     cortes
  PREFIX_comparison.csv           (--compare)
  PREFIX_throughput.csv           (--throughput)
"""

import logging
import time

from src.analysis.comparison_table import build_comparison_table
from src.analysis.contour_extractor import extract_contours
from src.analysis.throughput_analyzer import analyze_throughput
from src.engine.summarizer import summarize
from src.engine.sweep_orchestrator import sweep
from src.export.surface_writer import write_json, write_surface, write_table
from src.quantum.channels import NoiseParams
from src.rendering.plot_emitter import emit_plots
from src.utils.cli_parser import RunConfig
from src.utils.metrics_manager import MetricsManager
from src.utils.paths import resolve_output_path


def run_simulation(config: RunConfig) -> list:
    """
    Executa a configuração e retorna a lista de arquivos escritos, na ordem
    em que foram gerados.
    """
    start = time.monotonic()
    prefix = resolve_output_path(config.out_prefix)
    logging.debug(f"[MAIN] RunConfig resolvido: {config.to_dict()}")

    metrics = None
    if config.metrics_port is not None:
        metrics = MetricsManager("destila", config.metrics_port)

    surface = sweep(config.grid, config.protocol, config.mode, workers=config.workers,
                    noise=config.noise, metrics=metrics)

    written = []
    surface_path = f"{prefix}.{config.output_format.value}"
    digest = write_surface(surface, config.output_format, surface_path, run_config=config.to_dict())
    written.append(surface_path)

    levels = {name: tuple(values) for name, values in config.contours.items()} or None
    summary = summarize(surface, levels)
    summary_path = f"{prefix}_summary.json"
    write_json({"fingerprint_xxh64": digest, "run_config": config.to_dict(), **summary.to_dict()},
               summary_path, "o resumo da superfície")
    written.append(summary_path)

    contours = []
    for name, values in config.contours.items():
        contours.extend(extract_contours(surface, name, values))

    if config.plots:
        written.extend(emit_plots(surface, contours, prefix, config.slices))

    if config.compare:
        table = build_comparison_table(config.grid, config.protocol, config.noise,
                                       config.reference_headlines, workers=config.workers)
        path = f"{prefix}_comparison.csv"
        write_table(table, path, "a tabela de comparação")
        written.append(path)

    if config.throughput is not None:
        request = config.throughput
        report = analyze_throughput(NoiseParams(request.gamma, request.p), config.protocol, request.max_rounds,
                                    noise=config.noise, target_fidelity=request.target_fidelity)
        path = f"{prefix}_throughput.csv"
        write_table(report.frame, path, "a tabela de vazão")
        written.append(path)

    logging.info(f"[MAIN] Execução concluída em {time.monotonic() - start:.1f}s; {len(written)} arquivo(s) escritos.")
    return written
