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

# File: src/utils/metrics_manager.py
# Author: Gabriel Moraes
# Date: 17 de Outubro de 2026

"""
Define o MetricsManager, que expõe o progresso de uma varredura para o
Prometheus. Cada instância tem seu próprio CollectorRegistry, então várias
varreduras no mesmo processo (ex.: a tabela de comparação) não colidem.
"""

import logging
import threading

import psutil
from prometheus_client import CollectorRegistry, Counter, Gauge, start_http_server

CELLS_COMPLETED = "destila_cells_completed"
SWEEP_PROGRESS = "destila_sweep_progress_ratio"
PROCESS_MEMORY = "destila_process_memory_percent"


class MetricsManager:
    """
    Cria, atualiza e expõe métricas do Prometheus para um processo.
    """

    def __init__(self, process_name: str, port: int, start: bool = True):
        """
        Args:
            process_name (str): Rótulo 'process_name' das métricas (ex: 'DESTILA_SWEEP').
            port (int): Porta TCP do servidor de métricas.
            start (bool): Se False, as métricas existem mas nenhum servidor é iniciado.
        """
        self.process_name = process_name
        self.port = port
        self.registry = CollectorRegistry()
        self.metrics = {}
        self._process = psutil.Process()
        self._server_thread = None

        self.register_metric(CELLS_COMPLETED, "Células da grade (γ, p) já avaliadas.", "counter")
        self.register_metric(SWEEP_PROGRESS, "Fração da varredura concluída.", "gauge")
        self.register_metric(PROCESS_MEMORY, "Uso de memória do processo (%).", "gauge")

        if start:
            self.start_server()

    def start_server(self) -> threading.Thread:
        """Inicia o servidor HTTP do Prometheus numa thread daemon e retorna a thread."""
        self._server_thread = threading.Thread(target=self._serve, daemon=True)
        self._server_thread.start()
        return self._server_thread

    def _serve(self):
        # falhas de bind (ex.: porta ocupada) acontecem aqui, dentro da thread
        try:
            start_http_server(self.port, registry=self.registry)
            logging.info(f"[{self.process_name}-METRICS] Servidor Prometheus iniciado na porta {self.port}")
        except Exception as e:
            logging.error(f"[{self.process_name}-METRICS] Falha ao iniciar o servidor Prometheus: {e}")

    def register_metric(self, name: str, description: str, metric_type: str = "gauge"):
        if name in self.metrics:
            return
        if metric_type == "gauge":
            metric = Gauge(name, description, labelnames=["process_name"], registry=self.registry)
        elif metric_type == "counter":
            metric = Counter(name, description, labelnames=["process_name"], registry=self.registry)
        else:
            logging.warning(f"[{self.process_name}-METRICS] Tipo de métrica desconhecido: {metric_type}")
            return
        self.metrics[name] = metric
        logging.debug(f"[{self.process_name}-METRICS] Métrica '{name}' registrada.")

    def update_metric(self, name: str, value: float):
        """Gauges recebem o valor; counters são incrementados por ele."""
        metric = self.metrics.get(name)
        if metric is None:
            return
        if isinstance(metric, Gauge):
            metric.labels(process_name=self.process_name).set(value)
        else:
            metric.labels(process_name=self.process_name).inc(value)

    def record_cell(self, completed: int, total: int):
        """Atualiza as três métricas da varredura após uma célula."""
        self.update_metric(CELLS_COMPLETED, 1)
        self.update_metric(SWEEP_PROGRESS, completed / total if total else 1.0)
        self.update_metric(PROCESS_MEMORY, self._process.memory_percent())

    def sample_value(self, name: str) -> float | None:
        """Valor atual de uma métrica (counters usam o sufixo _total)."""
        sample = name + "_total" if isinstance(self.metrics.get(name), Counter) else name
        return self.registry.get_sample_value(sample, {"process_name": self.process_name})
