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

# File: src/utils/settings_manager.py
# Author: Gabriel Moraes
# Date: 17 de Outubro de 2026

"""
Define o SettingsManager, responsável por ler o settings.ini e fornecer os
padrões tipados da linha de comando.
"""

import configparser
import logging
import os

from src.core.errors import UsageError
from src.utils.paths import resource_path

DEFAULT_CONFIG_PATH = os.path.join("config", "settings.ini")

# Padrões embutidos, usados quando o settings.ini falta ou omite uma chave.
BUILTIN_DEFAULTS = {
    "GRID": {
        "gamma_min": "0.0", "gamma_max": "0.2", "gamma_steps": "21",
        "p_min": "0.0", "p_max": "0.2", "p_steps": "21",
    },
    "SIMULATION": {"trials": "10000", "seed": "0", "mode": "mc-full", "workers": "1"},
    "PROTOCOL": {"rounds": "1", "objective": "fidelity", "criterion": "coincident"},
    "NOISE": {"order": "ad-first", "target": "both"},
    "OUTPUT": {
        "out_prefix": "results/destila", "format": "csv",
        "contours": "", "slices": "", "plots": "True",
    },
    "COMPARISON": {"reference_delta_f": "0.07", "reference_delta_y": "-0.55", "reference_min_f_purify": "0.9"},
    "LOGGING": {"log_dir": "logs/destila", "console_level": "INFO"},
    "METRICS": {"enabled": "False", "port": "9108"},
}


class SettingsManager:
    """
    Leitura do settings.ini com fallback para os padrões embutidos.
    """

    def __init__(self, config_path: str | None = None):
        """
        :param config_path: caminho explícito (flag --config). Sem ele, usa o
                            config/settings.ini do projeto (ou do bundle).
        """
        explicit = config_path is not None
        self.config_path = config_path if explicit else resource_path(DEFAULT_CONFIG_PATH)
        self.config = configparser.ConfigParser()
        self.config.read_dict(BUILTIN_DEFAULTS)

        if os.path.exists(self.config_path):
            self.config.read(self.config_path, encoding="utf-8")
            logging.debug(f"[SettingsManager] Configurações lidas de: {self.config_path}")
        elif explicit:
            raise UsageError(f"Arquivo de configuração não encontrado: {self.config_path}", "--config")
        else:
            logging.error(f"Arquivo de configuração não encontrado em {self.config_path}; usando padrões embutidos.")

    def get(self, section: str, key: str) -> str:
        return self.config.get(section, key, fallback=BUILTIN_DEFAULTS[section][key]).strip()

    def getint(self, section: str, key: str) -> int:
        return self._typed(self.config.getint, section, key)

    def getfloat(self, section: str, key: str) -> float:
        return self._typed(self.config.getfloat, section, key)

    def getboolean(self, section: str, key: str) -> bool:
        return self._typed(self.config.getboolean, section, key)

    def _typed(self, getter, section: str, key: str):
        try:
            return getter(section, key)
        except ValueError as e:
            raise UsageError(f"Valor inválido para [{section}] {key} em {self.config_path}: {e}",
                             f"{section}.{key}") from e
