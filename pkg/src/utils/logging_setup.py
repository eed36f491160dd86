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

# File: src/utils/logging_setup.py
# Author: Gabriel Moraes
# Date: 17 de Outubro de 2026

"""
Configura o logging do DESTILA: arquivo UTF-8 com tudo (DEBUG) e console
com o nível escolhido (INFO por padrão).
"""
import logging
import os
import sys

LOG_FORMAT = '%(asctime)s [%(levelname)s] - %(message)s'
LOG_FILE_NAME = 'console_output.log'


def setup_logging(log_dir: str, console_level: str = "INFO") -> str:
    """
    Configura o logger raiz e retorna o caminho do arquivo de log.

    O arquivo grava desde DEBUG; o console mostra a partir de `console_level`.
    """
    os.makedirs(log_dir, exist_ok=True)
    log_file_path = os.path.join(log_dir, LOG_FILE_NAME)

    log_formatter = logging.Formatter(LOG_FORMAT)

    root_logger = logging.getLogger()
    # O logger raiz deixa tudo passar; os handlers filtram.
    root_logger.setLevel(logging.DEBUG)

    # Limpa handlers existentes para evitar duplicação de logs
    if root_logger.hasHandlers():
        root_logger.handlers.clear()

    file_handler = logging.FileHandler(log_file_path, encoding='utf-8')
    file_handler.setFormatter(log_formatter)
    file_handler.setLevel(logging.DEBUG)
    root_logger.addHandler(file_handler)

    console_handler = logging.StreamHandler(sys.stdout)
    console_handler.setFormatter(log_formatter)
    console_handler.setLevel(getattr(logging, str(console_level).upper(), logging.INFO))
    root_logger.addHandler(console_handler)

    # matplotlib é muito verboso em DEBUG (fontes)
    logging.getLogger('matplotlib').setLevel(logging.WARNING)

    def handle_exception(exc_type, exc_value, exc_traceback):
        if issubclass(exc_type, KeyboardInterrupt):
            sys.__excepthook__(exc_type, exc_value, exc_traceback)
            return
        root_logger.critical("Exceção não tratada:", exc_info=(exc_type, exc_value, exc_traceback))

    sys.excepthook = handle_exception

    logging.info("Sistema de Logging (UTF-8) configurado.")
    logging.debug(f"Logger configurado. FileHandler=DEBUG ({log_file_path}), StreamHandler={console_level}.")
    return log_file_path
