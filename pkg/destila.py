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

# File: destila.py
# Author: Gabriel Moraes
# Date: 17 de Outubro de 2026

"""
Lançador do DESTILA.

Códigos de saída: 0 sucesso, 1 erro de uso, 2 erro de E/S,
3 falha inesperada (registrada como CRITICAL com o traceback).
"""

import multiprocessing
import os
import sys

# --- Adiciona a raiz do projeto ao sys.path APENAS no modo de desenvolvimento ---
IS_FROZEN = getattr(sys, 'frozen', False) and hasattr(sys, '_MEIPASS')
if not IS_FROZEN:
    project_root_dev = os.path.dirname(os.path.abspath(__file__))
    if project_root_dev not in sys.path:
        sys.path.insert(0, project_root_dev)
# --- Fim ---

import logging

from src.core.errors import OutputError, UsageError
from src.main import run_simulation
from src.utils.cli_parser import parse_cli
from src.utils.logging_setup import setup_logging
from src.utils.paths import resolve_output_path

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_OUTPUT = 2
EXIT_FAILURE = 3


def main(argv: list | None = None) -> int:
    # Erros de uso acontecem antes do logging existir; vão direto para o stderr.
    try:
        config = parse_cli(argv)
    except UsageError as e:
        print(f"destila: erro: {e}", file=sys.stderr)
        return EXIT_USAGE

    try:
        log_file = setup_logging(resolve_output_path(config.log_dir), config.log_level)
    except OSError as e:
        print(f"destila: erro: não foi possível criar o diretório de logs '{config.log_dir}': {e}", file=sys.stderr)
        return EXIT_OUTPUT
    logging.info(f"--- DESTILA INICIADO (log: {log_file}) ---")

    try:
        written = run_simulation(config)
    except UsageError as e:
        logging.error(f"[CLI] Erro de uso: {e}")
        return EXIT_USAGE
    except OutputError as e:
        logging.error(f"[EXPORT] Erro de E/S: {e}")
        return EXIT_OUTPUT
    except KeyboardInterrupt:
        logging.warning("Execução interrompida pelo usuário.")
        return EXIT_FAILURE
    except Exception as e:
        logging.critical(f"Falha inesperada: {e}", exc_info=True)
        return EXIT_FAILURE

    for path in written:
        logging.debug(f"   -> {path}")
    logging.info("--- DESTILA FINALIZADO ---")
    return EXIT_OK


if __name__ == "__main__":
    multiprocessing.freeze_support()
    sys.exit(main())
