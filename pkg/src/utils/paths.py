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

# File: src/utils/paths.py
# Author: Gabriel Moraes
# Date: 17 de Outubro de 2026

"""
Funções utilitárias para caminhos de arquivos, compatíveis com o executável
gerado pelo PyInstaller (--onefile).
"""

import os
import sys


def resource_path(relative_path: str) -> str:
    """
    Caminho absoluto de um recurso empacotado (ex.: config/settings.ini),
    tanto em desenvolvimento quanto dentro do bundle do PyInstaller.
    """
    try:
        # PyInstaller extrai os dados numa pasta temporária indicada por _MEIPASS
        base_path = sys._MEIPASS
    except AttributeError:
        base_path = os.path.abspath(os.path.join(os.path.dirname(__file__), "..", ".."))
    return os.path.join(base_path, relative_path)


def get_base_output_dir() -> str:
    """
    Diretório base das saídas (resultados e logs): a raiz do projeto em
    desenvolvimento, ou a pasta do executável quando empacotado.
    """
    if getattr(sys, "frozen", False) and hasattr(sys, "_MEIPASS"):
        return os.path.dirname(sys.executable)
    return os.path.abspath(os.path.join(os.path.dirname(__file__), "..", ".."))


def resolve_output_path(path: str) -> str:
    """Caminhos relativos são resolvidos a partir de get_base_output_dir()."""
    if os.path.isabs(path):
        return path
    return os.path.join(get_base_output_dir(), path)
