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

# File: src/core/errors.py (NOVO ARQUIVO)
# Author: Gabriel Moraes
# Date: 17 de Outubro de 2026

"""
Hierarquia de exceções do DESTILA.

As funções da biblioteca apenas lançam; somente o lançador (destila.py)
converte exceções em códigos de saída:
    UsageError  -> 1
    OutputError -> 2
    qualquer outra -> 3 (registrada como CRITICAL)
"""


class DestilaError(Exception):
    """Base de todas as exceções do projeto."""


class UsageError(DestilaError, ValueError):
    """Parâmetro, dimensão ou flag inválida."""

    def __init__(self, message: str, parameter: str | None = None):
        super().__init__(message, parameter)
        self.message = message
        self.parameter = parameter

    def __str__(self) -> str:
        return self.message


class OutputError(DestilaError, OSError):
    """Falha ao escrever um arquivo de saída."""

    def __init__(self, message: str, path: str | None = None):
        super().__init__(message, path)
        self.message = message
        self.path = path

    def __str__(self) -> str:
        return self.message


class CellEvaluationError(DestilaError):
    """
    Falha ao avaliar uma célula da grade (γ, p).

    Todos os campos vão para args para que a exceção sobreviva ao pickle
    entre os processos do Pool.
    """

    def __init__(self, message: str, gamma_index: int | None = None, p_index: int | None = None,
                 gamma: float | None = None, p: float | None = None):
        super().__init__(message, gamma_index, p_index, gamma, p)
        self.message = message
        self.gamma_index = gamma_index
        self.p_index = p_index
        self.gamma = gamma
        self.p = p

    def __str__(self) -> str:
        return (f"{self.message} (célula i={self.gamma_index}, j={self.p_index}, "
                f"gamma={self.gamma}, p={self.p})")
