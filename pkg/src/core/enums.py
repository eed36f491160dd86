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

# File: src/core/enums.py
# Author: Gabriel Moraes
# Date: 17 de Outubro de 2026

"""
Define enumerações (Enums) compartilhadas pelo núcleo da simulação.

Isoladas num módulo sem dependências para que o protocolo, o motor de
Monte Carlo e a CLI possam importá-las sem ciclos. O valor de cada membro é
exatamente o texto aceito na linha de comando e no settings.ini.
"""

from enum import Enum


class PermutationObjective(Enum):
    """Critério usado para reposicionar os coeficientes de Bell antes da rodada."""
    FIDELITY = "fidelity"
    YIELD = "yield"
    PAPER_LITERAL = "paper-literal"
    NONE = "none"


class SuccessCriterion(Enum):
    """Regra de pós-seleção aplicada às medições dos qubits alvo."""
    COINCIDENT = "coincident"
    BOTH_ZERO = "both-zero"


class SimulationMode(Enum):
    """Estimador usado em cada célula da varredura."""
    EXACT = "exact"
    MC_FAST = "mc-fast"
    MC_FULL = "mc-full"


class NoiseOrder(Enum):
    """Ordem de aplicação dos canais em cada qubit."""
    AD_FIRST = "ad-first"
    DEPH_FIRST = "deph-first"


class NoiseTarget(Enum):
    """Quais fótons do par recebem ruído."""
    BOTH = "both"
    SECOND_ONLY = "second-only"


class OutputFormat(Enum):
    CSV = "csv"
    JSON = "json"


def enum_choices(enum_cls) -> list:
    """Retorna os textos aceitos por um Enum, na ordem de declaração."""
    return [member.value for member in enum_cls]
