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

# File: src/engine/seeding.py (NOVO ARQUIVO)
# Author: Gabriel Moraes
# Date: 17 de Outubro de 2026

"""
Sementes por célula.

semente(i, j) = splitmix64(base ⊕ (i·steps_p + j))

O finalizador do splitmix64 é uma bijeção sobre inteiros de 64 bits e o
índice linear é injetivo na grade, então sementes de células distintas
nunca colidem para uma mesma semente base. A conta é feita em inteiros do
Python (mascarados em 64 bits), idêntica em qualquer plataforma.
"""

import numpy as np

_MASK64 = 0xFFFFFFFFFFFFFFFF


def splitmix64(value: int) -> int:
    z = (value + 0x9E3779B97F4A7C15) & _MASK64
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
    return z ^ (z >> 31)


def derive_cell_seed(base_seed: int, i: int, j: int, steps_p: int) -> int:
    return splitmix64((base_seed ^ (i * steps_p + j)) & _MASK64)


def cell_rng(seed: int) -> np.random.Generator:
    """Fluxo aleatório privado de uma célula (PCG64 via default_rng)."""
    return np.random.default_rng(seed)
