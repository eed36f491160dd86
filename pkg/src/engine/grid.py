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

# File: src/engine/grid.py (NOVO ARQUIVO)
# Author: Gabriel Moraes
# Date: 17 de Outubro de 2026

"""
Tipos de dados da varredura: a grade (γ, p), as estatísticas por célula e a
superfície completa.

As células são armazenadas em ordem row-major: γ no laço externo (índice i),
p no laço interno (índice j); a célula (i, j) está em cells[i * steps_p + j].
"""

from dataclasses import asdict, dataclass
from typing import Iterator

import numpy as np
import pandas as pd

from src.core.errors import UsageError

SEED_LIMIT = 2 ** 64

CSV_COLUMNS = (
    "gamma", "p", "f_noisy", "f_purify", "y_purify", "delta_f", "delta_y",
    "stderr_f", "stderr_y", "successes", "trials",
)

SURFACE_FIELDS = ("f_noisy", "f_purify", "y_purify", "delta_f", "delta_y", "stderr_f", "stderr_y")


def _axis(lo: float, hi: float, steps: int) -> np.ndarray:
    return np.array([lo + i * (hi - lo) / (steps - 1) for i in range(steps)], dtype=float)


@dataclass(frozen=True)
class GridSpec:
    gamma_min: float = 0.0
    gamma_max: float = 0.2
    steps_gamma: int = 21
    p_min: float = 0.0
    p_max: float = 0.2
    steps_p: int = 21
    trials: int = 10_000
    base_seed: int = 0

    def __post_init__(self):
        for axis in ("gamma", "p"):
            lo = getattr(self, f"{axis}_min")
            hi = getattr(self, f"{axis}_max")
            steps = getattr(self, f"steps_{axis}")
            if not (0.0 <= lo <= 1.0 and 0.0 <= hi <= 1.0):
                raise UsageError(f"Limites de '{axis}' devem estar em [0, 1]: {lo}:{hi}.", f"--{axis}")
            if lo > hi:
                raise UsageError(f"Mínimo maior que o máximo em '{axis}': {lo} > {hi}.", f"--{axis}")
            if isinstance(steps, bool) or not isinstance(steps, int) or steps < 2:
                raise UsageError(f"'{axis}' precisa de ao menos 2 passos, recebido {steps!r}.", f"--{axis}")
        if isinstance(self.trials, bool) or not isinstance(self.trials, int) or self.trials < 1:
            raise UsageError(f"O número de tentativas deve ser >= 1, recebido {self.trials!r}.", "--trials")
        if isinstance(self.base_seed, bool) or not isinstance(self.base_seed, int) \
                or not 0 <= self.base_seed < SEED_LIMIT:
            raise UsageError(f"A semente deve ser um inteiro de 64 bits sem sinal, recebido {self.base_seed!r}.",
                             "--seed")

    @property
    def cell_count(self) -> int:
        return self.steps_gamma * self.steps_p

    def gamma_values(self) -> np.ndarray:
        return _axis(self.gamma_min, self.gamma_max, self.steps_gamma)

    def p_values(self) -> np.ndarray:
        return _axis(self.p_min, self.p_max, self.steps_p)

    def index_of(self, i: int, j: int) -> int:
        return i * self.steps_p + j

    def points(self) -> Iterator[tuple]:
        """Gera (i, j, gamma, p) em ordem row-major."""
        gammas, ps = self.gamma_values(), self.p_values()
        for i, gamma in enumerate(gammas):
            for j, p in enumerate(ps):
                yield i, j, float(gamma), float(p)

    def to_dict(self) -> dict:
        return asdict(self)


@dataclass(frozen=True)
class CellStats:
    """
    Estatísticas de uma célula. NaN marca valores indefinidos
    (f_purify e stderr_f de uma célula sem sucessos).
    """
    gamma: float
    p: float
    f_noisy: float
    f_purify: float
    y_purify: float
    delta_f: float
    delta_y: float
    stderr_f: float
    stderr_y: float
    successes: int
    trials: int

    def as_row(self) -> dict:
        return {column: getattr(self, column) for column in CSV_COLUMNS}


@dataclass(frozen=True)
class SweepSurface:
    grid: GridSpec
    cells: tuple

    def __post_init__(self):
        object.__setattr__(self, "cells", tuple(self.cells))
        if len(self.cells) != self.grid.cell_count:
            raise UsageError(
                f"Superfície com {len(self.cells)} células para uma grade de {self.grid.cell_count}.", "cells")

    def cell(self, i: int, j: int) -> CellStats:
        return self.cells[self.grid.index_of(i, j)]

    def field_grid(self, field: str) -> np.ndarray:
        """Matriz (steps_gamma, steps_p) com os valores de um campo."""
        if field not in SURFACE_FIELDS:
            raise UsageError(f"Campo desconhecido: '{field}'. Opções: {', '.join(SURFACE_FIELDS)}.", "field")
        values = np.array([getattr(c, field) for c in self.cells], dtype=float)
        return values.reshape(self.grid.steps_gamma, self.grid.steps_p)

    def to_frame(self) -> pd.DataFrame:
        frame = pd.DataFrame([c.as_row() for c in self.cells], columns=list(CSV_COLUMNS))
        return frame.astype({"successes": "int64", "trials": "int64"})
