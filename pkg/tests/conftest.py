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

# File: tests/conftest.py
# Author: Gabriel Moraes
# Date: 17 de Outubro de 2026

import numpy as np
import pytest

from src.engine.grid import CSV_COLUMNS, CellStats, GridSpec, SweepSurface


@pytest.fixture
def small_grid():
    return GridSpec(gamma_min=0.0, gamma_max=0.2, steps_gamma=3, p_min=0.0, p_max=0.2, steps_p=3,
                    trials=200, base_seed=11)


@pytest.fixture
def surface_factory():
    """
    Superfícies sintéticas: cada campo recebe um callable f(gamma, p);
    os campos omitidos valem 0.0 e successes = trials.
    """

    def build(grid: GridSpec, **fields) -> SweepSurface:
        cells = []
        for _, _, gamma, p in grid.points():
            row = {"gamma": gamma, "p": p, "successes": grid.trials, "trials": grid.trials}
            for column in CSV_COLUMNS:
                if column not in row:
                    fn = fields.get(column)
                    row[column] = float(fn(gamma, p)) if fn is not None else 0.0
            cells.append(CellStats(**row))
        return SweepSurface(grid=grid, cells=tuple(cells))

    return build


@pytest.fixture
def rng():
    return np.random.default_rng(20261017)
