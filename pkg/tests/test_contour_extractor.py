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

# File: tests/test_contour_extractor.py
# Author: Gabriel Moraes
# Date: 17 de Outubro de 2026

import numpy as np
import pytest

from src.analysis.contour_extractor import extract_contours, marching_squares
from src.core.errors import UsageError
from src.engine.grid import GridSpec


def _rounded(polyline) -> set:
    return {(round(x, 9), round(y, 9)) for x, y in polyline}


def test_constant_field_has_no_contours():
    xs = ys = np.linspace(0.0, 1.0, 5)
    values = np.full((5, 5), 0.3)
    assert marching_squares(xs, ys, values, 0.5) == []
    assert marching_squares(xs, ys, values, 0.1) == []


def test_anti_diagonal_level_set():
    grid = GridSpec()
    xs, ys = grid.gamma_values(), grid.p_values()
    values = xs[:, None] + ys[None, :]
    polylines = marching_squares(xs, ys, values, 0.2)
    assert len(polylines) == 1
    for x, y in polylines[0]:
        assert abs(x + y - 0.2) < 0.01
        assert 0.0 <= x <= 0.2 and 0.0 <= y <= 0.2
    assert len(polylines[0]) >= 2


def test_level_on_grid_nodes_passes_through_them():
    xs = ys = np.array([0.0, 1.0, 2.0])
    values = np.repeat(xs[:, None], 3, axis=1)
    polylines = marching_squares(xs, ys, values, 1.0)
    assert len(polylines) == 1
    assert _rounded(polylines[0]) == {(1.0, 0.0), (1.0, 1.0), (1.0, 2.0)}


def test_saddle_follows_the_center_value():
    xs = ys = np.array([0.0, 1.0])
    values = np.array([[1.0, 0.0], [0.0, 1.0]])

    # centro = 0.5 >= nível: os cantos baixos ficam isolados
    polylines = marching_squares(xs, ys, values, 0.5)
    assert {frozenset(_rounded(p)) for p in polylines} == {
        frozenset({(0.5, 0.0), (1.0, 0.5)}),
        frozenset({(0.5, 1.0), (0.0, 0.5)}),
    }

    # centro < nível: os cantos altos ficam isolados
    polylines = marching_squares(xs, ys, values, 0.6)
    assert {frozenset(_rounded(p)) for p in polylines} == {
        frozenset({(0.0, 0.4), (0.4, 0.0)}),
        frozenset({(1.0, 0.6), (0.6, 1.0)}),
    }


def test_vertices_lie_on_cell_edges():
    xs = ys = np.linspace(0.0, 1.0, 9)
    values = np.sin(3 * xs[:, None]) * np.cos(4 * ys[None, :])
    for polyline in marching_squares(xs, ys, values, 0.2):
        for x, y in polyline:
            on_x_line = np.min(np.abs(xs - x)) < 1e-12
            on_y_line = np.min(np.abs(ys - y)) < 1e-12
            assert on_x_line or on_y_line


def test_nan_cells_are_skipped():
    xs = ys = np.array([0.0, 1.0, 2.0])
    values = np.array([[0.0, 0.0, np.nan], [1.0, 1.0, 1.0], [2.0, 2.0, 2.0]])
    polylines = marching_squares(xs, ys, values, 0.5)
    assert len(polylines) == 1
    assert _rounded(polylines[0]) == {(0.5, 0.0), (0.5, 1.0)}


def test_extract_contours_per_level(surface_factory):
    grid = GridSpec(steps_gamma=11, steps_p=11, trials=10)
    surface = surface_factory(grid, delta_f=lambda g, p: g + p)
    sets = extract_contours(surface, "delta_f", [0.1, 0.3, 5.0])
    assert [s.level for s in sets] == [0.1, 0.3, 5.0]
    assert not sets[0].empty
    assert not sets[1].empty
    assert sets[2].empty


def test_extract_contours_rejects_unknown_field(surface_factory):
    surface = surface_factory(GridSpec(steps_gamma=2, steps_p=2, trials=1))
    with pytest.raises(UsageError) as info:
        extract_contours(surface, "stderr_f", [0.1])
    assert info.value.parameter == "--contour"
