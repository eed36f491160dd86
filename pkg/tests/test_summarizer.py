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

# File: tests/test_summarizer.py
# Author: Gabriel Moraes
# Date: 17 de Outubro de 2026

import numpy as np
import pytest

from src.core.enums import SimulationMode
from src.engine.grid import GridSpec
from src.engine.summarizer import level_crossings, summarize, tradeoff_checks
from src.engine.sweep_orchestrator import sweep
from src.protocol.protocol_config import ProtocolConfig

GRID_11 = GridSpec(steps_gamma=11, steps_p=11, trials=10)


def test_noiseless_surface_summary():
    grid = GridSpec(gamma_min=0.0, gamma_max=0.0, steps_gamma=2, p_min=0.0, p_max=0.0, steps_p=2, trials=10)
    summary = summarize(sweep(grid, ProtocolConfig(), SimulationMode.EXACT))
    delta_f = summary.extrema["delta_f"]
    assert delta_f.max_value == pytest.approx(0.0, abs=1e-12)
    assert (delta_f.max_gamma, delta_f.max_p) == (0.0, 0.0)


def test_extrema_locations(surface_factory):
    surface = surface_factory(GRID_11, delta_f=lambda g, p: g - 2 * p, y_purify=lambda g, p: 1 - g - p)
    summary = summarize(surface, levels={})
    df = summary.extrema["delta_f"]
    assert (df.max_gamma, df.max_p) == pytest.approx((0.2, 0.0))
    assert (df.min_gamma, df.min_p) == pytest.approx((0.0, 0.2))
    assert summary.extrema["y_purify"].min_value == pytest.approx(0.6)


def test_level_crossing_band(surface_factory):
    surface = surface_factory(GRID_11, y_purify=lambda g, p: 1 - 2 * (g + p))
    crossing = level_crossings(surface, "y_purify", 0.85)
    assert not crossing.empty
    assert crossing.min_gamma_plus_p == pytest.approx(0.075, abs=1e-12)
    assert crossing.max_gamma_plus_p == pytest.approx(0.075, abs=1e-12)
    for edge in crossing.edges:
        assert abs(edge.node_a[0] - edge.node_b[0]) + abs(edge.node_a[1] - edge.node_b[1]) == 1


def test_level_outside_range_has_no_crossings(surface_factory):
    surface = surface_factory(GRID_11, delta_f=lambda g, p: 0.01)
    crossing = level_crossings(surface, "delta_f", 0.5)
    assert crossing.empty
    assert np.isnan(crossing.min_gamma_plus_p)


def test_tradeoff_checks_flags(surface_factory):
    surface = surface_factory(
        GRID_11,
        f_noisy=lambda g, p: 1 - g - p,
        delta_f=lambda g, p: g + p,
        delta_y=lambda g, p: -(g + p),
    )
    checks = tradeoff_checks(surface)
    assert checks == {
        "delta_y_nonpositive": True,
        "delta_f_nonnegative_where_f_noisy_above_half": True,
        "delta_f_max_at_max_noise_corner": True,
    }

    peaked = surface_factory(GRID_11, f_noisy=lambda g, p: 0.9, delta_f=lambda g, p: -((g - 0.1) ** 2))
    checks = tradeoff_checks(peaked)
    assert not checks["delta_f_max_at_max_noise_corner"]
    assert not checks["delta_f_nonnegative_where_f_noisy_above_half"]


@pytest.mark.slow
def test_default_exact_surface_tradeoff():
    surface = sweep(GridSpec(), ProtocolConfig(), SimulationMode.EXACT)
    checks = tradeoff_checks(surface)
    assert checks["delta_y_nonpositive"]
    assert checks["delta_f_nonnegative_where_f_noisy_above_half"]
    # o máximo de ΔF não cai no canto (0.2, 0.2) nesta convenção; só é relatado
    assert isinstance(checks["delta_f_max_at_max_noise_corner"], bool)
    assert surface.cell(20, 20).delta_f == pytest.approx(0.035, abs=0.005)


def test_summary_serializes(surface_factory):
    surface = surface_factory(GRID_11, delta_f=lambda g, p: g + p, y_purify=lambda g, p: 1 - (g + p))
    document = summarize(surface).to_dict()
    assert set(document) == {"extrema", "crossings", "checks"}
    assert {c["field"] for c in document["crossings"]} == {"delta_f", "y_purify"}
