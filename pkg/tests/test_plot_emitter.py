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

# File: tests/test_plot_emitter.py
# Author: Gabriel Moraes
# Date: 17 de Outubro de 2026

import numpy as np
import pandas as pd
import pytest
from lxml import etree

from src.analysis.contour_extractor import extract_contours
from src.core.enums import SimulationMode
from src.core.errors import OutputError, UsageError
from src.engine.grid import GridSpec
from src.engine.sweep_orchestrator import sweep
from src.protocol.protocol_config import ProtocolConfig
from src.rendering.plot_emitter import emit_plots, write_contour_svg, write_cross_section, write_surface_data

SVG_NS = "{http://www.w3.org/2000/svg}"


def test_surface_data_layout(tmp_path, surface_factory):
    surface = surface_factory(GridSpec(), delta_f=lambda g, p: g * p)
    path = tmp_path / "delta_f.dat"
    write_surface_data(surface, "delta_f", str(path))
    lines = path.read_text(encoding="utf-8").split("\n")
    assert lines[0] == "# gamma p delta_f"
    body = lines[1:-1]
    assert sum(1 for line in body if line == "") == 20
    data = [line.split() for line in body if line]
    assert len(data) == 441
    assert all(len(fields) == 3 for fields in data)
    assert [float(v) for v in data[22]] == pytest.approx([0.01, 0.01, 0.0001])


def test_contour_svg_has_one_path_group_per_polyline(tmp_path, surface_factory):
    grid = GridSpec(steps_gamma=11, steps_p=11, trials=10)
    surface = surface_factory(grid, delta_f=lambda g, p: np.sin(20 * g) * np.cos(20 * p))
    sets = extract_contours(surface, "delta_f", [0.0, 0.5])
    path = tmp_path / "contour.svg"
    write_contour_svg(surface, sets, str(path))

    tree = etree.parse(str(path))
    groups = [g for g in tree.iter(f"{SVG_NS}g") if (g.get("id") or "").startswith("contour-delta_f-")]
    expected = sum(len(s.polylines) for s in sets)
    assert expected > 0
    assert len(groups) == expected
    for group in groups:
        assert len(list(group.iter(f"{SVG_NS}path"))) == 1


def test_contour_svg_is_reproducible(tmp_path, surface_factory):
    grid = GridSpec(steps_gamma=5, steps_p=5, trials=10)
    surface = surface_factory(grid, y_purify=lambda g, p: 1 - g - p)
    sets = extract_contours(surface, "y_purify", [0.8])
    a, b = tmp_path / "a.svg", tmp_path / "b.svg"
    write_contour_svg(surface, sets, str(a))
    write_contour_svg(surface, sets, str(b))
    assert a.read_bytes() == b.read_bytes()


def test_cross_section_matches_dephasing_baseline(tmp_path):
    grid = GridSpec(gamma_min=0.0, gamma_max=0.2, steps_gamma=2, steps_p=21, trials=10)
    surface = sweep(grid, ProtocolConfig(), SimulationMode.EXACT)
    path = tmp_path / "slice.csv"
    assert write_cross_section(surface, "gamma", 0.0, str(path)) == 0.0
    frame = pd.read_csv(path)
    assert len(frame) == 21
    p = frame["p"].to_numpy()
    np.testing.assert_allclose(frame["f_noisy"].to_numpy(), 1 - 2 * p + 2 * p ** 2, atol=1e-11)


def test_cross_section_uses_nearest_line(tmp_path, surface_factory):
    surface = surface_factory(GridSpec())
    assert write_cross_section(surface, "p", 0.013, str(tmp_path / "s.csv")) == pytest.approx(0.01)
    with pytest.raises(UsageError):
        write_cross_section(surface, "x", 0.0, str(tmp_path / "bad.csv"))


def test_emit_plots_names(tmp_path, surface_factory):
    grid = GridSpec(steps_gamma=5, steps_p=5, trials=10)
    surface = surface_factory(grid, delta_f=lambda g, p: g + p)
    sets = extract_contours(surface, "delta_f", [0.1])
    prefix = str(tmp_path / "out" / "run")
    written = emit_plots(surface, sets, prefix, slices=[("gamma", 0.1), ("p", 0.0)])
    names = sorted(p.rsplit("/", 1)[-1] for p in written)
    assert names == sorted([
        "run_f_noisy.dat", "run_f_purify.dat", "run_y_purify.dat", "run_delta_f.dat", "run_delta_y.dat",
        "run_contour_delta_f.svg", "run_slice_gamma_0.1.csv", "run_slice_p_0.csv",
    ])


def test_unwritable_plot_path(tmp_path, surface_factory):
    blocker = tmp_path / "blocker"
    blocker.write_text("x")
    surface = surface_factory(GridSpec(steps_gamma=2, steps_p=2, trials=1))
    with pytest.raises(OutputError):
        write_surface_data(surface, "delta_f", str(blocker / "x.dat"))
