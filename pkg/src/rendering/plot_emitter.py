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

# File: src/rendering/plot_emitter.py (NOVO ARQUIVO)
# Author: Gabriel Moraes
# Date: 17 de Outubro de 2026

"""
Emite os artefatos gráficos de uma superfície:

    <prefixo>_<campo>.dat            dados de superfície 3D ("γ p valor" por linha,
                                     linha em branco entre linhas de γ; gnuplot splot)
    <prefixo>_contour_<campo>.svg    mapa de contornos (matplotlib, backend SVG)
    <prefixo>_slice_<eixo>_<v>.csv   corte ao longo da linha de grade mais próxima
"""

import logging
import os

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt
import numpy as np

from src.core.errors import OutputError, UsageError
from src.engine.grid import SweepSurface

SURFACE_DATA_FIELDS = ("f_noisy", "f_purify", "y_purify", "delta_f", "delta_y")
SLICE_AXES = ("gamma", "p")

_SVG_SALT = "destila"

_FIELD_LABELS = {
    "f_noisy": "F_noisy",
    "f_purify": "F_purify",
    "y_purify": "Y_purify",
    "delta_f": "ΔF",
    "delta_y": "ΔY",
}


def _format(value: float) -> str:
    return "nan" if np.isnan(value) else "%.12g" % value


def _ensure_parent(path: str):
    os.makedirs(os.path.dirname(os.path.abspath(path)), exist_ok=True)


def write_surface_data(surface: SweepSurface, field: str, path: str):
    gammas, ps = surface.grid.gamma_values(), surface.grid.p_values()
    values = surface.field_grid(field)
    blocks = []
    for i, gamma in enumerate(gammas):
        blocks.append("\n".join(f"{_format(gamma)} {_format(p)} {_format(values[i, j])}"
                                for j, p in enumerate(ps)))
    text = f"# gamma p {field}\n" + "\n\n".join(blocks) + "\n"
    try:
        _ensure_parent(path)
        with open(path, "w", encoding="utf-8", newline="\n") as f:
            f.write(text)
    except OSError as e:
        raise OutputError(f"Não foi possível escrever '{path}': {e}", path) from e


def write_contour_svg(surface: SweepSurface, contour_sets: list, path: str):
    """Um Line2D por polilinha, com gid contour-<campo>-<nível>-<polilinha>."""
    field = contour_sets[0].field if contour_sets else "contour"
    grid = surface.grid
    with plt.rc_context({"svg.hashsalt": _SVG_SALT, "svg.fonttype": "none"}):
        fig, ax = plt.subplots(figsize=(6.4, 5.2))
        try:
            cmap = plt.get_cmap("viridis")
            for li, contour_set in enumerate(contour_sets):
                color = cmap(li / max(1, len(contour_sets) - 1))
                for pi, polyline in enumerate(contour_set.polylines):
                    xs = [v[0] for v in polyline]
                    ys = [v[1] for v in polyline]
                    (line,) = ax.plot(xs, ys, color=color, linewidth=1.5)
                    line.set_gid(f"contour-{field}-{li}-{pi}")
                    if pi == 0:
                        mid = polyline[len(polyline) // 2]
                        ax.annotate(f"{contour_set.level:g}", xy=mid, fontsize=8, color=color)
            ax.set_xlim(grid.gamma_min, grid.gamma_max)
            ax.set_ylim(grid.p_min, grid.p_max)
            ax.set_xlabel("γ (amortecimento de amplitude)")
            ax.set_ylabel("p (defasagem)")
            ax.set_title(f"Curvas de nível de {_FIELD_LABELS.get(field, field)}")
            ax.grid(True, linewidth=0.3, alpha=0.5)
            _ensure_parent(path)
            fig.savefig(path, format="svg", metadata={"Date": None})
        except OSError as e:
            raise OutputError(f"Não foi possível escrever '{path}': {e}", path) from e
        finally:
            plt.close(fig)


def nearest_line(surface: SweepSurface, axis: str, value: float) -> int:
    axis_values = surface.grid.gamma_values() if axis == "gamma" else surface.grid.p_values()
    return int(np.argmin(np.abs(axis_values - value)))


def write_cross_section(surface: SweepSurface, axis: str, value: float, path: str) -> float:
    """Escreve o corte e retorna a coordenada real da linha usada."""
    if axis not in SLICE_AXES:
        raise UsageError(f"Eixo de corte inválido: '{axis}'.", "--slice")
    index = nearest_line(surface, axis, value)
    grid = surface.grid
    frame = surface.to_frame()
    if axis == "gamma":
        rows = frame.iloc[[grid.index_of(index, j) for j in range(grid.steps_p)]]
        actual = float(grid.gamma_values()[index])
    else:
        rows = frame.iloc[[grid.index_of(i, index) for i in range(grid.steps_gamma)]]
        actual = float(grid.p_values()[index])
    try:
        _ensure_parent(path)
        rows.to_csv(path, index=False, float_format="%.12g", na_rep="", lineterminator="\n")
    except OSError as e:
        raise OutputError(f"Não foi possível escrever '{path}': {e}", path) from e
    if abs(actual - value) > 1e-12:
        logging.info(f"[PLOTS] Corte {axis}={value:g} usa a linha de grade mais próxima, {axis}={actual:g}.")
    return actual


def emit_plots(surface: SweepSurface, contours: list, prefix: str, slices=()) -> list:
    """
    Gera todos os artefatos e retorna os caminhos escritos.

    :param contours: lista de ContourSet (de um ou mais campos).
    :param slices: pares (eixo, valor), eixo em {"gamma", "p"}.
    """
    written = []
    for field in SURFACE_DATA_FIELDS:
        path = f"{prefix}_{field}.dat"
        write_surface_data(surface, field, path)
        written.append(path)

    by_field = {}
    for contour_set in contours:
        by_field.setdefault(contour_set.field, []).append(contour_set)
    for field, sets in by_field.items():
        path = f"{prefix}_contour_{field}.svg"
        write_contour_svg(surface, sets, path)
        written.append(path)

    for axis, value in slices:
        path = f"{prefix}_slice_{axis}_{value:g}.csv"
        write_cross_section(surface, axis, value, path)
        written.append(path)

    logging.info(f"[PLOTS] {len(written)} arquivo(s) gráficos gerados com o prefixo '{prefix}'.")
    return written
