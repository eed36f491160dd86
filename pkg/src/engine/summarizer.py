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

# File: src/engine/summarizer.py (NOVO ARQUIVO)
# Author: Gabriel Moraes
# Date: 17 de Outubro de 2026

"""
Resumo de uma superfície: extremos dos campos, cruzamentos de níveis ao longo
das linhas da grade e verificações qualitativas da troca fidelidade/rendimento.
"""

import logging
from dataclasses import asdict, dataclass, field

import numpy as np

from src.engine.grid import SweepSurface

DEFAULT_LEVELS = {"delta_f": (0.03,), "y_purify": (0.7,)}
EXTREMA_FIELDS = ("f_purify", "y_purify", "delta_f", "delta_y")

_CHECK_TOL = 1e-12


@dataclass(frozen=True)
class FieldExtrema:
    field: str
    max_value: float
    max_gamma: float
    max_p: float
    min_value: float
    min_gamma: float
    min_p: float


@dataclass(frozen=True)
class StraddlingEdge:
    """Aresta da grade entre dois nós em lados opostos do nível."""
    node_a: tuple
    node_b: tuple
    crossing_gamma: float
    crossing_p: float


@dataclass(frozen=True)
class LevelCrossing:
    field: str
    level: float
    edges: tuple
    min_gamma_plus_p: float
    max_gamma_plus_p: float

    @property
    def empty(self) -> bool:
        return not self.edges


@dataclass(frozen=True)
class SurfaceSummary:
    extrema: dict
    crossings: tuple
    checks: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {
            "extrema": {name: asdict(e) for name, e in self.extrema.items()},
            "crossings": [
                {
                    "field": c.field,
                    "level": c.level,
                    "min_gamma_plus_p": c.min_gamma_plus_p,
                    "max_gamma_plus_p": c.max_gamma_plus_p,
                    "edges": [asdict(e) for e in c.edges],
                }
                for c in self.crossings
            ],
            "checks": dict(self.checks),
        }


def _extrema(surface: SweepSurface, name: str) -> FieldExtrema:
    values = surface.field_grid(name)
    gammas, ps = surface.grid.gamma_values(), surface.grid.p_values()
    if np.all(np.isnan(values)):
        nan = float("nan")
        return FieldExtrema(name, nan, nan, nan, nan, nan, nan)
    i_max, j_max = np.unravel_index(np.nanargmax(values), values.shape)
    i_min, j_min = np.unravel_index(np.nanargmin(values), values.shape)
    return FieldExtrema(
        field=name,
        max_value=float(values[i_max, j_max]), max_gamma=float(gammas[i_max]), max_p=float(ps[j_max]),
        min_value=float(values[i_min, j_min]), min_gamma=float(gammas[i_min]), min_p=float(ps[j_min]),
    )


def level_crossings(surface: SweepSurface, name: str, level: float) -> LevelCrossing:
    """Arestas (ao longo de γ e de p) cujos extremos ficam em lados opostos do nível."""
    values = surface.field_grid(name)
    gammas, ps = surface.grid.gamma_values(), surface.grid.p_values()
    n_g, n_p = values.shape
    edges = []

    def consider(a: tuple, b: tuple):
        va, vb = values[a], values[b]
        if np.isnan(va) or np.isnan(vb) or (va >= level) == (vb >= level):
            return
        t = (level - va) / (vb - va)
        gamma = gammas[a[0]] + t * (gammas[b[0]] - gammas[a[0]])
        p = ps[a[1]] + t * (ps[b[1]] - ps[a[1]])
        edges.append(StraddlingEdge((int(a[0]), int(a[1])), (int(b[0]), int(b[1])), float(gamma), float(p)))

    for i in range(n_g):
        for j in range(n_p):
            if i + 1 < n_g:
                consider((i, j), (i + 1, j))
            if j + 1 < n_p:
                consider((i, j), (i, j + 1))

    sums = [e.crossing_gamma + e.crossing_p for e in edges]
    return LevelCrossing(
        field=name,
        level=float(level),
        edges=tuple(edges),
        min_gamma_plus_p=float(min(sums)) if sums else float("nan"),
        max_gamma_plus_p=float(max(sums)) if sums else float("nan"),
    )


def tradeoff_checks(surface: SweepSurface) -> dict:
    """Verificações qualitativas; relatadas, não impostas."""
    f_noisy = surface.field_grid("f_noisy")
    delta_f = surface.field_grid("delta_f")
    delta_y = surface.field_grid("delta_y")

    defined_dy = delta_y[~np.isnan(delta_y)]
    above_half = (f_noisy > 0.5) & ~np.isnan(delta_f)

    if np.all(np.isnan(delta_f)):
        corner_is_max = False
    else:
        corner_is_max = bool(delta_f[-1, -1] >= np.nanmax(delta_f) - _CHECK_TOL)

    return {
        "delta_y_nonpositive": bool(np.all(defined_dy <= _CHECK_TOL)),
        "delta_f_nonnegative_where_f_noisy_above_half": bool(np.all(delta_f[above_half] >= -_CHECK_TOL)),
        "delta_f_max_at_max_noise_corner": corner_is_max,
    }


def summarize(surface: SweepSurface, levels: dict | None = None) -> SurfaceSummary:
    levels = DEFAULT_LEVELS if levels is None else levels
    extrema = {name: _extrema(surface, name) for name in EXTREMA_FIELDS}
    crossings = tuple(
        level_crossings(surface, name, level)
        for name, field_levels in levels.items()
        for level in field_levels
    )
    checks = tradeoff_checks(surface)

    df = extrema["delta_f"]
    dy = extrema["delta_y"]
    logging.info(f"[SUMMARY] ΔF máx = {df.max_value:.4f} em (γ={df.max_gamma:g}, p={df.max_p:g}); "
                 f"ΔY mín = {dy.min_value:.4f} em (γ={dy.min_gamma:g}, p={dy.min_p:g}).")
    for c in crossings:
        if c.empty:
            logging.info(f"[SUMMARY] Nível {c.field} = {c.level:g}: sem cruzamentos na grade.")
        else:
            logging.info(f"[SUMMARY] Nível {c.field} = {c.level:g}: {len(c.edges)} arestas, "
                         f"γ+p entre {c.min_gamma_plus_p:.4f} e {c.max_gamma_plus_p:.4f}.")
    for name, ok in checks.items():
        logging.log(logging.INFO if ok else logging.WARNING, f"[SUMMARY] {name}: {'OK' if ok else 'FALHOU'}")

    return SurfaceSummary(extrema=extrema, crossings=crossings, checks=checks)
