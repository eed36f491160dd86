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

# File: src/analysis/contour_extractor.py (NOVO ARQUIVO)
# Author: Gabriel Moraes
# Date: 17 de Outubro de 2026

"""
Extração de curvas de nível por marching squares sobre a grade (γ, p).

Cantos de uma célula (i, j):
    c0 = (i, j)   c1 = (i+1, j)   c2 = (i+1, j+1)   c3 = (i, j+1)
Arestas: e0 = c0-c1, e1 = c1-c2, e2 = c2-c3, e3 = c3-c0.

Um nó está "acima" se valor >= nível. Os pontos de cruzamento são obtidos
por interpolação linear ao longo da aresta, então todo vértice fica sobre
uma aresta da grade. Na ambiguidade de sela (cantos alternados) a média dos
quatro cantos decide a conectividade: se o centro está do lado de c0, os
cantos c1 e c3 ficam isolados, senão c0 e c2 ficam isolados.

Os segmentos são costurados em polilinhas pelos extremos (arredondados em 12
casas decimais); curvas fechadas repetem o primeiro vértice no final.
"""

import logging
from collections import defaultdict
from dataclasses import dataclass

import numpy as np

from src.core.errors import UsageError
from src.engine.grid import SweepSurface

CONTOUR_FIELDS = ("f_purify", "y_purify", "delta_f", "delta_y")

_KEY_DECIMALS = 12

_EDGE_CORNERS = ((0, 1), (1, 2), (2, 3), (3, 0))


@dataclass(frozen=True)
class ContourSet:
    field: str
    level: float
    polylines: tuple

    @property
    def empty(self) -> bool:
        return not self.polylines


def _cell_segments(xs, ys, values, i, j, level) -> list:
    corners = ((i, j), (i + 1, j), (i + 1, j + 1), (i, j + 1))
    vals = [values[c] for c in corners]
    if any(np.isnan(v) for v in vals):
        return []
    above = [v >= level for v in vals]
    if all(above) or not any(above):
        return []

    def crossing(edge: int) -> tuple:
        a, b = _EDGE_CORNERS[edge]
        (ia, ja), (ib, jb) = corners[a], corners[b]
        t = (level - vals[a]) / (vals[b] - vals[a])
        return (float(xs[ia] + t * (xs[ib] - xs[ia])), float(ys[ja] + t * (ys[jb] - ys[ja])))

    crossed = [e for e, (a, b) in enumerate(_EDGE_CORNERS) if above[a] != above[b]]
    if len(crossed) == 2:
        return [(crossing(crossed[0]), crossing(crossed[1]))]

    # sela
    center_above = float(np.mean(vals)) >= level
    if center_above == above[0]:
        pairs = ((0, 1), (2, 3))
    else:
        pairs = ((3, 0), (1, 2))
    return [(crossing(a), crossing(b)) for a, b in pairs]


def _key(point: tuple) -> tuple:
    return (round(point[0], _KEY_DECIMALS), round(point[1], _KEY_DECIMALS))


def _stitch(segments: list) -> list:
    """Une segmentos com extremos comuns em polilinhas; ordem determinística."""
    points = {}
    adjacency = defaultdict(list)
    edges = []
    for a, b in segments:
        ka, kb = _key(a), _key(b)
        if ka == kb:
            continue
        points.setdefault(ka, a)
        points.setdefault(kb, b)
        edge_id = len(edges)
        edges.append((ka, kb))
        adjacency[ka].append(edge_id)
        adjacency[kb].append(edge_id)

    used = [False] * len(edges)

    def walk(start) -> list:
        chain = [start]
        current = start
        while True:
            next_edge = next((e for e in adjacency[current] if not used[e]), None)
            if next_edge is None:
                return chain
            used[next_edge] = True
            ka, kb = edges[next_edge]
            current = kb if ka == current else ka
            chain.append(current)

    polylines = []
    # extremos abertos primeiro (grau ímpar), depois os ciclos
    order = [k for k in adjacency if len(adjacency[k]) % 2 == 1] + list(adjacency)
    for start in order:
        while any(not used[e] for e in adjacency[start]):
            chain = walk(start)
            if len(chain) >= 2:
                polylines.append(tuple(points[k] for k in chain))
    return polylines


def marching_squares(xs, ys, values, level: float) -> list:
    """
    Curvas de nível de `values` (shape len(xs) x len(ys)).

    Returns:
        list: polilinhas, cada uma uma tupla de vértices (x, y).
    """
    xs = np.asarray(xs, dtype=float)
    ys = np.asarray(ys, dtype=float)
    values = np.asarray(values, dtype=float)
    if values.shape != (xs.size, ys.size):
        raise UsageError(f"Campo com shape {values.shape} incompatível com os eixos ({xs.size}, {ys.size}).",
                         "values")
    segments = []
    for i in range(xs.size - 1):
        for j in range(ys.size - 1):
            segments.extend(_cell_segments(xs, ys, values, i, j, level))
    return _stitch(segments)


def extract_contours(surface: SweepSurface, field: str, levels) -> list:
    """Um ContourSet por nível; nível fora da faixa do campo gera um conjunto vazio."""
    if field not in CONTOUR_FIELDS:
        raise UsageError(f"Campo de contorno inválido: '{field}'. Opções: {', '.join(CONTOUR_FIELDS)}.",
                         "--contour")
    xs, ys = surface.grid.gamma_values(), surface.grid.p_values()
    values = surface.field_grid(field)
    contour_sets = []
    for level in levels:
        polylines = marching_squares(xs, ys, values, float(level))
        logging.info(f"[CONTOURS] {field} = {float(level):g}: {len(polylines)} polilinha(s).")
        contour_sets.append(ContourSet(field=field, level=float(level), polylines=tuple(polylines)))
    return contour_sets
