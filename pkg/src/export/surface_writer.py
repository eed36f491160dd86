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

# File: src/export/surface_writer.py (NOVO ARQUIVO)
# Author: Gabriel Moraes
# Date: 17 de Outubro de 2026

"""
Exportação e leitura de superfícies em CSV e JSON.

CSV: cabeçalho fixo (CSV_COLUMNS), linhas em ordem row-major, reais com 12
algarismos significativos, campo vazio para valores indefinidos.
JSON: mesmos campos por célula (null para indefinidos) mais a grade, a
configuração completa da execução, a semente base e a impressão digital
xxh64 das linhas.
"""

import json
import logging
import math
import os

import numpy as np
import pandas as pd
import xxhash

from src.core.enums import OutputFormat
from src.core.errors import OutputError, UsageError
from src.engine.grid import CSV_COLUMNS, CellStats, GridSpec, SweepSurface

FLOAT_FORMAT = "%.12g"


def _ensure_parent(path: str):
    parent = os.path.dirname(os.path.abspath(path))
    os.makedirs(parent, exist_ok=True)


def _round12(value) -> float | int | None:
    if isinstance(value, (int, np.integer)):
        return int(value)
    value = float(value)
    if math.isnan(value):
        return None
    return float(FLOAT_FORMAT % value)


def surface_csv_text(surface: SweepSurface) -> str:
    return surface.to_frame().to_csv(index=False, float_format=FLOAT_FORMAT, na_rep="", lineterminator="\n")


def fingerprint(surface: SweepSurface) -> str:
    """xxh64 do texto CSV canônico da superfície."""
    return xxhash.xxh64(surface_csv_text(surface).encode("utf-8")).hexdigest()


def _write_text(path: str, text: str, what: str):
    try:
        _ensure_parent(path)
        with open(path, "w", encoding="utf-8", newline="\n") as f:
            f.write(text)
    except OSError as e:
        raise OutputError(f"Não foi possível escrever {what} em '{path}': {e}", path) from e


def write_surface(surface: SweepSurface, fmt: OutputFormat, path: str, run_config: dict | None = None) -> str:
    """
    Escreve a superfície e retorna a impressão digital xxh64 das linhas.

    :param run_config: configuração resolvida da execução (vai para o JSON).
    """
    digest = fingerprint(surface)
    if fmt is OutputFormat.CSV:
        _write_text(path, surface_csv_text(surface), "a superfície CSV")
    elif fmt is OutputFormat.JSON:
        document = {
            "columns": list(CSV_COLUMNS),
            "grid": surface.grid.to_dict(),
            "base_seed": surface.grid.base_seed,
            "run_config": run_config or {},
            "fingerprint_xxh64": digest,
            "cells": [{k: _round12(v) for k, v in cell.as_row().items()} for cell in surface.cells],
        }
        _write_text(path, json.dumps(document, indent=2, ensure_ascii=False, allow_nan=False) + "\n",
                    "a superfície JSON")
    else:
        raise UsageError(f"Formato de saída desconhecido: {fmt!r}.", "--format")
    logging.info(f"[EXPORT] Superfície salva em '{path}' ({fmt.value}, xxh64={digest}).")
    return digest


def _nan_to_null(value):
    """NaN vira null: o JSON estrito não tem literal para NaN."""
    if isinstance(value, dict):
        return {k: _nan_to_null(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_nan_to_null(v) for v in value]
    if isinstance(value, (float, np.floating)) and math.isnan(value):
        return None
    return value


def write_json(document: dict, path: str, what: str = "o relatório JSON"):
    text = json.dumps(_nan_to_null(document), indent=2, ensure_ascii=False, allow_nan=False, default=_json_default)
    _write_text(path, text + "\n", what)
    logging.info(f"[EXPORT] {what[0].upper() + what[1:]} salvo em '{path}'.")


def write_table(frame: pd.DataFrame, path: str, what: str = "a tabela"):
    """Tabelas auxiliares (comparação, vazão) no mesmo formato numérico da superfície."""
    _write_text(path, frame.to_csv(index=False, float_format=FLOAT_FORMAT, na_rep="", lineterminator="\n"), what)
    logging.info(f"[EXPORT] {what[0].upper() + what[1:]} salva em '{path}'.")


def _json_default(value):
    if isinstance(value, (np.floating, np.integer)):
        return value.item()
    raise TypeError(f"Tipo não serializável: {type(value).__name__}")


def _infer_grid(frame: pd.DataFrame) -> GridSpec:
    gammas = np.unique(frame["gamma"].to_numpy(dtype=float))
    ps = np.unique(frame["p"].to_numpy(dtype=float))
    return GridSpec(
        gamma_min=float(gammas[0]), gamma_max=float(gammas[-1]), steps_gamma=int(gammas.size),
        p_min=float(ps[0]), p_max=float(ps[-1]), steps_p=int(ps.size),
        trials=int(frame["trials"].iloc[0]), base_seed=0,
    )


def _cells_from_frame(frame: pd.DataFrame) -> tuple:
    cells = []
    for row in frame.itertuples(index=False):
        values = row._asdict()
        cells.append(CellStats(**{
            column: (int(values[column]) if column in ("successes", "trials") else float(values[column]))
            for column in CSV_COLUMNS
        }))
    return tuple(cells)


def read_surface(path: str, grid: GridSpec | None = None) -> SweepSurface:
    """
    Relê uma superfície escrita por write_surface (CSV ou JSON, pela extensão).

    Sem `grid`, a grade do CSV é inferida dos valores distintos de γ e p e a
    semente base fica 0; o JSON traz a grade completa.
    """
    try:
        if path.lower().endswith(".json"):
            with open(path, "r", encoding="utf-8") as f:
                document = json.load(f)
            frame = pd.DataFrame(document["cells"], columns=list(CSV_COLUMNS)).astype(
                {c: float for c in CSV_COLUMNS if c not in ("successes", "trials")})
            if grid is None:
                grid = GridSpec(**document["grid"])
        else:
            frame = pd.read_csv(path, dtype={"successes": "int64", "trials": "int64"})
    except OSError as e:
        raise OutputError(f"Não foi possível ler a superfície '{path}': {e}", path) from e

    if list(frame.columns) != list(CSV_COLUMNS):
        raise UsageError(f"Colunas inesperadas em '{path}': {list(frame.columns)}.", "path")
    if grid is None:
        grid = _infer_grid(frame)
    return SweepSurface(grid=grid, cells=_cells_from_frame(frame))
