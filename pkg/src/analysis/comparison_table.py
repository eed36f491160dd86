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

# File: src/analysis/comparison_table.py (NOVO ARQUIVO)
# Author: Gabriel Moraes
# Date: 17 de Outubro de 2026

"""
Tabela de comparação entre as quatro combinações
{alvo do ruído: both, second-only} x {objetivo: fidelity, paper-literal},
cada uma varrida em modo exato sobre a mesma grade, frente aos valores de
referência publicados (ΔF ≈ 0.07 e ΔY ≈ −0.55 no canto de ruído máximo,
F_purify >= 0.9 em toda a grade).

As verificações qualitativas são relatadas por linha; nenhuma é imposta.
"""

import logging
from dataclasses import dataclass, replace

import numpy as np
import pandas as pd

from src.core.enums import NoiseTarget, PermutationObjective, SimulationMode
from src.engine.grid import GridSpec, SweepSurface
from src.engine.summarizer import tradeoff_checks
from src.engine.sweep_orchestrator import sweep
from src.protocol.protocol_config import ProtocolConfig
from src.quantum.channels import NoiseModel

CONFIGURATIONS = (
    (NoiseTarget.BOTH, PermutationObjective.FIDELITY),
    (NoiseTarget.BOTH, PermutationObjective.PAPER_LITERAL),
    (NoiseTarget.SECOND_ONLY, PermutationObjective.FIDELITY),
    (NoiseTarget.SECOND_ONLY, PermutationObjective.PAPER_LITERAL),
)

_CHECK_TOL = 1e-12


@dataclass(frozen=True)
class ReferenceHeadlines:
    delta_f: float = 0.07
    delta_y: float = -0.55
    min_f_purify: float = 0.9


def _non_decreasing(values: np.ndarray) -> bool:
    values = values[~np.isnan(values)]
    return bool(np.all(np.diff(values) >= -_CHECK_TOL))


def _row(surface: SweepSurface, target: NoiseTarget, objective: PermutationObjective,
         headlines: ReferenceHeadlines) -> dict:
    delta_f = surface.field_grid("delta_f")
    delta_y = surface.field_grid("delta_y")
    f_purify = surface.field_grid("f_purify")
    gammas, ps = surface.grid.gamma_values(), surface.grid.p_values()

    noise_sum = gammas[:, None] + ps[None, :]
    away_from_origin = noise_sum > 0.0
    diagonal = np.arange(min(delta_f.shape))
    checks = tradeoff_checks(surface)

    i_max, j_max = np.unravel_index(np.nanargmax(delta_f), delta_f.shape)
    corner_df = float(delta_f[-1, -1])
    corner_dy = float(delta_y[-1, -1])
    min_fp = float(np.nanmin(f_purify))

    return {
        "noise_target": target.value,
        "objective": objective.value,
        "delta_f_corner": corner_df,
        "reference_delta_f": headlines.delta_f,
        "delta_f_corner_error": corner_df - headlines.delta_f,
        "delta_y_corner": corner_dy,
        "reference_delta_y": headlines.delta_y,
        "delta_y_corner_error": corner_dy - headlines.delta_y,
        "min_f_purify": min_fp,
        "reference_min_f_purify": headlines.min_f_purify,
        "min_f_purify_meets_reference": bool(min_fp >= headlines.min_f_purify),
        "max_delta_f": float(delta_f[i_max, j_max]),
        "max_delta_f_gamma": float(gammas[i_max]),
        "max_delta_f_p": float(ps[j_max]),
        "delta_f_nonnegative_where_f_noisy_above_half": checks["delta_f_nonnegative_where_f_noisy_above_half"],
        "delta_y_negative_away_from_origin": bool(np.all(delta_y[away_from_origin] < 0.0)),
        "delta_f_magnitude_grows_along_diagonal": _non_decreasing(np.abs(delta_f[diagonal, diagonal])),
        "delta_y_magnitude_grows_along_diagonal": _non_decreasing(np.abs(delta_y[diagonal, diagonal])),
        "delta_f_max_at_max_noise_corner": checks["delta_f_max_at_max_noise_corner"],
    }


def build_comparison_table(grid: GridSpec, protocol: ProtocolConfig, noise: NoiseModel,
                           headlines: ReferenceHeadlines = ReferenceHeadlines(), workers: int = 1) -> pd.DataFrame:
    """
    Uma linha por configuração. O critério de sucesso, as rodadas e a ordem
    dos canais vêm de `protocol`/`noise`; alvo e objetivo variam.
    """
    rows = []
    for target, objective in CONFIGURATIONS:
        logging.info(f"[COMPARISON] Varrendo configuração alvo={target.value}, objetivo={objective.value}.")
        surface = sweep(grid, replace(protocol, permutation_objective=objective), SimulationMode.EXACT,
                        workers=workers, noise=replace(noise, target=target))
        row = _row(surface, target, objective, headlines)
        logging.info(f"[COMPARISON] ΔF(canto)={row['delta_f_corner']:.4f} (ref. {headlines.delta_f}), "
                     f"ΔY(canto)={row['delta_y_corner']:.4f} (ref. {headlines.delta_y}), "
                     f"min F_purify={row['min_f_purify']:.4f} (ref. >= {headlines.min_f_purify}).")
        rows.append(row)
    return pd.DataFrame(rows)
