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

# File: src/quantum/bell.py (NOVO ARQUIVO)
# Author: Gabriel Moraes
# Date: 17 de Outubro de 2026

"""
Base de Bell, coeficientes Bell-diagonais, estados de Werner e projeção
(twirl) de um par arbitrário na sua parte Bell-diagonal.

Ordem fixa dos índices: (Φ+, Ψ+, Ψ−, Φ−), com Φ0 = Φ+ como estado alvo.
"""

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from src.core.errors import UsageError
from src.quantum.qmat import DensityMatrix, PureState, VALIDATION_TOL

_CLAMP_TOL = 1e-12


@lru_cache(maxsize=1)
def bell_basis() -> tuple:
    """Retorna (|Φ+⟩, |Ψ+⟩, |Ψ−⟩, |Φ−⟩)."""
    s = 1.0 / np.sqrt(2.0)
    return (
        PureState(np.array([s, 0, 0, s])),
        PureState(np.array([0, s, s, 0])),
        PureState(np.array([0, s, -s, 0])),
        PureState(np.array([s, 0, 0, -s])),
    )


@lru_cache(maxsize=1)
def bell_unitary() -> np.ndarray:
    """Colunas = vetores de Bell; B† ρ B dá ρ na base de Bell."""
    return np.column_stack([psi.amplitudes for psi in bell_basis()])


def target_state() -> PureState:
    return bell_basis()[0]


@dataclass(frozen=True)
class BellCoefficients:
    """
    Pesos (λ0, λ1, λ2, λ3) de um estado Bell-diagonal.

    Valores em [−1e-12, 0) são levados a 0; a soma deve ser 1 dentro de 1e-10.
    """
    lambdas: tuple

    def __post_init__(self):
        values = tuple(float(v) for v in self.lambdas)
        if len(values) != 4:
            raise UsageError(f"São necessários 4 coeficientes de Bell, recebido {len(values)}.", "lambdas")
        if not all(np.isfinite(v) for v in values):
            raise UsageError("Coeficientes de Bell não finitos.", "lambdas")
        if min(values) < -_CLAMP_TOL:
            raise UsageError(f"Coeficiente de Bell negativo: {values}.", "lambdas")
        values = tuple(max(0.0, v) for v in values)
        if abs(sum(values) - 1.0) > VALIDATION_TOL:
            raise UsageError(f"Coeficientes de Bell somam {sum(values):.15g} (esperado 1).", "lambdas")
        object.__setattr__(self, "lambdas", values)

    @property
    def lambda0(self) -> float:
        return self.lambdas[0]

    @property
    def lambda1(self) -> float:
        return self.lambdas[1]

    @property
    def lambda2(self) -> float:
        return self.lambdas[2]

    @property
    def lambda3(self) -> float:
        return self.lambdas[3]

    @property
    def fidelity(self) -> float:
        return self.lambdas[0]

    def as_array(self) -> np.ndarray:
        return np.array(self.lambdas, dtype=float)

    def __getitem__(self, index: int) -> float:
        return self.lambdas[index]


def bell_coefficients(rho: DensityMatrix) -> BellCoefficients:
    """λ_i = ⟨Φ_i|ρ|Φ_i⟩."""
    if rho.n_qubits != 2:
        raise UsageError(f"Coeficientes de Bell exigem um par (2 qubits), recebido {rho.n_qubits}.", "rho")
    basis = bell_unitary()
    in_bell = basis.conj().T @ rho.matrix @ basis
    return BellCoefficients(tuple(np.real(np.diag(in_bell))))


def bell_diagonal(lams: BellCoefficients) -> DensityMatrix:
    """ρ = Σ λ_i |Φ_i⟩⟨Φ_i|."""
    if not isinstance(lams, BellCoefficients):
        lams = BellCoefficients(tuple(lams))
    basis = bell_unitary()
    return DensityMatrix(basis @ np.diag(lams.as_array()).astype(np.complex128) @ basis.conj().T)


def werner(F: float) -> BellCoefficients:
    """(F, (1−F)/3, (1−F)/3, (1−F)/3)."""
    F = float(F)
    if not np.isfinite(F) or F < 0.0 or F > 1.0:
        raise UsageError(f"Fidelidade de Werner deve estar em [0, 1], recebido {F}.", "F")
    tail = (1.0 - F) / 3.0
    return BellCoefficients((F, tail, tail, tail))


def twirl_projection(rho: DensityMatrix) -> DensityMatrix:
    """Zera os elementos fora da diagonal na base de Bell (média exata do twirl)."""
    return bell_diagonal(bell_coefficients(rho))
