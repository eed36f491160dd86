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

# File: src/quantum/channels.py (NOVO ARQUIVO)
# Author: Gabriel Moraes
# Date: 17 de Outubro de 2026

"""
Canais de Kraus de um qubit (amortecimento de amplitude e defasagem) e sua
aplicação a qubits de registradores maiores.

Convenções fixas:
    amortecimento: K0 = [[1, 0], [0, √(1−γ)]], K1 = [[0, √γ], [0, 0]]
    defasagem:     K0 = √(1−p)·I,              K1 = √p·Z   (p = prob. de flip de fase)
"""

import logging
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from src.core.enums import NoiseOrder, NoiseTarget
from src.core.errors import UsageError
from src.quantum.qmat import ARITHMETIC_TOL, DensityMatrix, embed_operator

PAULI_I = np.eye(2, dtype=np.complex128)
PAULI_X = np.array([[0, 1], [1, 0]], dtype=np.complex128)
PAULI_Y = np.array([[0, -1j], [1j, 0]], dtype=np.complex128)
PAULI_Z = np.array([[1, 0], [0, -1]], dtype=np.complex128)


def _check_probability(value: float, name: str) -> float:
    value = float(value)
    if not np.isfinite(value) or value < 0.0 or value > 1.0:
        raise UsageError(f"'{name}' deve estar em [0, 1], recebido {value}.", name)
    return value


class CptpReport(NamedTuple):
    passed: bool
    residual: float


@dataclass(frozen=True, eq=False)
class KrausChannel:
    """
    Lista ordenada de operadores de Kraus 2x2.

    A completude (Σ K†K = I) não é imposta na construção; cptp_check a mede
    e apply_channel recusa canais que não passam.
    """
    operators: tuple
    label: str = "channel"

    def __post_init__(self):
        ops = tuple(np.array(k, dtype=np.complex128) for k in self.operators)
        if not ops:
            raise UsageError("Um canal de Kraus precisa de ao menos um operador.", "operators")
        for k in ops:
            if k.shape != (2, 2) or not np.all(np.isfinite(k)):
                raise UsageError(f"Operador de Kraus inválido no canal '{self.label}': shape {k.shape}.",
                                 "operators")
            k.setflags(write=False)
        object.__setattr__(self, "operators", ops)


def cptp_check(ch: KrausChannel) -> CptpReport:
    """Resíduo ‖Σ K†K − I‖_max; passa se ≤ 1e-12."""
    completeness = sum(k.conj().T @ k for k in ch.operators)
    residual = float(np.max(np.abs(completeness - PAULI_I)))
    return CptpReport(passed=residual <= ARITHMETIC_TOL, residual=residual)


def identity_channel() -> KrausChannel:
    return KrausChannel((PAULI_I,), label="identity")


def amplitude_damping(gamma: float) -> KrausChannel:
    gamma = _check_probability(gamma, "gamma")
    k0 = np.array([[1.0, 0.0], [0.0, np.sqrt(1.0 - gamma)]], dtype=np.complex128)
    k1 = np.array([[0.0, np.sqrt(gamma)], [0.0, 0.0]], dtype=np.complex128)
    return KrausChannel((k0, k1), label=f"amplitude_damping({gamma:g})")


def dephasing(p: float) -> KrausChannel:
    p = _check_probability(p, "p")
    k0 = np.sqrt(1.0 - p) * PAULI_I
    k1 = np.sqrt(p) * PAULI_Z
    return KrausChannel((k0, k1), label=f"dephasing({p:g})")


def apply_channel(rho: DensityMatrix, ch: KrausChannel, qubit: int) -> DensityMatrix:
    """ρ' = Σ_k (I⊗…⊗K_k⊗…⊗I) ρ (…)† sobre o qubit indicado."""
    n = rho.n_qubits
    if not 0 <= qubit < n:
        raise UsageError(f"Índice de qubit {qubit} fora do registrador de {n} qubits.", "qubit")
    report = cptp_check(ch)
    if not report.passed:
        raise UsageError(f"Canal '{ch.label}' não é CPTP (resíduo {report.residual:.3e}).", "channel")
    out = np.zeros_like(rho.matrix)
    for k in ch.operators:
        full = embed_operator(k, qubit, n)
        out += full @ rho.matrix @ full.conj().T
    return DensityMatrix(0.5 * (out + out.conj().T))


@dataclass(frozen=True)
class NoiseParams:
    """Ponto (γ, p) da grade."""
    gamma: float
    p: float

    def __post_init__(self):
        object.__setattr__(self, "gamma", _check_probability(self.gamma, "gamma"))
        object.__setattr__(self, "p", _check_probability(self.p, "p"))


@dataclass(frozen=True)
class NoiseModel:
    """Ordem dos canais por qubit e quais qubits do par recebem ruído."""
    order: NoiseOrder = NoiseOrder.AD_FIRST
    target: NoiseTarget = NoiseTarget.BOTH

    def to_dict(self) -> dict:
        return {"order": self.order.value, "target": self.target.value}


def noisy_qubits(target: NoiseTarget) -> tuple:
    """Qubits do par afetados: ambos, ou só o segundo fóton (qubit 1)."""
    return (0, 1) if target is NoiseTarget.BOTH else (1,)


def apply_pair_noise(rho_pair: DensityMatrix, params: NoiseParams,
                     order: NoiseOrder = NoiseOrder.AD_FIRST,
                     target: NoiseTarget = NoiseTarget.BOTH) -> DensityMatrix:
    """Aplica amortecimento(γ) e defasagem(p) a cada qubit ruidoso do par, na ordem configurada."""
    if rho_pair.n_qubits != 2:
        raise UsageError(f"apply_pair_noise exige um par (2 qubits), recebido {rho_pair.n_qubits}.", "rho_pair")
    damping = amplitude_damping(params.gamma)
    phase = dephasing(params.p)
    sequence = (damping, phase) if order is NoiseOrder.AD_FIRST else (phase, damping)

    rho = rho_pair
    for qubit in noisy_qubits(target):
        for ch in sequence:
            rho = apply_channel(rho, ch, qubit)
    logging.debug(f"[NOISE] γ={params.gamma:g} p={params.p:g} ordem={order.value} alvo={target.value}")
    return rho
