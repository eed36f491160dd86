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

# File: src/protocol/circuit.py (NOVO ARQUIVO)
# Author: Gabriel Moraes
# Date: 17 de Outubro de 2026

"""
Rodada do protocolo em nível de circuito sobre o estado conjunto de 16
dimensões de dois pares, e amostragem de Born dessa rodada.

Registrador: qubits (0, 1) = par "a" (Alice, Bob), qubits (2, 3) = par "b".
Sequência de uma rodada:
    1. rotação bilateral: Alice aplica A em 0 e 2, Bob aplica A* em 1 e 3,
       com A = U·W, U = exp(−iπX/4) fixo e W a rotação de alinhamento do
       objetivo de permutação (W = I para o objetivo "none");
    2. CNOTs bilaterais 0→2 e 1→3;
    3. medição dos alvos (2, 3) na base computacional e pós-seleção;
    4. o par "a" sobrevive, renormalizado.

U⊗U* age na base de Bell como uma permutação que fixa Φ+, de modo que a
rodada do circuito reproduz a recorrência analítica com os slots lidos em
`slot_reading` (slot k lê o índice de Bell slot_reading[k] da entrada) e a
saída na ordem de Bell igual a CIRCUIT_OUTPUT_SLOTS aplicado aos slots.
"""

import logging
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from src.core.enums import PermutationObjective, SuccessCriterion
from src.core.errors import UsageError
from src.protocol.protocol_config import ProtocolConfig
from src.protocol.recurrence import select_permutation
from src.quantum.bell import bell_coefficients, bell_unitary, target_state
from src.quantum.channels import PAULI_I, PAULI_X, PAULI_Y, PAULI_Z
from src.quantum.qmat import DensityMatrix, hermitize, pure_fidelity

DEGENERATE_PROBABILITY = 1e-15

# Índice de Bell b da saída recebe o slot CIRCUIT_OUTPUT_SLOTS[b] da recorrência.
CIRCUIT_OUTPUT_SLOTS = (0, 2, 1, 3)


def _half_turn(pauli: np.ndarray) -> np.ndarray:
    """exp(−iπσ/4) = (I − iσ)/√2."""
    return (PAULI_I - 1j * pauli) / np.sqrt(2.0)


PRE_ROTATION = _half_turn(PAULI_X)

_RX = _half_turn(PAULI_X)
_RY = _half_turn(PAULI_Y)
_RZ = _half_turn(PAULI_Z)
ALIGNMENT_ROTATIONS = (PAULI_I, _RX, _RY, _RZ, _RX @ _RY, _RY @ _RX)


def _cnot_permutation(control: int, target: int, n_qubits: int = 4) -> np.ndarray:
    """Mapa de índices da base computacional sob CNOT (o qubit 0 é o bit mais significativo)."""
    indices = np.arange(2 ** n_qubits)
    control_bit = (indices >> (n_qubits - 1 - control)) & 1
    return indices ^ (control_bit << (n_qubits - 1 - target))


_BILATERAL_CNOT = _cnot_permutation(1, 3)[_cnot_permutation(0, 2)]


def _bell_permutation(local: np.ndarray) -> tuple:
    """T com (A⊗A*)|Φ_m⟩ ∝ |Φ_T[m]⟩."""
    basis = bell_unitary()
    in_bell = basis.conj().T @ np.kron(local, local.conj()) @ basis
    image = tuple(int(np.argmax(np.abs(in_bell[:, m]))) for m in range(4))
    if sorted(image) != [0, 1, 2, 3] or not np.allclose(np.abs(in_bell[list(image), np.arange(4)]), 1.0):
        raise UsageError("Rotação local não permuta a base de Bell.", "rotation")
    return image


def _slot_reading(local: np.ndarray) -> tuple:
    image = _bell_permutation(local)
    inverse = [0] * 4
    for m, k in enumerate(image):
        inverse[k] = m
    return tuple(inverse)


@lru_cache(maxsize=1)
def _alignment_table() -> dict:
    table = {}
    for w in ALIGNMENT_ROTATIONS:
        local = PRE_ROTATION @ w
        table[_slot_reading(local)] = local
    if len(table) != len(ALIGNMENT_ROTATIONS):
        raise RuntimeError("As rotações de alinhamento não geram leituras de slot distintas.")
    return table


def induced_input_slots() -> tuple:
    """Leitura de slots induzida apenas pela pré-rotação fixa."""
    return _slot_reading(PRE_ROTATION)


def alignment_for(lams_reading: tuple) -> np.ndarray:
    """Rotação local de Alice cuja leitura de slots é `lams_reading`."""
    return _alignment_table()[tuple(lams_reading)]


def _accepted_outcomes(criterion: SuccessCriterion) -> tuple:
    return (0, 3) if criterion is SuccessCriterion.COINCIDENT else (0,)


@dataclass(frozen=True, eq=False)
class CircuitOutcome:
    """
    Resultado exato de uma rodada.

    post_state é None quando success_probability < 1e-15. branch_fidelities
    guarda ⟨Φ+|ρ_m|Φ+⟩ do sobrevivente de cada resultado aceito (NaN nos demais).
    """
    success_probability: float
    post_state: DensityMatrix | None
    outcome_distribution: tuple
    accepted_outcomes: tuple
    branch_fidelities: tuple
    slot_reading: tuple

    @property
    def degenerate(self) -> bool:
        return self.post_state is None

    @property
    def fidelity(self) -> float:
        if self.post_state is None:
            return float("nan")
        return pure_fidelity(self.post_state, target_state())


def circuit_round(rho_a: DensityMatrix, rho_b: DensityMatrix, cfg: ProtocolConfig) -> CircuitOutcome:
    if rho_a.n_qubits != 2 or rho_b.n_qubits != 2:
        raise UsageError("circuit_round exige dois pares de 2 qubits.", "rho")

    if cfg.permutation_objective is PermutationObjective.NONE:
        local = PRE_ROTATION
    else:
        local = alignment_for(select_permutation(bell_coefficients(rho_a), cfg.permutation_objective))
    pair_rotation = np.kron(local, local.conj())
    ra = pair_rotation @ rho_a.matrix @ pair_rotation.conj().T
    rb = pair_rotation @ rho_b.matrix @ pair_rotation.conj().T

    joint = np.kron(ra, rb)
    joint = joint[np.ix_(_BILATERAL_CNOT, _BILATERAL_CNOT)]
    blocks = joint.reshape(4, 4, 4, 4)

    branch_ops = [blocks[:, m, :, m] for m in range(4)]
    distribution = np.array([max(0.0, float(np.trace(op).real)) for op in branch_ops])
    distribution = distribution / distribution.sum()

    accepted = _accepted_outcomes(cfg.success_criterion)
    success = float(sum(distribution[m] for m in accepted))

    fidelities = [float("nan")] * 4
    for m in accepted:
        if distribution[m] >= DEGENERATE_PROBABILITY:
            branch = DensityMatrix(hermitize(branch_ops[m]) / distribution[m])
            fidelities[m] = pure_fidelity(branch, target_state())

    post_state = None
    if success >= DEGENERATE_PROBABILITY:
        post_state = DensityMatrix(hermitize(sum(branch_ops[m] for m in accepted)) / success)
    else:
        logging.debug(f"[CIRCUIT] Rodada degenerada: probabilidade de sucesso {success:.3e}.")

    return CircuitOutcome(
        success_probability=success,
        post_state=post_state,
        outcome_distribution=tuple(float(v) for v in distribution),
        accepted_outcomes=accepted,
        branch_fidelities=tuple(fidelities),
        slot_reading=_slot_reading(local),
    )


class RoundSampler:
    """
    Amostrador de Born de uma rodada já resolvida.

    O circuito é avaliado uma vez; cada amostra sorteia um resultado de
    medição e devolve a fidelidade do ramo sobrevivente.
    """

    def __init__(self, outcome: CircuitOutcome):
        self.outcome = outcome
        self._probabilities = np.asarray(outcome.outcome_distribution, dtype=float)
        self._accepted = np.zeros(4, dtype=bool)
        self._accepted[list(outcome.accepted_outcomes)] = True
        self._fidelities = np.asarray(outcome.branch_fidelities, dtype=float)

    def sample(self, rng: np.random.Generator) -> tuple:
        m = int(rng.choice(4, p=self._probabilities))
        if not self._accepted[m]:
            return False, None
        return True, float(self._fidelities[m])

    def sample_many(self, rng: np.random.Generator, n: int) -> tuple:
        """Retorna (máscara de sucesso, fidelidades) de n rodadas independentes; NaN nas falhas."""
        draws = rng.choice(4, size=n, p=self._probabilities)
        success = self._accepted[draws]
        fidelities = np.where(success, self._fidelities[draws], np.nan)
        return success, fidelities


def sample_round(rng: np.random.Generator, rho_a: DensityMatrix, rho_b: DensityMatrix,
                 cfg: ProtocolConfig) -> tuple:
    """Uma rodada amostrada: (sucesso, fidelidade se sucesso, senão None)."""
    return RoundSampler(circuit_round(rho_a, rho_b, cfg)).sample(rng)

