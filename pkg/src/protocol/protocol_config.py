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

# File: src/protocol/protocol_config.py (NOVO ARQUIVO)
# Author: Gabriel Moraes
# Date: 17 de Outubro de 2026

from dataclasses import dataclass

from src.core.enums import PermutationObjective, SuccessCriterion
from src.core.errors import UsageError


@dataclass(frozen=True)
class ProtocolConfig:
    """Configuração de uma execução do protocolo de purificação."""
    permutation_objective: PermutationObjective = PermutationObjective.FIDELITY
    success_criterion: SuccessCriterion = SuccessCriterion.COINCIDENT
    rounds: int = 1

    def __post_init__(self):
        if not isinstance(self.permutation_objective, PermutationObjective):
            raise UsageError(f"Objetivo de permutação inválido: {self.permutation_objective!r}.", "objective")
        if not isinstance(self.success_criterion, SuccessCriterion):
            raise UsageError(f"Critério de sucesso inválido: {self.success_criterion!r}.", "criterion")
        if isinstance(self.rounds, bool) or not isinstance(self.rounds, int) or self.rounds < 1:
            raise UsageError(f"O número de rodadas deve ser um inteiro >= 1, recebido {self.rounds!r}.", "rounds")

    def to_dict(self) -> dict:
        return {
            "objective": self.permutation_objective.value,
            "criterion": self.success_criterion.value,
            "rounds": self.rounds,
        }
