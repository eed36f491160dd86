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

# File: src/protocol/recurrence.py (NOVO ARQUIVO)
# Author: Gabriel Moraes
# Date: 17 de Outubro de 2026

"""
Caminho analítico do protocolo: permutação dos coeficientes de Bell,
rendimento de uma rodada, recorrência dos coeficientes e iteração em
múltiplas rodadas.

Recorrência (N é o rendimento da rodada):
    λ0' = (λ0² + λ3²) / N      λ1' = 2·λ1·λ2 / N
    λ2' = (λ1² + λ2²) / N      λ3' = 2·λ0·λ3 / N
    N   = (λ0 + λ3)² + (λ1 + λ2)²
"""

from dataclasses import dataclass

from src.core.enums import PermutationObjective
from src.core.errors import UsageError
from src.quantum.bell import BellCoefficients

# O slot 0 (fidelidade) nunca se move. Em empates vence o primeiro da lista:
# identidade primeiro, depois trocas de menor índice.
CANDIDATE_PERMUTATIONS = (
    (0, 1, 2, 3),
    (0, 2, 1, 3),
    (0, 3, 2, 1),
    (0, 1, 3, 2),
    (0, 2, 3, 1),
    (0, 3, 1, 2),
)

IDENTITY_PERMUTATION = CANDIDATE_PERMUTATIONS[0]

_TIE_TOL = 1e-15


@dataclass(frozen=True)
class RoundOutcome:
    coefficients_out: BellCoefficients
    round_yield: float
    fidelity_out: float


@dataclass(frozen=True)
class RoundTrajectory:
    """Resultado de k rodadas: uma RoundOutcome e uma permutação por rodada."""
    rounds: tuple
    permutations: tuple
    cumulative_yield: float
    pair_cost: int

    @property
    def final(self) -> RoundOutcome:
        return self.rounds[-1]


def apply_permutation(lams: BellCoefficients, perm: tuple) -> BellCoefficients:
    """permuted[k] = lams[perm[k]]."""
    return BellCoefficients(tuple(lams[i] for i in perm))


def yield_of(lams: BellCoefficients) -> float:
    """N = (λ0 + λ3)² + (λ1 + λ2)²."""
    l0, l1, l2, l3 = lams.lambdas
    return (l0 + l3) ** 2 + (l1 + l2) ** 2


def _fidelity_after(lams: BellCoefficients) -> float:
    l0, _, _, l3 = lams.lambdas
    return (l0 ** 2 + l3 ** 2) / yield_of(lams)


def _paper_literal_permutation(lams: BellCoefficients) -> tuple:
    # maior peso restante no slot 3
    l1, l2, l3 = lams.lambda1, lams.lambda2, lams.lambda3
    if l3 >= max(l1, l2):
        return IDENTITY_PERMUTATION
    if l1 >= l2:
        return (0, 3, 2, 1)
    return (0, 1, 3, 2)


def _argmax_permutation(lams: BellCoefficients, score) -> tuple:
    best_perm = IDENTITY_PERMUTATION
    best_score = score(lams)
    for perm in CANDIDATE_PERMUTATIONS[1:]:
        value = score(apply_permutation(lams, perm))
        if value > best_score + _TIE_TOL:
            best_perm, best_score = perm, value
    return best_perm


def select_permutation(lams: BellCoefficients, objective: PermutationObjective) -> tuple:
    if objective is PermutationObjective.NONE:
        return IDENTITY_PERMUTATION
    if objective is PermutationObjective.PAPER_LITERAL:
        return _paper_literal_permutation(lams)
    if objective is PermutationObjective.FIDELITY:
        return _argmax_permutation(lams, _fidelity_after)
    return _argmax_permutation(lams, yield_of)


def permute_coefficients(lams: BellCoefficients, objective: PermutationObjective) -> tuple:
    """
    Reordena os slots 1 a 3 conforme o objetivo.

    Retorna (coeficientes permutados, permutação), com permuted[k] = lams[perm[k]].
    """
    perm = select_permutation(lams, objective)
    return apply_permutation(lams, perm), perm


def recurrence_step(lams: BellCoefficients) -> RoundOutcome:
    l0, l1, l2, l3 = lams.lambdas
    n = yield_of(lams)
    out = BellCoefficients((
        (l0 ** 2 + l3 ** 2) / n,
        2.0 * l1 * l2 / n,
        (l1 ** 2 + l2 ** 2) / n,
        2.0 * l0 * l3 / n,
    ))
    return RoundOutcome(coefficients_out=out, round_yield=n, fidelity_out=out.lambda0)


def iterate_rounds(lams: BellCoefficients, k: int, objective: PermutationObjective) -> RoundTrajectory:
    """Permuta e aplica a recorrência k vezes; rendimento acumulado = Π rendimentos."""
    if isinstance(k, bool) or not isinstance(k, int) or k < 1:
        raise UsageError(f"O número de rodadas deve ser >= 1, recebido {k!r}.", "rounds")

    outcomes, perms = [], []
    cumulative = 1.0
    current = lams
    for _ in range(k):
        permuted, perm = permute_coefficients(current, objective)
        outcome = recurrence_step(permuted)
        outcomes.append(outcome)
        perms.append(perm)
        cumulative *= outcome.round_yield
        current = outcome.coefficients_out
    return RoundTrajectory(rounds=tuple(outcomes), permutations=tuple(perms),
                           cumulative_yield=cumulative, pair_cost=2 ** k)
