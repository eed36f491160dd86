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

# File: src/quantum/qmat.py (NOVO ARQUIVO)
# Author: Gabriel Moraes
# Date: 17 de Outubro de 2026

"""
Álgebra linear complexa densa para registradores pequenos (1 a 4 qubits).

Convenção de ordenação: o qubit de índice 0 é o fator mais à esquerda do
produto tensorial. Para dois pares, os qubits 0 e 1 formam o par "a"
(Alice, Bob) e os qubits 2 e 3 formam o par "b".

Tolerâncias:
    VALIDATION_TOL (1e-10) para invariantes de estados (hermiticidade, traço,
    positividade); ARITHMETIC_TOL (1e-12) para identidades aritméticas.
"""

from dataclasses import dataclass
from typing import Iterable

import numpy as np

from src.core.errors import UsageError

ComplexMatrix = np.ndarray

VALIDATION_TOL = 1e-10
ARITHMETIC_TOL = 1e-12
MAX_QUBITS = 4


def as_complex_matrix(a, name: str = "matrix") -> ComplexMatrix:
    """Converte para uma matriz complexa 2D finita (complex128)."""
    m = np.asarray(a, dtype=np.complex128)
    if m.ndim != 2:
        raise UsageError(f"'{name}' deve ser uma matriz 2D, recebido ndim={m.ndim}.", name)
    if not np.all(np.isfinite(m)):
        raise UsageError(f"'{name}' contém entradas não finitas (NaN/Inf).", name)
    return m


def tensor(a, b) -> ComplexMatrix:
    """Produto de Kronecker a ⊗ b."""
    return np.kron(as_complex_matrix(a, "a"), as_complex_matrix(b, "b"))


def matmul(a, b) -> ComplexMatrix:
    a = as_complex_matrix(a, "a")
    b = as_complex_matrix(b, "b")
    if a.shape[1] != b.shape[0]:
        raise UsageError(f"Dimensões incompatíveis para o produto: {a.shape} x {b.shape}.", "matmul")
    return a @ b


def dagger(a) -> ComplexMatrix:
    return as_complex_matrix(a).conj().T


def trace(a) -> complex:
    a = as_complex_matrix(a)
    if a.shape[0] != a.shape[1]:
        raise UsageError(f"Traço exige matriz quadrada, recebido {a.shape}.", "trace")
    return complex(np.trace(a))


def hermitize(a) -> ComplexMatrix:
    """Remove o resíduo anti-hermitiano de arredondamento: (A + A†)/2."""
    a = as_complex_matrix(a)
    return 0.5 * (a + a.conj().T)


def is_hermitian(a, tol: float = VALIDATION_TOL) -> bool:
    a = as_complex_matrix(a)
    if a.shape[0] != a.shape[1]:
        return False
    return float(np.max(np.abs(a - a.conj().T))) <= tol


def embed_operator(op, qubit: int, n_qubits: int) -> ComplexMatrix:
    """Retorna I ⊗ … ⊗ op ⊗ … ⊗ I com `op` (2x2) na posição `qubit`."""
    op = as_complex_matrix(op, "op")
    if op.shape != (2, 2):
        raise UsageError(f"Operador de um qubit deve ser 2x2, recebido {op.shape}.", "op")
    if not 0 <= qubit < n_qubits:
        raise UsageError(f"Índice de qubit {qubit} fora do registrador de {n_qubits} qubits.", "qubit")
    left = np.eye(2 ** qubit, dtype=np.complex128)
    right = np.eye(2 ** (n_qubits - qubit - 1), dtype=np.complex128)
    return np.kron(np.kron(left, op), right)


def _qubit_count(dim: int) -> int:
    n = int(round(np.log2(dim))) if dim > 0 else 0
    if dim <= 0 or 2 ** n != dim:
        raise UsageError(f"Dimensão {dim} não é uma potência de 2.", "dim")
    return n


def _partial_trace_array(matrix: np.ndarray, n_qubits: int, keep: list[int]) -> np.ndarray:
    tensor_view = matrix.reshape([2] * (2 * n_qubits))
    remaining = n_qubits
    for qubit in reversed(range(n_qubits)):
        if qubit in keep:
            continue
        tensor_view = np.trace(tensor_view, axis1=qubit, axis2=qubit + remaining)
        remaining -= 1
    reduced_dim = 2 ** len(keep)
    return tensor_view.reshape(reduced_dim, reduced_dim)


def min_eigenvalue_hermitian(m) -> float:
    """Menor autovalor de uma matriz hermitiana (numpy.linalg.eigvalsh)."""
    m = as_complex_matrix(m, "m")
    if not is_hermitian(m):
        raise UsageError("min_eigenvalue_hermitian exige uma matriz hermitiana (tolerância 1e-10).", "m")
    return float(np.linalg.eigvalsh(hermitize(m))[0])


@dataclass(frozen=True, eq=False)
class PureState:
    """Vetor de estado normalizado."""
    amplitudes: np.ndarray

    def __post_init__(self):
        vec = np.array(self.amplitudes, dtype=np.complex128).reshape(-1)
        if not np.all(np.isfinite(vec)):
            raise UsageError("Amplitudes não finitas.", "amplitudes")
        norm_sq = float(np.vdot(vec, vec).real)
        if abs(norm_sq - 1.0) > ARITHMETIC_TOL:
            raise UsageError(f"Estado puro não normalizado: ‖ψ‖² = {norm_sq:.15g}.", "amplitudes")
        _qubit_count(vec.size)
        vec.setflags(write=False)
        object.__setattr__(self, "amplitudes", vec)

    @property
    def dim(self) -> int:
        return self.amplitudes.size

    def projector(self) -> ComplexMatrix:
        return np.outer(self.amplitudes, self.amplitudes.conj())


@dataclass(frozen=True, eq=False)
class DensityMatrix:
    """
    Matriz densidade de 1 a 4 qubits, validada na construção.

    Invariantes (tolerância 1e-10): hermitiana, traço unitário e
    semidefinida positiva. A matriz armazenada é somente leitura.
    """
    matrix: np.ndarray

    def __post_init__(self):
        m = np.array(as_complex_matrix(self.matrix), copy=True)
        if m.shape[0] != m.shape[1]:
            raise UsageError(f"Matriz densidade deve ser quadrada, recebido {m.shape}.", "matrix")
        n = _qubit_count(m.shape[0])
        if not 1 <= n <= MAX_QUBITS:
            raise UsageError(f"Registradores suportados têm de 1 a {MAX_QUBITS} qubits, recebido {n}.", "matrix")
        if not is_hermitian(m):
            raise UsageError("Matriz densidade não é hermitiana.", "matrix")
        tr = complex(np.trace(m))
        if abs(tr - 1.0) > VALIDATION_TOL:
            raise UsageError(f"Matriz densidade com traço {tr.real:.15g} (esperado 1).", "matrix")
        lowest = float(np.linalg.eigvalsh(hermitize(m))[0])
        if lowest < -VALIDATION_TOL:
            raise UsageError(f"Matriz densidade não é semidefinida positiva (λ_min = {lowest:.3e}).", "matrix")
        m.setflags(write=False)
        object.__setattr__(self, "matrix", m)

    @property
    def dim(self) -> int:
        return self.matrix.shape[0]

    @property
    def n_qubits(self) -> int:
        return _qubit_count(self.dim)

    @classmethod
    def from_pure(cls, psi: PureState) -> "DensityMatrix":
        return cls(psi.projector())

    @classmethod
    def maximally_mixed(cls, n_qubits: int) -> "DensityMatrix":
        dim = 2 ** n_qubits
        return cls(np.eye(dim, dtype=np.complex128) / dim)

    def purity(self) -> float:
        """tr(ρ²)."""
        return float(np.trace(self.matrix @ self.matrix).real)

    def tensor(self, other: "DensityMatrix") -> "DensityMatrix":
        return DensityMatrix(np.kron(self.matrix, other.matrix))


def partial_trace(rho: DensityMatrix, keep: Iterable[int]) -> DensityMatrix:
    """
    Traço parcial mantendo os qubits em `keep` (na ordem do registrador).

    Ex.: num estado de dois pares, keep={0, 1} devolve o par "a".
    """
    keep_list = sorted(set(int(q) for q in keep))
    if not keep_list:
        raise UsageError("O conjunto de qubits mantidos no traço parcial não pode ser vazio.", "keep")
    n = rho.n_qubits
    if keep_list[0] < 0 or keep_list[-1] >= n:
        raise UsageError(f"Qubits {keep_list} fora do registrador de {n} qubits.", "keep")
    return DensityMatrix(hermitize(_partial_trace_array(rho.matrix, n, keep_list)))


def pure_fidelity(rho: DensityMatrix, psi: PureState) -> float:
    """⟨ψ|ρ|ψ⟩, restrito a [0, 1] após checagem com tolerância de 1e-10."""
    if rho.dim != psi.dim:
        raise UsageError(f"Dimensões incompatíveis: ρ tem {rho.dim}, ψ tem {psi.dim}.", "psi")
    value = float(np.vdot(psi.amplitudes, rho.matrix @ psi.amplitudes).real)
    if value < -VALIDATION_TOL or value > 1.0 + VALIDATION_TOL:
        raise UsageError(f"Fidelidade fora de [0, 1]: {value:.15g}.", "rho")
    return min(1.0, max(0.0, value))
