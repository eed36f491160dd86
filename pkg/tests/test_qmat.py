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

# File: tests/test_qmat.py
# Author: Gabriel Moraes
# Date: 17 de Outubro de 2026

import numpy as np
import pytest

from src.core.errors import UsageError
from src.quantum.bell import bell_basis
from src.quantum.channels import PAULI_I, PAULI_X, PAULI_Z
from src.quantum.qmat import (DensityMatrix, PureState, dagger, embed_operator, matmul, min_eigenvalue_hermitian,
                              partial_trace, pure_fidelity, tensor, trace)

PHI_PLUS, PSI_PLUS, PSI_MINUS, PHI_MINUS = bell_basis()


def test_tensor_identity_and_dimension():
    np.testing.assert_allclose(tensor(PAULI_I, PAULI_I), np.eye(4))
    assert tensor(np.eye(2), np.eye(4)).shape == (8, 8)


def test_z_on_first_qubit_maps_phi_plus_to_phi_minus():
    out = tensor(PAULI_Z, PAULI_I) @ PHI_PLUS.amplitudes
    np.testing.assert_allclose(out, PHI_MINUS.amplitudes, atol=1e-15)


def test_matmul_dagger_trace():
    np.testing.assert_allclose(matmul(PAULI_X, PAULI_X), np.eye(2))
    a = np.array([[1 + 2j, 3], [4j, 5 - 1j]])
    np.testing.assert_allclose(dagger(dagger(a)), a)
    assert trace(np.eye(4)) == pytest.approx(4.0)


def test_dimension_mismatch_is_usage_error():
    with pytest.raises(UsageError):
        matmul(np.eye(2), np.eye(4))
    with pytest.raises(UsageError):
        trace(np.ones((2, 3)))


def test_embed_operator_position():
    np.testing.assert_allclose(embed_operator(PAULI_X, 0, 2), np.kron(PAULI_X, PAULI_I))
    np.testing.assert_allclose(embed_operator(PAULI_X, 1, 2), np.kron(PAULI_I, PAULI_X))
    with pytest.raises(UsageError):
        embed_operator(PAULI_X, 2, 2)


def test_partial_trace_of_bell_state_is_maximally_mixed():
    rho = DensityMatrix.from_pure(PHI_PLUS)
    np.testing.assert_allclose(partial_trace(rho, {0}).matrix, np.eye(2) / 2, atol=1e-15)
    np.testing.assert_allclose(partial_trace(rho, {1}).matrix, np.eye(2) / 2, atol=1e-15)


def test_partial_trace_of_product_recovers_first_pair():
    rho = DensityMatrix(0.7 * PHI_PLUS.projector() + 0.3 * PSI_MINUS.projector())
    sigma = DensityMatrix(np.diag([0.1, 0.2, 0.3, 0.4]).astype(complex))
    joint = rho.tensor(sigma)
    np.testing.assert_allclose(partial_trace(joint, [0, 1]).matrix, rho.matrix, atol=1e-14)
    np.testing.assert_allclose(partial_trace(joint, [2, 3]).matrix, sigma.matrix, atol=1e-14)


def test_partial_trace_of_basis_state():
    rho = DensityMatrix(np.diag([1.0, 0.0, 0.0, 0.0]).astype(complex))
    np.testing.assert_allclose(partial_trace(rho, [0]).matrix, np.diag([1.0, 0.0]), atol=1e-15)


def test_partial_trace_rejects_empty_keep():
    with pytest.raises(UsageError):
        partial_trace(DensityMatrix.maximally_mixed(2), [])


@pytest.mark.parametrize("m, expected", [
    (np.diag([0.3, 0.7]), 0.3),
    (np.eye(2) / 2, 0.5),
    (PAULI_X, -1.0),
])
def test_min_eigenvalue_hermitian(m, expected):
    assert min_eigenvalue_hermitian(m) == pytest.approx(expected, abs=1e-12)


def test_min_eigenvalue_rejects_non_hermitian():
    with pytest.raises(UsageError):
        min_eigenvalue_hermitian(np.array([[0, 1], [0, 0]]))


@pytest.mark.parametrize("matrix", [
    np.array([[0.5, 0.5], [0.0, 0.5]]),    # não hermitiana
    np.eye(2),                              # traço 2
    np.diag([1.5, -0.5]),                   # autovalor negativo
    np.eye(32) / 32,                        # 5 qubits
    np.eye(3) / 3,                          # dimensão não potência de 2
])
def test_density_matrix_validation(matrix):
    with pytest.raises(UsageError):
        DensityMatrix(matrix)


def test_density_matrix_is_read_only():
    rho = DensityMatrix.maximally_mixed(2)
    with pytest.raises(ValueError):
        rho.matrix[0, 0] = 1.0
    assert rho.purity() == pytest.approx(0.25)
    assert rho.n_qubits == 2


def test_pure_state_must_be_normalized():
    with pytest.raises(UsageError):
        PureState(np.array([1.0, 1.0]))


def test_pure_fidelity_examples():
    assert pure_fidelity(DensityMatrix.from_pure(PHI_PLUS), PHI_PLUS) == pytest.approx(1.0)
    assert pure_fidelity(DensityMatrix.maximally_mixed(2), PHI_PLUS) == pytest.approx(0.25)
    mixed = DensityMatrix(0.82 * PHI_PLUS.projector() + 0.18 * PHI_MINUS.projector())
    assert pure_fidelity(mixed, PHI_PLUS) == pytest.approx(0.82, abs=1e-14)


def test_pure_fidelity_dimension_mismatch():
    with pytest.raises(UsageError):
        pure_fidelity(DensityMatrix.maximally_mixed(1), PHI_PLUS)


def _random_matrix(rng, dim):
    return rng.normal(size=(dim, dim)) + 1j * rng.normal(size=(dim, dim))


def test_tensor_is_associative(rng):
    a, b, c = (_random_matrix(rng, 2) for _ in range(3))
    np.testing.assert_allclose(tensor(tensor(a, b), c), tensor(a, tensor(b, c)), atol=1e-12)


def test_tensor_mixed_product(rng):
    a, b, c, d = (_random_matrix(rng, 2) for _ in range(4))
    np.testing.assert_allclose(matmul(tensor(a, b), tensor(c, d)), tensor(matmul(a, c), matmul(b, d)), atol=1e-12)


def test_pure_fidelity_is_linear_in_rho(rng):
    rho = DensityMatrix(0.7 * PHI_PLUS.projector() + 0.3 * PSI_PLUS.projector())
    sigma = DensityMatrix.maximally_mixed(2)
    for t in rng.random(10):
        mix = DensityMatrix(t * rho.matrix + (1 - t) * sigma.matrix)
        expected = t * pure_fidelity(rho, PHI_PLUS) + (1 - t) * pure_fidelity(sigma, PHI_PLUS)
        assert pure_fidelity(mix, PHI_PLUS) == pytest.approx(expected, abs=1e-12)
