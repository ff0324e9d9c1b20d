"""Shared test helpers: independent brute-force expectation values.

Everything here works directly on dense matrices with explicit Kronecker
products so that library results are checked against a second, unrelated
computation path.
"""

import itertools

import numpy as np

I2 = np.eye(2, dtype=complex)
SX = np.array([[0, 1], [1, 0]], dtype=complex)
SY = np.array([[0, -1j], [1j, 0]], dtype=complex)
SZ = np.array([[1, 0], [0, -1]], dtype=complex)
PAULIS = (SX, SY, SZ)


def kron_all(mats):
    out = np.array([[1.0 + 0j]])
    for m in mats:
        out = np.kron(out, m)
    return out


def ket(bits):
    vec = np.zeros(2 ** len(bits), dtype=complex)
    vec[int("".join(str(b) for b in bits), 2)] = 1.0
    return vec


def haar_unitary(dim, rng):
    z = rng.standard_normal((dim, dim)) + 1j * rng.standard_normal((dim, dim))
    q, r = np.linalg.qr(z)
    return q * (np.diag(r) / np.abs(np.diag(r)))


def pauli_expectation(matrix, ops):
    """tr(rho O_1 (x) ... (x) O_N) for explicit single-party operators."""
    return float(np.trace(matrix @ kron_all(ops)).real)


def brute_single(matrix, n_qubits, part):
    """Coherent vector of one qubit, by explicit operator expectations."""
    return np.array(
        [
            pauli_expectation(
                matrix, [PAULIS[a] if m == part else I2 for m in range(n_qubits)]
            )
            for a in range(3)
        ]
    )


def brute_subset_tensor(matrix, n_qubits, subset):
    """Correlation tensor over a subset of qubits (0-based), brute force."""
    shape = (3,) * len(subset)
    out = np.zeros(shape)
    for axes in itertools.product(range(3), repeat=len(subset)):
        ops = [I2] * n_qubits
        for party, axis in zip(subset, axes):
            ops[party] = PAULIS[axis]
        out[axes] = pauli_expectation(matrix, ops)
    return out
