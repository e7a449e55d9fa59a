"""Spin states, the singlet, product-state test, Pauli decomposition and
the failed CNOT copier."""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from qdesk.linalg import as_matrix, as_vector, tensor_vec
from qdesk.qsim.gates import IDENTITY, PAULI_X, PAULI_Y, PAULI_Z
from qdesk.qsim.register import QRegister, apply_cnot

_R2 = 1 / np.sqrt(2)


def spin_state(direction: str, orientation: str) -> np.ndarray:
    up_z = np.array([1, 0], dtype=np.complex128)
    down_z = np.array([0, 1], dtype=np.complex128)
    table = {
        ("z", "up"): up_z,
        ("z", "down"): down_z,
        ("x", "up"): _R2 * (up_z + down_z),
        ("x", "down"): _R2 * (up_z - down_z),
    }
    try:
        return table[direction, orientation].copy()
    except KeyError:
        raise ValueError(f"unknown spin state {direction}/{orientation}") from None


def prepare_singlet() -> QRegister:
    """``(|01> - |10>) / sqrt(2)``."""
    return QRegister(2, np.array([0, _R2, -_R2, 0], dtype=np.complex128))


def product_determinant(state) -> complex:
    a = as_vector(state)
    if a.size != 4:
        raise ValueError("two-qubit state expected")
    m = a.reshape(2, 2)
    return complex(m[0, 0] * m[1, 1] - m[0, 1] * m[1, 0])


def is_product_2q(state, tol: float = 1e-10) -> bool:
    """Rank-one test: the 2x2 amplitude matrix has vanishing determinant."""
    return abs(product_determinant(state)) <= tol


PAULI_BASIS = (IDENTITY, PAULI_X, PAULI_Y, PAULI_Z)


@dataclass(frozen=True)
class PauliDecomposition:
    c0: complex
    c1: complex
    c2: complex
    c3: complex

    def coefficients(self) -> tuple[complex, complex, complex, complex]:
        return (self.c0, self.c1, self.c2, self.c3)

    def reconstruct(self) -> np.ndarray:
        return sum(c * p for c, p in zip(self.coefficients(), PAULI_BASIS))


def pauli_decompose(m) -> PauliDecomposition:
    m = as_matrix(m)
    if m.shape != (2, 2):
        raise ValueError("Pauli decomposition needs a 2x2 matrix")
    return PauliDecomposition(*(complex(np.trace(p @ m) / 2) for p in PAULI_BASIS))


def clone_attempt_fidelity(psi) -> float:
    """``|<psi psi| CNOT |psi 0>|^2``; 1 only when ``psi`` is a basis state."""
    psi = as_vector(psi)
    if psi.size != 2:
        raise ValueError("single-qubit state expected")
    if abs(np.linalg.norm(psi) - 1.0) > 1e-9:
        raise ValueError("psi must be normalized")
    reg = QRegister(2, tensor_vec(psi, [1, 0]))
    apply_cnot(reg, 0, 1)
    target = tensor_vec(psi, psi)
    return float(abs(np.vdot(target, reg.state)) ** 2)
