"""Named single-qubit gates and the four-angle parameterization."""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

_R2 = 1 / np.sqrt(2)


@dataclass(frozen=True)
class SingleQubitParams:
    a: float
    b: float
    c: float
    d: float

    def __post_init__(self):
        if not np.all(np.isfinite([self.a, self.b, self.c, self.d])):
            raise ValueError("gate parameters must be finite")


def gate_from_params(p: SingleQubitParams) -> np.ndarray:
    """``e^{ia} X(b) R(c) P(d)``: an x-rotation, a real rotation and a phase split."""
    xrot = np.array([[np.cos(p.b), -1j * np.sin(p.b)], [-1j * np.sin(p.b), np.cos(p.b)]])
    rot = np.array([[np.cos(p.c), -np.sin(p.c)], [np.sin(p.c), np.cos(p.c)]], dtype=np.complex128)
    phase = np.diag([np.exp(-1j * p.d), np.exp(1j * p.d)])
    return np.exp(1j * p.a) * (xrot @ rot @ phase)


HADAMARD = np.array([[1, 1], [1, -1]], dtype=np.complex128) * _R2
PHASE_S = np.diag([1, 1j]).astype(np.complex128)
PHASE_T = np.diag([1, np.exp(1j * np.pi / 4)]).astype(np.complex128)
PAULI_X = np.array([[0, 1], [1, 0]], dtype=np.complex128)
PAULI_Y = np.array([[0, -1j], [1j, 0]], dtype=np.complex128)
PAULI_Z = np.array([[1, 0], [0, -1]], dtype=np.complex128)
IDENTITY = np.eye(2, dtype=np.complex128)
U_COIN = np.array([[1, 1], [-1, 1]], dtype=np.complex128) * _R2

# Angle quadruples reproducing the named gates through gate_from_params.
PARAMS = {
    "U_coin": SingleQubitParams(0.0, 0.0, -np.pi / 4, 0.0),
    "H": SingleQubitParams(np.pi / 2, 0.0, np.pi / 4, np.pi / 2),
    "S": SingleQubitParams(np.pi / 4, 0.0, 0.0, np.pi / 4),
    "T": SingleQubitParams(np.pi / 8, 0.0, 0.0, np.pi / 8),
}

_NAMED = {
    "H": HADAMARD,
    "S": PHASE_S,
    "T": PHASE_T,
    "X": PAULI_X,
    "Y": PAULI_Y,
    "Z": PAULI_Z,
    "U_coin": U_COIN,
}


def named_gate(name: str) -> np.ndarray:
    try:
        return _NAMED[name].copy()
    except KeyError:
        raise KeyError(f"unknown gate {name!r}") from None
