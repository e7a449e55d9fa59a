"""State-vector register and in-place gate kernels.

Basis index ``i`` is the n-bit word of ``i`` with qubit 0 as the most
significant bit, so ``|110>`` is index 6. Kernels work on reshaped views of
the amplitude array and never build a ``2**n x 2**n`` matrix.
"""
from __future__ import annotations

import numpy as np

from qdesk.linalg import STRUCT_TOL, as_vector, is_unitary
from qdesk.qsim.gates import HADAMARD

MAX_QUBITS = 26
NORM_TOL = 1e-9


class ResourceError(RuntimeError):
    """Requested register exceeds the qubit cap."""


class QubitIndexError(IndexError):
    pass


def word_of(index: int, n: int) -> str:
    return format(index, f"0{n}b")


def index_of(word: str) -> int:
    if not word or any(c not in "01" for c in word):
        raise ValueError(f"bad bit word {word!r}")
    return int(word, 2)


class QRegister:
    """``n`` qubits holding a normalized state vector of length ``2**n``.

    Gate functions mutate ``state`` in place and return the register.
    """

    __slots__ = ("n", "state")

    def __init__(self, n: int, state=None):
        if not 1 <= n <= MAX_QUBITS:
            raise ResourceError(f"{n} qubits outside 1..{MAX_QUBITS}")
        self.n = n
        if state is None:
            self.state = np.zeros(2**n, dtype=np.complex128)
            self.state[0] = 1.0
        else:
            vec = as_vector(state).copy()
            if vec.size != 2**n:
                raise ValueError(f"state has {vec.size} amplitudes, expected {2**n}")
            if abs(np.linalg.norm(vec) - 1.0) > NORM_TOL:
                raise ValueError("state is not normalized")
            self.state = vec

    @classmethod
    def from_state(cls, state) -> QRegister:
        vec = as_vector(state)
        n = int(vec.size).bit_length() - 1
        if 2**n != vec.size:
            raise ValueError("state length is not a power of two")
        return cls(n, vec)

    def copy(self) -> QRegister:
        return QRegister(self.n, self.state)

    def probabilities(self) -> np.ndarray:
        return np.abs(self.state) ** 2

    def _tensor(self) -> np.ndarray:
        return self.state.reshape((2,) * self.n)

    def _check(self, *qubits: int) -> None:
        for q in qubits:
            if not 0 <= q < self.n:
                raise QubitIndexError(f"qubit {q} out of range for {self.n} qubits")
        if len(set(qubits)) != len(qubits):
            raise QubitIndexError(f"qubit indices must be distinct, got {qubits}")

    def __repr__(self) -> str:
        return f"QRegister(n={self.n})"


def qreg_basis(n: int, word: str) -> QRegister:
    if len(word) != n:
        raise ValueError(f"word {word!r} does not have length {n}")
    if n > MAX_QUBITS:
        raise ResourceError(f"{n} qubits exceeds cap {MAX_QUBITS}")
    reg = QRegister(n)
    reg.state[0] = 0.0
    reg.state[index_of(word)] = 1.0
    return reg


def apply_1q(reg: QRegister, gate, q: int) -> QRegister:
    """Apply a 2x2 unitary to qubit ``q`` over 2**(n-1) amplitude pairs.

    Paired amplitudes sit ``2**(n-1-q)`` apart; the view below groups them
    without copying the register.
    """
    reg._check(q)
    g = np.asarray(gate, dtype=np.complex128)
    if g.shape != (2, 2):
        raise ValueError("single-qubit gate must be 2x2")
    stride = 1 << (reg.n - 1 - q)
    view = reg.state.reshape(-1, 2, stride)
    a0 = view[:, 0, :].copy()
    a1 = view[:, 1, :]
    view[:, 0, :] = g[0, 0] * a0 + g[0, 1] * a1
    view[:, 1, :] = g[1, 0] * a0 + g[1, 1] * a1
    return reg


def _swap_target(reg: QRegister, controls: tuple[int, ...], target: int) -> None:
    t = reg._tensor()
    sel = [slice(None)] * reg.n
    for c in controls:
        sel[c] = 1
    sel0, sel1 = list(sel), list(sel)
    sel0[target], sel1[target] = 0, 1
    sel0, sel1 = tuple(sel0), tuple(sel1)
    upper = t[sel0].copy()
    t[sel0] = t[sel1]
    t[sel1] = upper


def apply_cnot(reg: QRegister, control: int, target: int) -> QRegister:
    reg._check(control, target)
    _swap_target(reg, (control,), target)
    return reg


def apply_toffoli(reg: QRegister, c1: int, c2: int, target: int) -> QRegister:
    reg._check(c1, c2, target)
    _swap_target(reg, (c1, c2), target)
    return reg


def walsh_hadamard(reg: QRegister, qubits=None) -> QRegister:
    qubits = range(reg.n) if qubits is None else tuple(qubits)
    reg._check(*qubits)
    for q in qubits:
        apply_1q(reg, HADAMARD, q)
    return reg


def check_gate(g, tol: float = STRUCT_TOL) -> np.ndarray:
    g = np.asarray(g, dtype=np.complex128)
    if g.shape != (2, 2) or not is_unitary(g, tol):
        raise ValueError("not a 2x2 unitary")
    return g
