"""Born-rule measurement with collapse."""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from qdesk.linalg import as_vector
from qdesk.qsim.register import QRegister, word_of

DEGENERATE_TOL = 1e-12


class DegenerateStateError(ArithmeticError):
    """Both measurement branches have vanishing weight."""


@dataclass(frozen=True)
class MeasurementRecord:
    outcome: str | float
    probability: float
    post_state: np.ndarray


def _clamped(probs: np.ndarray) -> np.ndarray:
    probs = np.where((probs < 0) & (probs >= -DEGENERATE_TOL), 0.0, probs)
    return probs


def sample_indices(probs: np.ndarray, draws) -> np.ndarray:
    """Inverse-CDF picks over ascending index for uniform ``draws`` in [0, 1)."""
    cdf = np.cumsum(probs)
    idx = np.searchsorted(cdf, np.asarray(draws) * cdf[-1], side="right")
    idx = np.minimum(idx, probs.size - 1)
    # Rounding can land on a trailing zero-probability entry; step back to the
    # last index with weight.
    nonzero = np.flatnonzero(probs)
    pos = np.searchsorted(nonzero, idx, side="right") - 1
    return nonzero[np.maximum(pos, 0)]


def sample_index(probs: np.ndarray, u: float) -> int:
    return int(sample_indices(probs, [u])[0])


def measure_all(reg: QRegister, rng: np.random.Generator) -> MeasurementRecord:
    """Measure every qubit; the register collapses to the observed basis state."""
    probs = _clamped(reg.probabilities())
    idx = sample_index(probs, rng.random())
    p = float(probs[idx] / probs.sum())
    reg.state[:] = 0.0
    reg.state[idx] = 1.0
    return MeasurementRecord(word_of(idx, reg.n), p, reg.state.copy())


def qubit_branch_probabilities(reg: QRegister, q: int) -> tuple[float, float]:
    reg._check(q)
    stride = 1 << (reg.n - 1 - q)
    view = (np.abs(reg.state) ** 2).reshape(-1, 2, stride)
    p0, p1 = float(view[:, 0, :].sum()), float(view[:, 1, :].sum())
    return max(p0, 0.0), max(p1, 0.0)


def measure_qubit(reg: QRegister, q: int, rng: np.random.Generator) -> MeasurementRecord:
    """Measure qubit ``q``; amplitudes inconsistent with the result are zeroed
    and the rest renormalized by the branch norm."""
    p0, p1 = qubit_branch_probabilities(reg, q)
    if p0 < DEGENERATE_TOL and p1 < DEGENERATE_TOL:
        raise DegenerateStateError("both branches have probability below 1e-12")
    total = p0 + p1
    u = rng.random()
    bit = 0 if u * total < p0 else 1
    keep = p0 if bit == 0 else p1
    stride = 1 << (reg.n - 1 - q)
    view = reg.state.reshape(-1, 2, stride)
    view[:, 1 - bit, :] = 0.0
    reg.state /= np.sqrt(keep)
    return MeasurementRecord(str(bit), keep / total, reg.state.copy())


def measure_state(state, rng: np.random.Generator) -> MeasurementRecord:
    """Non-mutating convenience over a bare vector."""
    return measure_all(QRegister.from_state(as_vector(state)), rng)
