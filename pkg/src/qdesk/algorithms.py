"""Deutsch-Jozsa with an explicit two-register circuit, its classical
baseline, and the single-qubit coin-flip experiment."""
from __future__ import annotations

import enum
from dataclasses import dataclass, field

import numpy as np

from qdesk.qsim import (
    SPIN_Z,
    U_COIN,
    QRegister,
    apply_1q,
    measure_all,
    qreg_basis,
    walsh_hadamard,
)
from qdesk.qsim.measure import sample_indices
from qdesk.qsim.observables import eigen_coefficients


class Verdict(str, enum.Enum):
    CONSTANT = "Constant"
    BALANCED = "Balanced"


class PromiseClass(str, enum.Enum):
    CONSTANT0 = "Constant0"
    CONSTANT1 = "Constant1"
    BALANCED = "Balanced"
    INVALID = "Invalid"


@dataclass(frozen=True)
class OracleSpec:
    """Boolean function on n-bit words; ``table[x]`` is f(x) for x as an integer."""

    n: int
    table: tuple[int, ...]

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("oracle arity must be >= 1")
        if len(self.table) != 2**self.n:
            raise ValueError(f"table must have {2**self.n} entries")
        if any(b not in (0, 1) for b in self.table):
            raise ValueError("table entries must be 0 or 1")

    @classmethod
    def constant0(cls, n: int) -> OracleSpec:
        return cls(n, (0,) * 2**n)

    @classmethod
    def constant1(cls, n: int) -> OracleSpec:
        return cls(n, (1,) * 2**n)

    @classmethod
    def balanced_from_mask(cls, n: int, ones) -> OracleSpec:
        """f(x) = 1 exactly for the inputs in ``ones`` (2**(n-1) of them)."""
        ones = set(ones)
        if len(ones) != 2 ** (n - 1) or not all(0 <= x < 2**n for x in ones):
            raise ValueError(f"balanced mask needs {2 ** (n - 1)} distinct inputs below {2**n}")
        return cls(n, tuple(int(x in ones) for x in range(2**n)))

    @classmethod
    def from_bitmask(cls, n: int, mask: int) -> OracleSpec:
        """Bit ``x`` of the integer ``mask`` (LSB first) gives f(x)."""
        if mask < 0 or mask >= 1 << 2**n:
            raise ValueError("mask does not fit the oracle")
        return cls(n, tuple((mask >> x) & 1 for x in range(2**n)))

    @classmethod
    def random_balanced(cls, n: int, rng: np.random.Generator) -> OracleSpec:
        order = rng.permutation(2**n)
        return cls.balanced_from_mask(n, order[: 2 ** (n - 1)].tolist())

    def __call__(self, x: int) -> int:
        return self.table[x]


def validate_promise(f: OracleSpec) -> PromiseClass:
    ones = sum(f.table)
    if ones == 0:
        return PromiseClass.CONSTANT0
    if ones == 2**f.n:
        return PromiseClass.CONSTANT1
    if ones == 2 ** (f.n - 1):
        return PromiseClass.BALANCED
    return PromiseClass.INVALID


def oracle_apply(reg: QRegister, f: OracleSpec) -> QRegister:
    """``|x>|y> -> |x>|y xor f(x)>`` with the last qubit as ``y``."""
    if reg.n != f.n + 1:
        raise ValueError(f"oracle of arity {f.n} needs {f.n + 1} qubits, register has {reg.n}")
    pairs = reg.state.reshape(2**f.n, 2)
    flip = np.flatnonzero(np.asarray(f.table, dtype=bool))
    pairs[flip] = pairs[flip, ::-1]
    return reg


def phase_mark(reg: QRegister) -> QRegister:
    """diag(1, -1) on the last qubit."""
    reg.state.reshape(-1, 2)[:, 1] *= -1
    return reg


@dataclass(frozen=True)
class DJOutcome:
    verdict: Verdict
    readout: str
    oracle_queries: int
    gate_count: int
    trace: tuple[tuple[str, np.ndarray], ...] = field(default=(), compare=False, repr=False)


def deutsch_jozsa(f: OracleSpec, rng: np.random.Generator | None = None, trace: bool = False) -> DJOutcome:
    """Run the two-register circuit step for step.

    The promise (constant or balanced) is not checked. Both constants give
    ``Constant``: their final states differ only by a global sign. For a
    balanced ``f`` the readout is a genuine Born sample, never ``0^n``;
    ``rng`` defaults to a fixed seed so repeated runs are identical.
    """
    n = f.n
    steps = []
    gates = 0

    def record(label):
        if trace:
            steps.append((label, reg.state.copy()))

    reg = qreg_basis(n + 1, "0" * (n + 1))
    record("prepare")
    walsh_hadamard(reg, range(n))
    gates += n
    record("walsh-hadamard")
    oracle_apply(reg, f)
    gates += 1
    record("oracle")
    phase_mark(reg)
    gates += 1
    record("phase")
    oracle_apply(reg, f)
    gates += 1
    record("oracle")
    walsh_hadamard(reg, range(n))
    gates += n
    record("walsh-hadamard")

    rng = np.random.default_rng(0) if rng is None else rng
    readout = measure_all(reg, rng).outcome[:n]
    verdict = Verdict.CONSTANT if readout == "0" * n else Verdict.BALANCED
    return DJOutcome(verdict, readout, 2, gates, tuple(steps))


def classical_dj(f: OracleSpec) -> tuple[Verdict, int]:
    """Deterministic query baseline under the zero-or-balanced promise.

    Stops at the first 1 (balanced) or after 2**(n-1) + 1 zeros (constant).
    """
    limit = 2 ** (f.n - 1) + 1
    for queries, x in enumerate(range(2**f.n), 1):
        if f(x):
            return Verdict.BALANCED, queries
        if queries == limit:
            return Verdict.CONSTANT, queries
    raise AssertionError("unreachable")


def coin_flip(shots: int, rng: np.random.Generator, start: int = 0) -> dict[float, int]:
    """Prepare ``|start>``, apply the coin unitary, measure spin along z.

    Every shot prepares the same state, so it is computed once and each shot
    takes one Born draw from ``rng``.
    """
    if shots < 1:
        raise ValueError("shots must be >= 1")
    reg = qreg_basis(1, str(start))
    apply_1q(reg, U_COIN, 0)
    probs = np.abs(eigen_coefficients(reg.state, SPIN_Z)) ** 2
    picks = sample_indices(probs, rng.random(shots))
    hits = np.bincount(picks, minlength=probs.size)
    return {float(lam): int(c) for lam, c in zip(SPIN_Z.eigenvalues, hits)}
