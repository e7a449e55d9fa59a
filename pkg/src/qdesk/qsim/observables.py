"""Observables given by their eigensystem, measurement and expectation."""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from qdesk.linalg import STRUCT_TOL, as_vector, eigh_2x2
from qdesk.qsim.measure import MeasurementRecord, sample_index

NORMALIZED_TOL = 1e-9


@dataclass(frozen=True)
class Observable:
    """Real eigenvalues with orthonormal eigenvectors stored as columns."""

    eigenvalues: np.ndarray
    eigenbasis: np.ndarray

    @property
    def dim(self) -> int:
        return self.eigenbasis.shape[0]

    @classmethod
    def from_eigensystem(cls, eigenvalues, vectors) -> Observable:
        values = np.asarray(eigenvalues, dtype=np.float64)
        basis = np.column_stack([as_vector(v) for v in vectors])
        return cls(values, basis)

    @classmethod
    def from_matrix(cls, h) -> Observable:
        values, vectors = eigh_2x2(h)
        return cls(values, vectors)

    def matrix(self) -> np.ndarray:
        v = self.eigenbasis
        return (v * self.eigenvalues) @ v.conj().T

    def check(self, tol: float = STRUCT_TOL) -> None:
        v = self.eigenbasis
        if v.shape != (self.eigenvalues.size, self.eigenvalues.size):
            raise ValueError("eigenbasis must be square with one column per eigenvalue")
        if np.max(np.abs(v.conj().T @ v - np.eye(v.shape[1]))) > tol:
            raise ValueError("eigenbasis is not orthonormal")


# Spin-1/2 along z: +1/2 on |0>, -1/2 on |1>.
SPIN_Z = Observable(np.array([0.5, -0.5]), np.eye(2, dtype=np.complex128))


def eigen_coefficients(state, obs: Observable) -> np.ndarray:
    obs.check()
    state = as_vector(state)
    if state.size != obs.dim:
        raise ValueError(f"state dim {state.size} does not match observable dim {obs.dim}")
    return obs.eigenbasis.conj().T @ state


def measure_observable(state, obs: Observable, rng: np.random.Generator) -> MeasurementRecord:
    coeffs = eigen_coefficients(state, obs)
    probs = np.abs(coeffs) ** 2
    j = sample_index(probs, rng.random())
    return MeasurementRecord(float(obs.eigenvalues[j]), float(probs[j] / probs.sum()), obs.eigenbasis[:, j].copy())


def outcome_probabilities(state, obs: Observable) -> dict[float, float]:
    """Total Born weight per distinct eigenvalue."""
    probs = np.abs(eigen_coefficients(state, obs)) ** 2
    out: dict[float, float] = {}
    for lam, p in zip(obs.eigenvalues, probs):
        out[float(lam)] = out.get(float(lam), 0.0) + float(p)
    return out


def expectation(state, obs: Observable) -> float:
    state = as_vector(state)
    if abs(np.linalg.norm(state) - 1.0) > NORMALIZED_TOL:
        raise ValueError("expectation needs a normalized state")
    probs = np.abs(eigen_coefficients(state, obs)) ** 2
    return float(np.dot(obs.eigenvalues, probs))


def conjugate_observable(u, obs: Observable) -> Observable:
    """``U A U^dagger``: same eigenvalues, eigenvectors carried by ``U``."""
    u = np.asarray(u, dtype=np.complex128)
    if u.shape != (obs.dim, obs.dim):
        raise ValueError("unitary and observable dimensions differ")
    return Observable(obs.eigenvalues.copy(), u @ obs.eigenbasis)
