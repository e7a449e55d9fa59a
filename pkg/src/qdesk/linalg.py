"""Dense complex linear algebra used by the simulator.

Vectors are 1-D ``complex128`` arrays and matrices are 2-D ``complex128``
arrays in row-major order. Inner products are conjugate-linear in the first
argument and linear in the second.
"""
from __future__ import annotations

import numpy as np

STRUCT_TOL = 1e-10
ALGEBRA_TOL = 1e-12


class DimensionError(ValueError):
    """Operands have incompatible shapes."""


def as_vector(v) -> np.ndarray:
    arr = np.asarray(v, dtype=np.complex128)
    if arr.ndim != 1 or arr.size == 0:
        raise DimensionError(f"expected a non-empty 1-D vector, got shape {arr.shape}")
    if not np.all(np.isfinite(arr)):
        raise ValueError("vector has non-finite entries")
    return arr


def as_matrix(m) -> np.ndarray:
    arr = np.asarray(m, dtype=np.complex128)
    if arr.ndim != 2 or arr.size == 0:
        raise DimensionError(f"expected a non-empty 2-D matrix, got shape {arr.shape}")
    if not np.all(np.isfinite(arr)):
        raise ValueError("matrix has non-finite entries")
    return arr


def _square(m) -> np.ndarray:
    arr = as_matrix(m)
    if arr.shape[0] != arr.shape[1]:
        raise DimensionError(f"matrix must be square, got shape {arr.shape}")
    return arr


def inner_product(a, b) -> complex:
    a, b = as_vector(a), as_vector(b)
    if a.shape != b.shape:
        raise DimensionError(f"incompatible vectors: dim {a.size} vs {b.size}")
    return complex(np.vdot(a, b))


def norm(v) -> float:
    ip = inner_product(v, v)
    if abs(ip.imag) > ALGEBRA_TOL:
        raise ArithmeticError(f"<v|v> has imaginary part {ip.imag:.3e}")
    return float(np.sqrt(max(ip.real, 0.0)))


def tensor_vec(a, b) -> np.ndarray:
    """Kronecker product; entry ``i * len(b) + j`` is ``a[i] * b[j]``."""
    return np.kron(as_vector(a), as_vector(b))


def tensor_mat(a, b) -> np.ndarray:
    return np.kron(as_matrix(a), as_matrix(b))


def adjoint(m) -> np.ndarray:
    return as_matrix(m).conj().T.copy()


def is_unitary(m, tol: float = STRUCT_TOL) -> bool:
    u = _square(m)
    residual = u.conj().T @ u - np.eye(u.shape[0])
    return bool(np.max(np.abs(residual)) <= tol)


def is_hermitian(m, tol: float = STRUCT_TOL) -> bool:
    h = _square(m)
    return bool(np.max(np.abs(h - h.conj().T)) <= tol)


def mat_mul(a, b) -> np.ndarray:
    a, b = as_matrix(a), as_matrix(b)
    if a.shape[1] != b.shape[0]:
        raise DimensionError(f"cannot multiply {a.shape} by {b.shape}")
    return a @ b


def mat_apply(a, v) -> np.ndarray:
    a, v = as_matrix(a), as_vector(v)
    if a.shape[1] != v.size:
        raise DimensionError(f"cannot apply {a.shape} matrix to dim-{v.size} vector")
    return a @ v


def eigh_2x2(h) -> tuple[np.ndarray, np.ndarray]:
    """Closed-form eigensystem of a 2x2 Hermitian matrix.

    Returns ``(values, vectors)`` with eigenvalues ascending and the
    orthonormal eigenvectors as columns.
    """
    h = _square(h)
    if h.shape != (2, 2):
        raise DimensionError("eigh_2x2 needs a 2x2 matrix")
    if not is_hermitian(h, STRUCT_TOL):
        raise ValueError("matrix is not Hermitian")
    a, d = h[0, 0].real, h[1, 1].real
    b = h[0, 1]
    mean, half_gap = (a + d) / 2, (a - d) / 2
    r = float(np.hypot(half_gap, abs(b)))
    if r == 0.0:
        return np.array([mean, mean]), np.eye(2, dtype=np.complex128)
    values = np.array([mean - r, mean + r])
    vectors = np.empty((2, 2), dtype=np.complex128)
    for k, lam in enumerate(values):
        # Two candidate null vectors of (h - lam); keep the better conditioned one.
        u = np.array([b, lam - a], dtype=np.complex128)
        w = np.array([lam - d, np.conj(b)], dtype=np.complex128)
        v = u if np.linalg.norm(u) >= np.linalg.norm(w) else w
        vectors[:, k] = v / np.linalg.norm(v)
    return values, vectors


def evolve_family(generator, t: float) -> np.ndarray:
    """Return ``exp(-i t G)`` for a 2x2 Hermitian generator ``G``.

    With ``G = m I + K`` where ``K`` is traceless and ``K @ K = r**2 I``,
    the exponential is ``exp(-i t m) (cos(r t) I - i t sinc(r t) K)``.
    """
    g = _square(generator)
    if g.shape != (2, 2):
        raise DimensionError("evolve_family is restricted to 2x2 generators")
    if not is_hermitian(g, STRUCT_TOL):
        raise ValueError("generator is not Hermitian")
    g = (g + g.conj().T) / 2
    m = g[0, 0].real / 2 + g[1, 1].real / 2
    k = g - m * np.eye(2)
    r = float(np.sqrt(max((k @ k)[0, 0].real, 0.0)))
    sinc = t * np.sinc(r * t / np.pi)
    return np.exp(-1j * t * m) * (np.cos(r * t) * np.eye(2) - 1j * sinc * k)
