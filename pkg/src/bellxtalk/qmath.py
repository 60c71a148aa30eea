"""Fixed-shape complex linear algebra for the qubit plane and its tensor square.

Vectors are numpy complex128 arrays of length 2 or 4, matrices are 2x2 or 4x4.
Basis order is fixed as |0>,|1> for single qubits and |00>,|01>,|10>,|11> for
pairs. Every public operation validates shapes and rejects non-finite entries.
"""

from __future__ import annotations

import numpy as np

VALID_DIMS = (2, 4)


def as_vector(values, dim: int | None = None) -> np.ndarray:
    """Coerce input to a complex vector of dimension 2 or 4."""
    vec = np.asarray(values, dtype=np.complex128)
    if vec.ndim != 1 or vec.shape[0] not in VALID_DIMS:
        raise ValueError(f"expected a vector of length 2 or 4, got shape {vec.shape}")
    if dim is not None and vec.shape[0] != dim:
        raise ValueError(f"expected a vector of length {dim}, got {vec.shape[0]}")
    if not np.isfinite(vec).all():
        raise ValueError("vector has non-finite components")
    return vec


def as_matrix(values, dim: int | None = None) -> np.ndarray:
    """Coerce input to a complex square matrix of dimension 2 or 4."""
    mat = np.asarray(values, dtype=np.complex128)
    if mat.ndim != 2 or mat.shape[0] != mat.shape[1] or mat.shape[0] not in VALID_DIMS:
        raise ValueError(f"expected a 2x2 or 4x4 matrix, got shape {mat.shape}")
    if dim is not None and mat.shape[0] != dim:
        raise ValueError(f"expected a {dim}x{dim} matrix, got {mat.shape[0]}x{mat.shape[0]}")
    if not np.isfinite(mat).all():
        raise ValueError("matrix has non-finite entries")
    return mat


def inner(u, v) -> complex:
    """Inner product <u|v>, conjugate-linear in the first (bra) argument."""
    u = as_vector(u)
    v = as_vector(v, dim=u.shape[0])
    return complex(np.vdot(u, v))


def tensor_vec(u, v) -> np.ndarray:
    """Tensor product of two qubit vectors; component 2a+b equals u_a * v_b."""
    return np.kron(as_vector(u, dim=2), as_vector(v, dim=2))


def tensor_mat(a, b) -> np.ndarray:
    """Kronecker product of two 2x2 matrices in the fixed basis order."""
    return np.kron(as_matrix(a, dim=2), as_matrix(b, dim=2))


def mat_apply(m, v) -> np.ndarray:
    m = as_matrix(m)
    return m @ as_vector(v, dim=m.shape[0])


def mat_mul(a, b) -> np.ndarray:
    a = as_matrix(a)
    return a @ as_matrix(b, dim=a.shape[0])


def adjoint(m) -> np.ndarray:
    """Conjugate transpose."""
    return as_matrix(m).conj().T.copy()


def frobenius_norm(m) -> float:
    return float(np.linalg.norm(as_matrix(m)))
