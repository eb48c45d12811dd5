"""Dense complex linear algebra for the 2x2 / 3x3 / 4x4 matrices used everywhere else.

All functions are pure and operate on plain ``numpy`` arrays (complex128).
Two-qubit indices are big-endian: basis order |00>, |01>, |10>, |11>, with
Alice the first tensor factor.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DimensionMismatch, NotHermitian, SingularMatrix

ALICE = "alice"
BOB = "bob"

I2 = np.eye(2, dtype=complex)
SIGMA_X = np.array([[0, 1], [1, 0]], dtype=complex)
SIGMA_Y = np.array([[0, -1j], [1j, 0]], dtype=complex)
SIGMA_Z = np.array([[1, 0], [0, -1]], dtype=complex)
PAULIS = (SIGMA_X, SIGMA_Y, SIGMA_Z)

HERM_TOL = 1e-9


def multiply(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Matrix product with an explicit inner-dimension check."""
    a = np.asarray(a, dtype=complex)
    b = np.asarray(b, dtype=complex)
    if a.shape[1] != b.shape[0]:
        raise DimensionMismatch(f"inner dimensions differ: {a.shape} x {b.shape}")
    return a @ b


def kron(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Kronecker product."""
    return np.kron(np.asarray(a, dtype=complex), np.asarray(b, dtype=complex))


def dagger(m: np.ndarray) -> np.ndarray:
    return np.conj(m).T


def hermitize(m: np.ndarray) -> np.ndarray:
    """Hermitian part (M + M^dagger)/2."""
    return (m + dagger(m)) / 2


def _require_dim4(m: np.ndarray) -> np.ndarray:
    m = np.asarray(m, dtype=complex)
    if m.shape != (4, 4):
        raise DimensionMismatch(f"expected a 4x4 matrix, got {m.shape}")
    return m


def _party_axis(party: str) -> int:
    p = party.lower()
    if p == ALICE:
        return 0
    if p == BOB:
        return 1
    raise ValueError(f"unknown party {party!r}; use 'alice' or 'bob'")


def partial_trace(m: np.ndarray, party: str) -> np.ndarray:
    """Trace out the named qubit of a 4x4 operator; total trace is preserved."""
    m = _require_dim4(m)
    t = m.reshape(2, 2, 2, 2)
    if _party_axis(party) == 0:
        return np.einsum("ikil->kl", t)
    return np.einsum("kili->kl", t)


def partial_transpose(m: np.ndarray, party: str) -> np.ndarray:
    """Transpose the named qubit's indices of a 4x4 operator; involutive."""
    m = _require_dim4(m)
    t = m.reshape(2, 2, 2, 2)
    if _party_axis(party) == 0:
        return t.transpose(2, 1, 0, 3).reshape(4, 4)
    return t.transpose(0, 3, 2, 1).reshape(4, 4)


@dataclass(frozen=True)
class HermitianEigenSystem:
    """Eigenvalues ascending, eigenvectors as orthonormal columns."""

    eigenvalues: np.ndarray
    eigenvectors: np.ndarray


def hermitian_eigen(m: np.ndarray, tol: float = HERM_TOL) -> HermitianEigenSystem:
    """Eigendecomposition of a Hermitian matrix.

    The input is symmetrized as (M + M^dagger)/2 to absorb floating-point
    drift; deviation beyond ``tol`` (relative, Frobenius) raises NotHermitian.
    """
    m = np.asarray(m, dtype=complex)
    scale = np.linalg.norm(m)
    if np.linalg.norm(m - dagger(m)) > tol * max(scale, 1e-300):
        raise NotHermitian("matrix is not Hermitian within tolerance")
    w, v = np.linalg.eigh(hermitize(m))
    return HermitianEigenSystem(eigenvalues=w, eigenvectors=v)


def psd_inverse_sqrt(m: np.ndarray, rank_tol: float = 1e-9) -> np.ndarray:
    """M^(-1/2) for a Hermitian PSD matrix.

    Raises SingularMatrix when the smallest eigenvalue falls below
    ``rank_tol`` (absolute for unit-scale inputs).
    """
    es = hermitian_eigen(m)
    w, v = es.eigenvalues, es.eigenvectors
    if w[0] < rank_tol:
        raise SingularMatrix(f"smallest eigenvalue {w[0]:.3e} below rank_tol {rank_tol:.1e}")
    return (v * (1.0 / np.sqrt(w))) @ dagger(v)


def det4(m: np.ndarray) -> complex:
    """Determinant of a 4x4 matrix (LU based)."""
    return complex(np.linalg.det(_require_dim4(m)))


def solve3(a: np.ndarray, rhs: np.ndarray) -> np.ndarray:
    """Solve a 3x3 real system; minimum-norm least squares on (near) singular a.

    Singular values below 1e-10 * sigma_max are treated as zero.
    """
    a = np.asarray(a, dtype=float).reshape(3, 3)
    rhs = np.asarray(rhs, dtype=float).reshape(3)
    x, *_ = np.linalg.lstsq(a, rhs, rcond=1e-10)
    return x
