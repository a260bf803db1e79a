"""Dense complex linear algebra: SVD, Takagi factorization, unitary dilation, rank.

All routines work on plain ``numpy`` arrays of dtype complex128. Diagonal
factors are always returned sorted in descending order so downstream
rescaling can align supports deterministically.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
import scipy.linalg

from .exceptions import ConvergenceFailure, NotSymmetric, ZeroMatrix

UNITARITY_TOL = 1e-10
RANK_TOL = 1e-10
SYMMETRY_TOL = 1e-10


def svd(matrix: np.ndarray) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Singular value decomposition ``M = U @ diag(sigma) @ V.conj().T``.

    Returns (U, sigma, V) with the singular values sorted descending.
    Raises ConvergenceFailure if the LAPACK kernel does not converge.
    """
    matrix = np.asarray(matrix, dtype=complex)
    if matrix.size == 0:
        raise ValueError("empty matrix")
    if not np.all(np.isfinite(matrix)):
        raise ValueError("matrix contains non-finite entries")
    try:
        u, sigma, vh = np.linalg.svd(matrix)
    except np.linalg.LinAlgError as exc:
        raise ConvergenceFailure(str(exc)) from exc
    return u, sigma, vh.conj().T


@dataclass(frozen=True)
class TakagiFactorization:
    """Factorization ``V.T @ S @ V = diag(diagonal)`` of a complex symmetric S."""

    V: np.ndarray
    diagonal: np.ndarray  # real, nonnegative, descending

    @property
    def D(self) -> np.ndarray:
        return np.diag(self.diagonal).astype(complex)


def takagi(S: np.ndarray, tol: float = SYMMETRY_TOL) -> TakagiFactorization:
    """Takagi (Autonne) factorization of a complex symmetric matrix.

    Computed from the SVD with a block-wise phase correction, so degenerate
    singular-value clusters are handled. The diagonal entries are the
    singular values of S, sorted descending.
    """
    S = np.asarray(S, dtype=complex)
    if S.ndim != 2 or S.shape[0] != S.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {S.shape}")
    if np.linalg.norm(S - S.T) >= max(tol, tol * np.linalg.norm(S)):
        raise NotSymmetric(f"asymmetry {np.linalg.norm(S - S.T):.3e} exceeds {tol}")
    S = (S + S.T) / 2.0

    u, sigma, v = svd(S)
    # Z = U^† conj(V) is unitary, commutes block-wise with diag(sigma), and is
    # symmetric on each degenerate cluster; its symmetric square root gives the
    # phase correction W with S = (U W) diag(sigma) (U W)^T.
    z = u.conj().T @ v.conj()

    n = len(sigma)
    scale = sigma[0] if n and sigma[0] > 0 else 1.0
    clusters: list[list[int]] = []
    for i in range(n):
        if clusters and sigma[clusters[-1][-1]] - sigma[i] < 1e-8 * scale:
            clusters[-1].append(i)
        else:
            clusters.append([i])

    w = np.zeros_like(z)
    for idx in clusters:
        block = z[np.ix_(idx, idx)]
        block = (block + block.T) / 2.0
        root = scipy.linalg.sqrtm(block)
        w[np.ix_(idx, idx)] = (root + root.T) / 2.0

    takagi_u = u @ w  # S = takagi_u diag(sigma) takagi_u^T
    factor = TakagiFactorization(V=takagi_u.conj(), diagonal=sigma)
    if np.linalg.norm(factor.V.T @ S @ factor.V - factor.D) > 1e-8 * max(1.0, scale):
        raise ConvergenceFailure("Takagi phase correction failed to reconstruct")
    return factor


@dataclass(frozen=True)
class UnitaryExtension:
    """An N x N unitary whose top-left block equals ``A / sigma1``."""

    U: np.ndarray
    sigma1: float
    N: int


def unitary_extension(A: np.ndarray) -> UnitaryExtension:
    """Embed ``A / sigma1`` as the top-left block of a unitary.

    Built in the singular basis of the contraction B = A / sigma1: with
    B = V1 S V2^†, the core

        K = [[S, sqrt(I - S S^T)], [sqrt(I - S^T S), -S^T]]

    is unitary entry-by-entry (all blocks diagonal), and
    U = diag(V1, V2) K diag(V2^†, V1^†) has top-left block B. The size is
    exactly m1 + m2, which meets the N <= m1 + m2 bound.
    """
    A = np.asarray(A, dtype=complex)
    if A.ndim != 2:
        raise ValueError("expected a matrix")
    m1, m2 = A.shape
    v1, s, v2h = np.linalg.svd(A)
    sigma1 = float(s[0])
    if sigma1 <= 0.0:
        raise ZeroMatrix("cannot extend the zero matrix")
    s = s / sigma1  # s[0] becomes exactly 1
    r = len(s)
    defect = np.sqrt(np.clip(1.0 - s**2, 0.0, None))

    core_s = np.zeros((m1, m2))
    core_s[:r, :r] = np.diag(s)
    top_defect = np.eye(m1)  # rows beyond the singular support pass through
    top_defect[:r, :r] = np.diag(defect)
    bottom_defect = np.eye(m2)
    bottom_defect[:r, :r] = np.diag(defect)
    K = np.block([[core_s, top_defect], [bottom_defect, -core_s.T]])

    left = scipy.linalg.block_diag(v1, v2h.conj().T)
    right = scipy.linalg.block_diag(v2h, v1.conj().T)
    U = left @ K @ right
    return UnitaryExtension(U=U, sigma1=sigma1, N=m1 + m2)


def numerical_rank(M: np.ndarray, tol: float = RANK_TOL) -> int:
    """Number of singular values above ``tol * sigma_max``; 0 for the zero matrix."""
    M = np.asarray(M, dtype=complex)
    if M.size == 0:
        return 0
    sigma = np.linalg.svd(M, compute_uv=False)
    if sigma[0] <= 0.0:
        return 0
    return int(np.count_nonzero(sigma > tol * sigma[0]))


def is_unitary(U: np.ndarray, tol: float = UNITARITY_TOL) -> bool:
    U = np.asarray(U, dtype=complex)
    if U.ndim != 2 or U.shape[0] != U.shape[1]:
        return False
    return bool(np.linalg.norm(U.conj().T @ U - np.eye(U.shape[0])) < tol * U.shape[0])
