"""Post-selected generalized controlled-phase gates on n dual-rail qubits.

The gate applies phase e^{i phi} to |1...1> and identity elsewhere. The
optical construction routes the |1> rails through I + alpha * J (J a cyclic
permutation) and the |0> rails through the identity, both damped by the
largest singular value so the block embeds in a unitary. Success
probability is sigma_max^(-2n).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np

from . import fock
from .linalg import unitary_extension
from .result import SynthesisResult


@dataclass(frozen=True)
class CnZSpec:
    """Parameters of a controlled-phase construction."""

    n: int
    phi: float
    alpha: complex
    p_s: float


def cnz_alpha(n: int, phi: float) -> complex:
    """Principal n-th root of e^{i phi} - 1."""
    if n < 2:
        raise ValueError("need at least two qubits")
    base = 2.0 * np.sin(phi / 2.0)
    if base < 1e-12:  # phi at (or within roundoff of) 0 or 2*pi
        return 0.0 + 0.0j
    return complex(base ** (1.0 / n) * np.exp(1j * (phi + np.pi) / (2.0 * n)))


def _sigma_max(n: int, alpha: complex) -> float:
    w = np.exp(2j * np.pi * np.arange(n) / n)
    return float(max(1.0, np.max(np.abs(1.0 + alpha * w))))


def cnz_success_probability(n: int, phi: float) -> float:
    """Maximum success probability of the post-selected phase gate."""
    return _sigma_max(n, cnz_alpha(n, phi)) ** (-2 * n)


def build_cnz(n: int, phi: float) -> tuple[SynthesisResult, CnZSpec]:
    """Interferometer for the n-qubit controlled-phase gate.

    Mode layout: modes 0..n-1 are the |1> rails, n..2n-1 the |0> rails,
    followed by 2n vacuum auxiliaries from the unitary embedding.
    """
    alpha = cnz_alpha(n, phi)
    sigma_max = _sigma_max(n, alpha)
    p_s = sigma_max ** (-2 * n)
    damping = p_s ** (1.0 / (2 * n))

    J = np.roll(np.eye(n, dtype=complex), -1, axis=0)  # i -> i+1 mod n
    A_block = damping * (np.eye(n, dtype=complex) + alpha * J)
    B_block = damping * np.eye(n, dtype=complex)
    M = np.block(
        [
            [A_block, np.zeros((n, n), dtype=complex)],
            [np.zeros((n, n), dtype=complex), B_block],
        ]
    )
    ext = unitary_extension(M)  # sigma1 = 1 by the damping choice
    spec = CnZSpec(n=n, phi=float(phi), alpha=alpha, p_s=p_s)
    result = SynthesisResult(
        unitary=ext.U,
        aux_modes=ext.N - 2 * n,
        scale_alpha=damping,
        success_probability=p_s,
        herald=None,
        details={"A_block": A_block, "B_block": B_block, "sigma1": ext.sigma1},
    )
    return result, spec


def logical_occupation(x: tuple[int, ...], n: int, total_modes: int) -> np.ndarray:
    """Fock occupation of the dual-rail computational state |x>."""
    occ = np.zeros(total_modes, dtype=int)
    for i, bit in enumerate(x):
        occ[i if bit else n + i] = 1
    return occ


def verify_cnz(result: SynthesisResult, n: int, phi: float, tol: float = 1e-9) -> bool:
    """Oracle check of the gate action on the full computational basis.

    Diagonal amplitudes must equal sqrt(p_s) (times e^{i phi} on |1...1>),
    every cross-basis amplitude must vanish.
    """
    U = result.unitary
    N = U.shape[0]
    p_s = result.success_probability
    root = np.sqrt(p_s)
    for x in itertools.product((0, 1), repeat=n):
        ell = logical_occupation(x, n, N)
        for y in itertools.product((0, 1), repeat=n):
            k = logical_occupation(y, n, N)
            amp = fock.amplitude(U, k, ell)
            if y != x:
                expected = 0.0
            elif all(x):
                expected = root * np.exp(1j * phi)
            else:
                expected = root
            if abs(amp - expected) > tol:
                return False
    return True
