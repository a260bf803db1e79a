"""Seeded random instances for property suites and experiments."""

from __future__ import annotations

import numpy as np

from .states import QuditTarget, TwoPhotonState, normalize


def random_unitary(rng: np.random.Generator, m: int) -> np.ndarray:
    """Haar-distributed m x m unitary via QR of a Ginibre matrix."""
    z = rng.standard_normal((m, m)) + 1j * rng.standard_normal((m, m))
    q, r = np.linalg.qr(z)
    return q * (np.diag(r) / np.abs(np.diag(r)))


def random_complex_symmetric(rng: np.random.Generator, m: int) -> np.ndarray:
    z = rng.standard_normal((m, m)) + 1j * rng.standard_normal((m, m))
    return (z + z.T) / 2.0


def random_state_of_rank(rng: np.random.Generator, m: int, rank: int) -> TwoPhotonState:
    """Random normalized two-photon state over m modes with the given rank."""
    if not 1 <= rank <= m:
        raise ValueError(f"rank must be in 1..{m}")
    g = rng.standard_normal((m, rank)) + 1j * rng.standard_normal((m, rank))
    return normalize(g @ g.T)


def random_target_of_rank(
    rng: np.random.Generator, d1: int, d2: int, rank: int
) -> QuditTarget:
    """Random unit-norm two-qudit target with the given matrix rank."""
    if not 1 <= rank <= min(d1, d2):
        raise ValueError(f"rank must be in 1..{min(d1, d2)}")
    a = rng.standard_normal((d1, rank)) + 1j * rng.standard_normal((d1, rank))
    b = rng.standard_normal((rank, d2)) + 1j * rng.standard_normal((rank, d2))
    C = a @ b
    return QuditTarget(C / np.linalg.norm(C))
