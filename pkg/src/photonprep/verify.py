"""Independent verification oracle for synthesized circuits.

Everything here goes through the permanent-based Fock amplitudes or the
matrix conjugation rule, never through a synthesizer's own bookkeeping.
This module also owns the factor-of-2 conventions between S-matrix entries
and Fock coefficients: the coefficient of a_i^† a_j^† |vac> (i < j) is
S_ij + S_ji = 2 S_ij, and the coefficient of |2_i> is sqrt(2) S_ii.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import fock
from .exceptions import DimensionMismatch, SignalMismatch, ZeroState
from .result import HeraldPattern
from .states import TwoPhotonState, normalize


@dataclass(frozen=True)
class ExtractionReport:
    """Outcome of projecting an evolved state back onto its encoding."""

    extracted: np.ndarray
    probability: float
    fidelity_vs_target: float
    global_phase: complex


def fidelity(S1: np.ndarray, S2: np.ndarray) -> float:
    """|<S1, S2>_F| / (||S1||_F ||S2||_F); overlap of the two-photon states."""
    S1 = np.asarray(S1, dtype=complex)
    S2 = np.asarray(S2, dtype=complex)
    n1 = np.linalg.norm(S1)
    n2 = np.linalg.norm(S2)
    if n1 == 0.0 or n2 == 0.0:
        return 0.0
    return float(abs(np.vdot(S1, S2)) / (n1 * n2))


def states_equal_up_to_phase(
    S1: np.ndarray, S2: np.ndarray, tol: float = 1e-9
) -> tuple[bool, complex]:
    """Whether S1 = c * S2 for a unit-modulus c; returns the best such c."""
    S1 = np.asarray(S1, dtype=complex)
    S2 = np.asarray(S2, dtype=complex)
    if S1.shape != S2.shape:
        raise DimensionMismatch(f"shapes {S1.shape} vs {S2.shape}")
    overlap = np.vdot(S2, S1)  # phase minimizing ||S1 - c S2||_F
    phase = overlap / abs(overlap) if abs(overlap) > 0 else 1.0 + 0.0j
    return bool(np.linalg.norm(S1 - phase * S2) < tol), complex(phase)


def _padded_state_matrix(state: TwoPhotonState, modes: int) -> np.ndarray:
    if state.modes > modes:
        raise DimensionMismatch("state has more modes than the unitary")
    return state.padded(modes).S


def extract_postselected(
    U: np.ndarray,
    state_in: TwoPhotonState,
    d1: int,
    d2: int,
    target: np.ndarray | None = None,
) -> ExtractionReport:
    """Evolve the input state and read off the post-selected two-qudit block.

    The extracted matrix is twice the off-diagonal d1 x d2 block of the
    evolved state matrix (the C block); the probability is the squared
    weight of all outcomes with one photon in each computational register.
    """
    U = np.asarray(U, dtype=complex)
    if U.shape[0] < d1 + d2:
        raise DimensionMismatch("unitary smaller than the computational registers")
    S_out = fock.evolve_two_photon(U, _padded_state_matrix(state_in, U.shape[0]))
    block = S_out[:d1, d1 : d1 + d2]
    extracted = 2.0 * block
    probability = float(np.sum(np.abs(extracted) ** 2))
    fid = fidelity(extracted, target) if target is not None else float("nan")
    phase = 1.0 + 0.0j
    if target is not None and np.linalg.norm(extracted) > 0:
        _, phase = states_equal_up_to_phase(
            extracted / np.linalg.norm(extracted),
            np.asarray(target, dtype=complex) / np.linalg.norm(target),
            tol=np.inf,
        )
    return ExtractionReport(
        extracted=extracted,
        probability=probability,
        fidelity_vs_target=fid,
        global_phase=phase,
    )


def success_probability_postselect(
    U: np.ndarray, state_in: TwoPhotonState, d1: int, d2: int
) -> float:
    """Probability that the two photons land in distinct computational registers."""
    U = np.asarray(U, dtype=complex)
    if U.shape[0] < d1 + d2:
        raise DimensionMismatch("unitary smaller than the computational registers")
    S_out = fock.evolve_two_photon(U, _padded_state_matrix(state_in, U.shape[0]))
    block = S_out[:d1, d1 : d1 + d2]
    # coefficient of a_i^† a_{d1+j}^† is 2 S_ij (i, d1+j always distinct)
    return float(np.sum(np.abs(2.0 * block) ** 2))


def extract_heralded(
    U: np.ndarray,
    n: int,
    pattern: HeraldPattern,
    m: int,
    target: np.ndarray | None = None,
) -> ExtractionReport:
    """Project the evolved n-photon input onto the herald signal.

    Input: one photon in each of the first n modes. Output projection:
    the given signal on the h herald modes (m..m+h-1), vacuum on
    auxiliaries, two photons anywhere in the first m payload modes.
    Returns the normalized payload state matrix and the herald probability.
    """
    U = np.asarray(U, dtype=complex)
    N = U.shape[0]
    h = pattern.herald_modes
    if N < m + h or N < n:
        raise DimensionMismatch("unitary too small for payload, heralds and photons")
    if pattern.total != n - 2:
        raise SignalMismatch(f"signal sums to {pattern.total}, expected {n - 2}")

    ell_in = np.zeros(N, dtype=int)
    ell_in[:n] = 1
    base_out = np.zeros(N, dtype=int)
    base_out[m : m + h] = pattern.signal

    T = np.zeros((m, m), dtype=complex)
    for i in range(m):
        for j in range(i, m):
            k_out = base_out.copy()
            k_out[i] += 1
            k_out[j] += 1
            amp = fock.amplitude(U, k_out, ell_in)
            if i == j:
                T[i, i] = amp / np.sqrt(2.0)
            else:
                T[i, j] = T[j, i] = amp / 2.0

    probability = float(2.0 * np.trace(T.conj().T @ T).real)
    phase = 1.0 + 0.0j
    fid = float("nan")
    if target is not None:
        fid = fidelity(T, target)
        if np.linalg.norm(T) > 0:
            _, phase = states_equal_up_to_phase(
                T / np.linalg.norm(T),
                np.asarray(target, dtype=complex) / np.linalg.norm(target),
                tol=np.inf,
            )
    try:
        extracted = normalize(T).S
    except ZeroState:
        extracted = T
    return ExtractionReport(
        extracted=extracted,
        probability=probability,
        fidelity_vs_target=fid,
        global_phase=phase,
    )
