"""Heralded two-photon state preparation from n single photons.

Feasibility: a target state S can be heralded from n single photons exactly
when n >= rank(S). The construction works on the Takagi diagonal of the
target, diagonalizes the permanent bilinear form fixed by the herald rows,
scales its basis vectors by the target weights, conjugates back, and embeds
the scaled rows in a unitary. The key permanent identity is asserted
pre-embedding and the final circuit is checked by the Fock oracle.
"""

from __future__ import annotations

import math

import numpy as np

from . import fock, verify
from .exceptions import (
    InfeasibleRank,
    MultiplicityMismatch,
    VerificationFailure,
)
from .linalg import RANK_TOL, numerical_rank, takagi, unitary_extension
from .result import HeraldPattern, SynthesisResult
from .states import TwoPhotonState, state_rank

VERIFY_TOL = 1e-9
IDENTITY_TOL = 1e-9

# herald rows are (vector in C^n, photon multiplicity) pairs, one per herald mode
HeraldRows = list[tuple[np.ndarray, int]]


def feasible_herald(state_out: TwoPhotonState, n: int, tol: float = RANK_TOL) -> bool:
    """Rank rule: n single photons suffice iff n >= rank(S_out)."""
    if n < 2:
        raise ValueError("at least two photons are required")
    return n >= state_rank(state_out, tol)


def default_herald_rows(n: int) -> HeraldRows:
    """Minimal witness: no heralds for n = 2, else one mode absorbing n - 2
    photons through the flat row (1,...,1)/sqrt(n-2)."""
    if n == 2:
        return []
    return [(np.full(n, 1.0 / math.sqrt(n - 2), dtype=complex), n - 2)]


def _expanded_herald_rows(herald_rows: HeraldRows, n: int) -> list[np.ndarray]:
    rows = []
    for vec, mult in herald_rows:
        vec = np.asarray(vec, dtype=complex)
        if vec.shape != (n,):
            raise MultiplicityMismatch(f"herald row has shape {vec.shape}, expected ({n},)")
        rows.extend([vec] * int(mult))
    if len(rows) != n - 2:
        raise MultiplicityMismatch(
            f"herald multiplicities sum to {len(rows)}, expected {n - 2}"
        )
    return rows


def _bilinear_permanent(x: np.ndarray, y: np.ndarray, herald: list[np.ndarray]) -> complex:
    return fock.permanent(np.vstack([x, y, *herald]) if herald else np.vstack([x, y]))


def herald_bilinear_matrix(herald_rows: HeraldRows, n: int) -> np.ndarray:
    """Matrix F of the bilinear form (x, y) -> Per(x, y, herald rows)."""
    herald = _expanded_herald_rows(herald_rows, n)
    eye = np.eye(n, dtype=complex)
    F = np.empty((n, n), dtype=complex)
    for i in range(n):
        for j in range(i, n):
            F[i, j] = F[j, i] = _bilinear_permanent(eye[i], eye[j], herald)
    return F


def synthesize_herald(
    state_out: TwoPhotonState,
    n: int,
    herald_rows: HeraldRows | None = None,
    tol: float = RANK_TOL,
) -> SynthesisResult:
    """Construct a heralded circuit preparing the target from n single photons.

    The returned unitary acts on m payload + h herald + n auxiliary modes,
    with the photons entering the first n modes. Raises InfeasibleRank when
    n < rank(S_out).
    """
    if n < 2:
        raise ValueError("at least two photons are required")
    rank = state_rank(state_out, tol)
    if n < rank:
        raise InfeasibleRank(f"{n} photons cannot prepare a rank-{rank} state")

    if herald_rows is None:
        herald_rows = default_herald_rows(n)
    else:
        herald_rows = [(np.asarray(v, dtype=complex), int(s)) for v, s in herald_rows]
        F_user = herald_bilinear_matrix(herald_rows, n)
        if numerical_rank(F_user, tol) < n:
            # the theorem guarantees the flat witness works; degenerate user
            # choices fall back to it
            herald_rows = default_herald_rows(n)
    herald = _expanded_herald_rows(herald_rows, n)
    signal = tuple(int(s) for _, s in herald_rows)
    h = len(signal)
    m = state_out.modes

    F = herald_bilinear_matrix(herald_rows, n)
    fac_f = takagi(F)
    if numerical_rank(np.diag(fac_f.diagonal), tol) < n:
        raise VerificationFailure("herald bilinear form lost rank unexpectedly")

    fac_out = takagi(state_out.S)
    d = fac_out.diagonal
    signal_fact = math.prod(math.factorial(s) for s in signal)

    # rows diagonalizing the permanent form, scaled to the target weights:
    # Per(row_i, row_j, herald) = sqrt(2 * s!) * d_i * delta_ij
    diag_rows = np.zeros((m, n), dtype=complex)
    for i in range(rank):
        diag_rows[i] = (
            np.sqrt(np.sqrt(2.0 * signal_fact) * d[i] / fac_f.diagonal[i])
            * fac_f.V[:, i]
        )

    identity_error = 0.0
    for i in range(m):
        for j in range(i, m):
            per = _bilinear_permanent(diag_rows[i], diag_rows[j], herald)
            expect = np.sqrt(2.0 * signal_fact) * d[i] if i == j else 0.0
            identity_error = max(identity_error, abs(per - expect))
    if identity_error > IDENTITY_TOL:
        raise VerificationFailure(
            f"permanent identity violated pre-embedding by {identity_error:.3e}"
        )

    # conjugate back from the diagonal state to S_out, then stack herald rows
    payload_rows = fac_out.V.conj() @ diag_rows
    A = np.vstack([payload_rows] + [vec for vec, _ in herald_rows]) if h else payload_rows
    ext = unitary_extension(A)
    U = ext.U
    pattern = HeraldPattern(signal=signal)

    report = verify.extract_heralded(U, n, pattern, m, target=state_out.S)
    if not report.fidelity_vs_target > 1.0 - VERIFY_TOL:
        raise VerificationFailure(
            f"oracle fidelity {report.fidelity_vs_target} below tolerance"
        )
    if not report.probability > 0.0:
        raise VerificationFailure("vanishing herald probability on a feasible target")

    return SynthesisResult(
        unitary=U,
        aux_modes=ext.N - m - h,
        scale_alpha=1.0 / ext.sigma1,
        success_probability=report.probability,
        herald=pattern,
        details={
            "diagonal_rows": diag_rows,
            "herald_rows": herald_rows,
            "payload_rows": payload_rows,
            "takagi_diagonal": d,
            "bilinear_matrix": F,
            "identity_error": identity_error,
            "payload_modes": m,
            "photons": n,
            "oracle_report": report,
        },
    )
