import numpy as np
import pytest

from photonprep import (
    QuditTarget,
    amplitude,
    extract_heralded,
    extract_postselected,
    from_qudit_target,
    normalize,
    states_equal_up_to_phase,
    success_probability_postselect,
    synthesize_herald,
)
from photonprep.fock import occupation_basis
from photonprep.random_states import (
    random_complex_symmetric,
    random_state_of_rank,
    random_unitary,
)
from photonprep.result import HeraldPattern
from photonprep.states import single_photons_state


class TestStatesEqualUpToPhase:
    def test_reflexive(self, rng):
        S = random_complex_symmetric(rng, 3)
        equal, phase = states_equal_up_to_phase(S, S)
        assert equal
        assert phase == pytest.approx(1.0)

    def test_phase_factor(self, rng):
        S = random_complex_symmetric(rng, 3)
        equal, phase = states_equal_up_to_phase(S, np.exp(1j * np.pi / 3) * S)
        assert equal
        assert phase == pytest.approx(np.exp(-1j * np.pi / 3))

    def test_perturbation_detected(self, rng):
        S = normalize(random_complex_symmetric(rng, 3)).S
        other = S.copy()
        other[0, 0] += 0.1
        other = normalize(other).S
        equal, _ = states_equal_up_to_phase(S, other, tol=1e-6)
        assert not equal

    def test_symmetry(self, rng):
        S1 = normalize(random_complex_symmetric(rng, 4)).S
        S2 = np.exp(0.7j) * S1
        eq12, p12 = states_equal_up_to_phase(S1, S2)
        eq21, p21 = states_equal_up_to_phase(S2, S1)
        assert eq12 and eq21
        assert p12 == pytest.approx(np.conj(p21))

    def test_invariant_under_conjugation(self, rng):
        S1 = normalize(random_complex_symmetric(rng, 4)).S
        S2 = np.exp(0.3j) * S1
        U = random_unitary(rng, 4)
        eq, _ = states_equal_up_to_phase(U.T @ S1 @ U, U.T @ S2 @ U)
        assert eq


class TestExtractPostselected:
    def test_identity_circuit(self):
        target = QuditTarget(np.eye(2, dtype=complex) / np.sqrt(2))
        state = from_qudit_target(target)
        report = extract_postselected(np.eye(4, dtype=complex), state, 2, 2, target.C)
        assert np.allclose(report.extracted, target.C)
        assert report.probability == pytest.approx(1.0)
        assert report.fidelity_vs_target == pytest.approx(1.0)

    def test_probability_bounded(self, rng):
        state = random_state_of_rank(rng, 4, 2)
        for _ in range(10):
            U = random_unitary(rng, 5)
            report = extract_postselected(U, state, 2, 2)
            assert 0.0 <= report.probability <= 1.0 + 1e-12

    def test_all_photons_to_auxiliaries(self):
        # swap the computational modes with auxiliaries: nothing stays
        U = np.eye(4, dtype=complex)[[2, 3, 0, 1]]
        state = single_photons_state(2).padded(4)
        assert success_probability_postselect(U, state, 1, 1) == pytest.approx(0.0)

    def test_agrees_with_amplitude_pathway(self, rng):
        """Matrix conjugation vs per-outcome permanent amplitudes."""
        m = 4
        state = normalize(random_complex_symmetric(rng, m))
        U = random_unitary(rng, m)
        d1 = d2 = 2
        conjugated = success_probability_postselect(U, state, d1, d2)

        def input_coeff(occ):
            i, j = [idx for idx in range(m) for _ in range(occ[idx])]
            return np.sqrt(2) * state.S[i, i] if i == j else 2 * state.S[i, j]

        direct = 0.0
        for i in range(d1):
            for j in range(d1, d1 + d2):
                k = np.zeros(m, dtype=int)
                k[i] += 1
                k[j] += 1
                amp = sum(
                    input_coeff(ell) * amplitude(U, k, ell)
                    for ell in occupation_basis(m, 2)
                )
                direct += abs(amp) ** 2
        assert direct == pytest.approx(conjugated, abs=1e-10)


class TestExtractHeralded:
    def test_trivial_two_mode_identity(self):
        state = single_photons_state(2)
        report = extract_heralded(
            np.eye(2, dtype=complex), 2, HeraldPattern(signal=()), 2, target=state.S
        )
        assert np.allclose(report.extracted, state.S)
        assert report.probability == pytest.approx(1.0)

    def test_synthesized_rank3(self, rng):
        target = random_state_of_rank(rng, 4, 3)
        result = synthesize_herald(target, 3)
        report = extract_heralded(
            result.unitary, 3, result.herald, 4, target=target.S
        )
        assert report.fidelity_vs_target > 1 - 1e-9

    def test_probability_mass_partition(self, rng):
        """Herald probability plus all other outcome mass sums to one."""
        target = random_state_of_rank(rng, 3, 2)
        result = synthesize_herald(target, 3)  # 3 payload + 1 herald + 3 aux
        U = result.unitary
        N = U.shape[0]
        n = 3
        ell = np.zeros(N, dtype=int)
        ell[:n] = 1
        total = sum(abs(amplitude(U, k, ell)) ** 2 for k in occupation_basis(N, n))
        assert total == pytest.approx(1.0, abs=1e-9)
        herald_mode = 3
        herald_mass = sum(
            abs(amplitude(U, k, ell)) ** 2
            for k in occupation_basis(N, n)
            if k[herald_mode] == 1
            and sum(k[:3]) == 2
            and sum(k[4:]) == 0
        )
        assert herald_mass == pytest.approx(result.success_probability, abs=1e-10)
