import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from photonprep import (
    QuditTarget,
    ZeroState,
    evolve_two_photon,
    from_qudit_target,
    normalize,
    single_photons_state,
    state_rank,
)
from photonprep.random_states import (
    random_complex_symmetric,
    random_state_of_rank,
    random_unitary,
)


def bell_target(d):
    return QuditTarget(np.eye(d, dtype=complex) / np.sqrt(d))


class TestFromQuditTarget:
    def test_qubit_bell_has_rank_4(self):
        assert state_rank(from_qudit_target(bell_target(2))) == 4

    def test_product_state_has_rank_2(self):
        C = np.zeros((2, 2), dtype=complex)
        C[0, 0] = 1.0
        assert state_rank(from_qudit_target(QuditTarget(C))) == 2

    def test_qutrit_bell_has_rank_6(self):
        assert state_rank(from_qudit_target(bell_target(3))) == 6

    def test_block_recovers_target(self, rng):
        C = rng.standard_normal((3, 2)) + 1j * rng.standard_normal((3, 2))
        C /= np.linalg.norm(C)
        state = from_qudit_target(QuditTarget(C))
        assert np.allclose(2 * state.S[:3, 3:], C)

    def test_normalized(self):
        state = from_qudit_target(bell_target(4))
        assert 2 * np.trace(state.S.conj().T @ state.S).real == pytest.approx(1.0)


class TestSinglePhotonsState:
    def test_two_modes(self):
        state = single_photons_state(2)
        assert np.allclose(state.S, [[0, 0.5], [0.5, 0]])
        assert 2 * np.trace(state.S.conj().T @ state.S).real == pytest.approx(1.0)

    def test_rank_two(self):
        assert state_rank(single_photons_state(2)) == 2

    def test_padding_keeps_rank(self):
        state = single_photons_state(5)
        assert state_rank(state) == 2
        assert np.count_nonzero(state.S) == 2

    def test_rejects_single_mode(self):
        with pytest.raises(ValueError):
            single_photons_state(1)


class TestNormalize:
    def test_antidiagonal(self):
        state = normalize(np.array([[0, 1], [1, 0]], dtype=complex))
        assert np.allclose(state.S, [[0, 0.5], [0.5, 0]])

    def test_diagonal(self):
        state = normalize(np.eye(2, dtype=complex) / 7.3)
        assert np.allclose(state.S, np.diag([0.5, 0.5]))

    def test_idempotent(self, rng):
        state = normalize(random_complex_symmetric(rng, 4))
        again = normalize(state.S)
        assert np.allclose(state.S, again.S)

    def test_rejects_zero(self):
        with pytest.raises(ZeroState):
            normalize(np.zeros((3, 3)))

    @settings(max_examples=30, deadline=None)
    @given(seed=st.integers(0, 2**32 - 1), m=st.integers(2, 6))
    def test_weight_is_one(self, seed, m):
        gen = np.random.default_rng(seed)
        state = normalize(random_complex_symmetric(gen, m))
        assert 2 * np.trace(state.S.conj().T @ state.S).real == pytest.approx(1.0)


class TestStateRank:
    @pytest.mark.parametrize("rank", [1, 2, 3, 4])
    def test_constructed_rank(self, rng, rank):
        assert state_rank(random_state_of_rank(rng, 5, rank)) == rank

    def test_invariant_under_evolution(self, rng):
        state = random_state_of_rank(rng, 5, 3)
        for _ in range(20):
            U = random_unitary(rng, 5)
            evolved = normalize(evolve_two_photon(U, state.S))
            assert state_rank(evolved) == 3

    def test_padding_preserves_rank(self, rng):
        state = random_state_of_rank(rng, 4, 2)
        assert state_rank(state.padded(7)) == 2
