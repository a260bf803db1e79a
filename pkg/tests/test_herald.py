import math

import numpy as np
import pytest

from photonprep import (
    InfeasibleRank,
    MultiplicityMismatch,
    extract_heralded,
    feasible_herald,
    herald_bilinear_matrix,
    normalize,
    numerical_rank,
    permanent,
    synthesize_herald,
)
from photonprep.herald import default_herald_rows
from photonprep.result import HeraldPattern
from photonprep.random_states import random_state_of_rank

BELL = normalize(
    np.array(
        [[0, 0, 1, 0], [0, 0, 0, 1], [1, 0, 0, 0], [0, 1, 0, 0]], dtype=complex
    )
)


class TestBilinearMatrix:
    def test_no_heralds(self):
        F = herald_bilinear_matrix([], 2)
        assert np.allclose(F, [[0, 1], [1, 0]])

    def test_single_flat_row(self):
        F = herald_bilinear_matrix([(np.ones(3), 1)], 3)
        assert np.allclose(F, np.ones((3, 3)) - np.eye(3))
        eigenvalues = np.sort(np.linalg.eigvalsh(F.real))
        assert np.allclose(eigenvalues, [-1, -1, 2])
        assert numerical_rank(F) == 3

    def test_two_flat_rows(self):
        F = herald_bilinear_matrix([(np.ones(4), 2)], 4)
        assert np.allclose(F, F.T)
        assert numerical_rank(F) == 4

    def test_multiplicity_mismatch(self):
        with pytest.raises(MultiplicityMismatch):
            herald_bilinear_matrix([(np.ones(4), 1)], 4)


class TestFeasibility:
    def test_bell_needs_four_photons(self):
        assert feasible_herald(BELL, 4)
        assert not feasible_herald(BELL, 3)

    def test_rank_two_needs_no_heralds(self, rng):
        assert feasible_herald(random_state_of_rank(rng, 3, 2), 2)

    def test_rank_three_with_three_photons(self, rng):
        assert feasible_herald(random_state_of_rank(rng, 4, 3), 3)


class TestSynthesize:
    def test_diagonal_rank_two_no_heralds(self):
        target = normalize(np.diag([0.6, 0.4]).astype(complex))
        result = synthesize_herald(target, 2)
        assert result.herald.signal == ()
        report = result.details["oracle_report"]
        assert report.fidelity_vs_target > 1 - 1e-9

    def test_bell_pair_four_photons(self):
        result = synthesize_herald(BELL, 4)
        assert result.herald.signal == (2,)
        report = result.details["oracle_report"]
        assert report.fidelity_vs_target > 1 - 1e-9
        assert result.success_probability > 0

    def test_rank_three_infeasible_with_two(self, rng):
        with pytest.raises(InfeasibleRank):
            synthesize_herald(random_state_of_rank(rng, 4, 3), 2)

    @pytest.mark.parametrize("rank", [2, 3, 4])
    def test_random_targets_at_threshold(self, rng, rank):
        for _ in range(3):
            m = int(rng.integers(rank, 7))
            target = random_state_of_rank(rng, m, rank)
            result = synthesize_herald(target, rank)
            report = result.details["oracle_report"]
            assert report.fidelity_vs_target > 1 - 1e-9
            if rank > 2:
                with pytest.raises(InfeasibleRank):
                    synthesize_herald(target, rank - 1)

    def test_extra_photons_allowed(self, rng):
        target = random_state_of_rank(rng, 3, 2)
        result = synthesize_herald(target, 4)
        assert result.herald.signal == (2,)
        assert result.details["oracle_report"].fidelity_vs_target > 1 - 1e-9

    def test_degenerate_user_rows_fall_back(self, rng):
        target = random_state_of_rank(rng, 4, 3)
        # a zero herald row makes the bilinear form rank-deficient
        result = synthesize_herald(target, 3, herald_rows=[(np.zeros(3), 1)])
        assert result.details["oracle_report"].fidelity_vs_target > 1 - 1e-9

    def test_proof_identity_pre_embedding(self, rng):
        target = random_state_of_rank(rng, 4, 3)
        result = synthesize_herald(target, 3)
        rows = result.details["diagonal_rows"]
        d = result.details["takagi_diagonal"]
        herald = [
            vec for vec, mult in result.details["herald_rows"] for _ in range(mult)
        ]
        s_fact = math.prod(
            math.factorial(s) for s in result.herald.signal
        )
        for i in range(rows.shape[0]):
            for j in range(rows.shape[0]):
                per = permanent(np.vstack([rows[i], rows[j], *herald]))
                expected = np.sqrt(2 * s_fact) * d[i] if i == j else 0.0
                assert abs(per - expected) < 1e-9

    def test_wrong_signal_query_loses_weight(self, rng):
        target = random_state_of_rank(rng, 3, 3)
        result = synthesize_herald(target, 3)
        m = target.S.shape[0]
        good = extract_heralded(result.unitary, 3, result.herald, m, target=target.S)
        # query the photon on an auxiliary mode instead of the herald mode
        wrong = extract_heralded(
            result.unitary, 3, HeraldPattern(signal=(1,)), m + 1, target=None
        )
        assert good.probability == pytest.approx(result.success_probability)
        assert wrong.probability < good.probability


def test_default_rows_structure():
    assert default_herald_rows(2) == []
    (vec, mult), = default_herald_rows(5)
    assert mult == 3
    assert np.allclose(vec, 1 / np.sqrt(3))
