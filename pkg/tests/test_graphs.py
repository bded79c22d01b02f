import numpy as np
import pytest

from gaugegraph import (
    ConfigurationError,
    GraphSpec,
    Pattern,
    assemble_hamiltonian,
    expand_pattern,
    gauge_diagonal,
    validate_pure_decay,
)
from helpers import random_valid_spec


class TestExpandPattern:
    def test_fcg_all_ones(self):
        assert expand_pattern("fcg", 4).tolist() == [1, 1, 1]

    def test_hcs_odd_distances_only(self):
        assert expand_pattern("hcs", 6).tolist() == [1, 0, 1, 0, 1]

    def test_custom_passthrough(self):
        assert expand_pattern("custom", 4, (1, 0, 1)).tolist() == [1, 0, 1]

    def test_hcs_odd_sites_rejected(self):
        with pytest.raises(ConfigurationError, match="even site count"):
            expand_pattern("hcs", 7)

    def test_custom_wrong_length_rejected(self):
        with pytest.raises(ConfigurationError, match="length"):
            expand_pattern("custom", 4, (1, 0))

    def test_custom_needs_active_distance(self):
        with pytest.raises(ConfigurationError, match="at least one"):
            expand_pattern("custom", 4, (0, 0, 0))

    def test_custom_entries_binary(self):
        with pytest.raises(ConfigurationError, match="0 or 1"):
            expand_pattern("custom", 4, (1, 2, 1))

    def test_unknown_pattern(self):
        with pytest.raises(ConfigurationError, match="unknown"):
            expand_pattern("ring", 4)


class TestValidatePureDecay:
    def test_all_ones_valid(self):
        assert validate_pure_decay((1, 1, 1, 1, 1)).valid

    def test_alternating_valid(self):
        assert validate_pure_decay((1, 0, 1, 0, 1)).valid

    def test_violation_reported(self):
        report = validate_pure_decay((1, 1, 0))
        assert not report.valid
        assert report.violations == (1, 3)

    def test_never_raises_on_junk_lengths(self):
        assert validate_pure_decay((1,)).valid


class TestAssemble:
    def test_two_site(self):
        H = assemble_hamiltonian(GraphSpec(sites=2, t_fwd=4.0, t_bwd=1.0))
        assert np.array_equal(H, np.array([[0, 4], [1, 0]], dtype=complex))

    def test_three_site_reciprocal(self):
        H = assemble_hamiltonian(GraphSpec(sites=3, t_fwd=1.0, t_bwd=1.0))
        assert np.array_equal(H, np.ones((3, 3)) - np.eye(3))

    def test_gauged_entries(self):
        # frozen from the assembly rule: d=1 upper carries t_fwd*e^{-i*theta*k}
        spec = GraphSpec(sites=6, t_fwd=2.0, t_bwd=1.0, gauge=1)
        H = assemble_hamiltonian(spec)
        assert H[0, 1] == pytest.approx(2 * np.exp(-1j * np.pi / 3), abs=1e-15)
        assert H[1, 0] == pytest.approx(np.exp(1j * np.pi / 3), abs=1e-15)
        # cross-check: diagonal-unitary similar to the ungauged matrix
        H0 = assemble_hamiltonian(spec.replace(gauge=0))
        D = gauge_diagonal(6, 1)
        assert np.abs(H - D @ H0 @ np.conj(D.T)).max() < 1e-14 * np.abs(H).max()

    def test_zero_diagonal(self):
        H = assemble_hamiltonian(GraphSpec(sites=7, t_fwd=2j, t_bwd=0.5, gauge=3))
        assert np.all(np.diag(H) == 0)

    def test_ring_toeplitz_exact(self):
        H = assemble_hamiltonian(GraphSpec(sites=8, t_fwd=1.5 + 0.5j, t_bwd=2.0, gauge=5))
        for d in range(1, 8):
            upper = np.diag(H, d)
            lower = np.diag(H, -d)
            assert (upper == upper[0]).all()
            assert (lower == lower[0]).all()

    def test_scaling_global_factor(self):
        spec = GraphSpec(sites=6, t_fwd=2.0, t_bwd=1.0, gauge=2)
        c = 0.7 - 0.3j
        scaled = assemble_hamiltonian(spec.replace(t_fwd=c * spec.t_fwd, t_bwd=c * spec.t_bwd))
        assert np.array_equal(scaled, c * assemble_hamiltonian(spec))

    def test_similarity_property_random(self):
        rng = np.random.default_rng(11)
        for _ in range(20):
            spec = random_valid_spec(rng, max_sites=16)
            H0 = assemble_hamiltonian(spec.replace(gauge=0))
            Hk = assemble_hamiltonian(spec)
            D = gauge_diagonal(spec.sites, spec.gauge)
            err = np.abs(Hk - D @ H0 @ np.conj(D.T)).max()
            assert err <= 1e-14 * np.abs(Hk).max()

    def test_invalid_connectivity_rejected(self):
        spec = GraphSpec(sites=4, pattern="custom", t_fwd=2.0, t_bwd=1.0,
                         connectivity=(1, 1, 0))
        with pytest.raises(ConfigurationError, match="pure-decay"):
            assemble_hamiltonian(spec)
        H = assemble_hamiltonian(spec, allow_invalid=True)  # exploration override
        assert H.shape == (4, 4)


class TestGaugeDiagonal:
    def test_identity_at_zero(self):
        assert np.array_equal(gauge_diagonal(5, 0), np.eye(5))

    def test_half_turn(self):
        D = gauge_diagonal(4, 2)
        assert np.allclose(np.diag(D), [1, -1, 1, -1], atol=1e-15)

    def test_sixth_roots(self):
        D = gauge_diagonal(6, 1)
        expected = np.exp(1j * np.pi / 3 * np.arange(6))
        assert np.allclose(np.diag(D), expected, atol=1e-15)

    def test_out_of_range(self):
        with pytest.raises(ConfigurationError):
            gauge_diagonal(4, 4)


class TestGraphSpecValidation:
    def test_backward_hopping_nonzero(self):
        with pytest.raises(ConfigurationError, match="backward"):
            GraphSpec(sites=4, t_fwd=1.0, t_bwd=0.0)

    def test_forward_hopping_nonzero(self):
        with pytest.raises(ConfigurationError, match="forward"):
            GraphSpec(sites=4, t_fwd=0.0, t_bwd=1.0)

    def test_minimum_sites(self):
        with pytest.raises(ConfigurationError):
            GraphSpec(sites=1, t_fwd=1.0, t_bwd=1.0)

    def test_gauge_range(self):
        with pytest.raises(ConfigurationError):
            GraphSpec(sites=4, t_fwd=1.0, t_bwd=1.0, gauge=4)

    def test_decay_rate_root(self):
        spec = GraphSpec(sites=4, t_fwd=16.0, t_bwd=1.0)
        assert spec.decay_rate == pytest.approx(0.5)
        assert spec.decay_rate**4 == pytest.approx(1 / 16)

    def test_pattern_coercion_case_insensitive(self):
        assert GraphSpec(sites=6, pattern="HCS", t_fwd=1, t_bwd=1).pattern is Pattern.HCS
