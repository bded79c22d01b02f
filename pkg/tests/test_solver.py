import itertools

import numpy as np
import pytest

from gaugegraph import (
    GraphSpec,
    SolverError,
    UsageError,
    assemble_hamiltonian,
    eigendecompose,
    full_analytic_spectrum,
    match_spectra,
    projector_distance,
    residual,
    subspace_projector,
)
from helpers import random_valid_spec


class TestEigendecompose:
    def test_two_site_square_roots(self):
        spectrum = eigendecompose(np.array([[0, 4], [1, 0]], dtype=complex))
        assert sorted(spectrum.values.real) == pytest.approx([-2, 2], abs=1e-13)

    def test_reciprocal_ring(self):
        H = assemble_hamiltonian(GraphSpec(sites=6, t_fwd=1.0, t_bwd=1.0))
        values = np.sort(eigendecompose(H).values.real)
        assert values == pytest.approx([-1, -1, -1, -1, -1, 5], abs=1e-12)

    def test_imaginary_hoppings_are_rotated_real_case(self):
        Hi = assemble_hamiltonian(GraphSpec(sites=6, t_fwd=2j, t_bwd=1j))
        Hr = assemble_hamiltonian(GraphSpec(sites=6, t_fwd=2.0, t_bwd=1.0))
        report = match_spectra(eigendecompose(Hi), 1j * eigendecompose(Hr).values)
        assert report.max_distance < 1e-12

    def test_vectors_unit_norm_and_phase_fixed(self):
        H = assemble_hamiltonian(GraphSpec(sites=9, t_fwd=1.3j, t_bwd=1j, gauge=4))
        for pair in eigendecompose(H):
            assert np.linalg.norm(pair.vector) == pytest.approx(1.0, abs=1e-12)
            top = pair.vector[np.argmax(np.abs(pair.vector))]
            assert top.imag == pytest.approx(0.0, abs=1e-12)
            assert top.real > 0
            assert pair.residual <= 1e-9

    def test_deterministic(self):
        H = assemble_hamiltonian(GraphSpec(sites=12, t_fwd=0.7 + 0.2j, t_bwd=1.0, gauge=5))
        a, b = eigendecompose(H), eigendecompose(H)
        assert np.array_equal(a.values, b.values)
        for pa, pb in zip(a.modes, b.modes):
            assert np.array_equal(pa.vector, pb.vector)

    def test_trace_matches_eigenvalue_sum(self):
        rng = np.random.default_rng(21)
        for _ in range(10):
            spec = random_valid_spec(rng, max_sites=16)
            H = assemble_hamiltonian(spec)
            total = eigendecompose(H).values.sum()
            assert abs(total) <= 1e-10 * np.linalg.norm(H)

    def test_determinant_matches_eigenvalue_product(self):
        rng = np.random.default_rng(22)
        for _ in range(10):
            spec = random_valid_spec(rng, max_sites=10)
            H = assemble_hamiltonian(spec)
            product = np.prod(eigendecompose(H).values)
            det = np.linalg.det(H)  # independent LU route
            assert abs(product - det) <= 1e-8 * max(1.0, abs(det))

    def test_similarity_invariance(self):
        rng = np.random.default_rng(23)
        H = assemble_hamiltonian(GraphSpec(sites=10, t_fwd=2.5j, t_bwd=1j))
        D = np.diag(np.exp(1j * rng.uniform(0, 2 * np.pi, 10)))
        transformed = D @ H @ np.conj(D.T)
        report = match_spectra(eigendecompose(H), eigendecompose(transformed))
        assert report.max_distance <= 1e-10 * np.linalg.norm(H)

    def test_non_square_rejected(self):
        with pytest.raises(UsageError):
            eigendecompose(np.zeros((3, 4)))

    def test_reorderings(self):
        spectrum = eigendecompose(
            assemble_hamiltonian(GraphSpec(sites=7, t_fwd=1.4 + 0.3j, t_bwd=1.0))
        )
        by_abs = spectrum.sorted_by("by_abs")
        mags = np.abs(by_abs.values)
        assert (np.diff(mags) <= 1e-12).all()
        by_re = spectrum.sorted_by("by_re")
        assert (np.diff(by_re.values.real) <= 1e-12).all()
        with pytest.raises(UsageError):
            spectrum.sorted_by("by_phase")

    def test_cap_enforced(self):
        with pytest.raises(UsageError, match="cap"):
            eigendecompose(np.eye(5), cap=4)


class TestResidual:
    def test_exact_pair_is_tiny(self):
        spec = GraphSpec(sites=8, t_fwd=3.0, t_bwd=1.0)
        H = assemble_hamiltonian(spec)
        for mode in full_analytic_spectrum(spec):
            assert residual(H, mode) <= 1e-12

    def test_grows_with_perturbation(self):
        spec = GraphSpec(sites=8, t_fwd=3.0, t_bwd=1.0)
        H = assemble_hamiltonian(spec)
        mode = full_analytic_spectrum(spec).modes[0]
        bump = np.ones(8) / np.sqrt(8)
        last = 0.0
        for eps in (1e-8, 1e-6, 1e-4, 1e-2):
            value = residual(H, mode.value, mode.site_values + eps * bump)
            assert value > last
            last = value

    def test_random_pair_is_order_one(self):
        rng = np.random.default_rng(24)
        H = assemble_hamiltonian(GraphSpec(sites=6, t_fwd=2.0, t_bwd=1.0))
        v = rng.normal(size=6) + 1j * rng.normal(size=6)
        assert residual(H, 0.3 + 0.1j, v) > 0.01

    def test_dimension_mismatch(self):
        with pytest.raises(UsageError):
            residual(np.eye(3), 1.0, np.ones(4))


class TestMatchSpectra:
    def test_identical_sets(self):
        values = np.array([1 + 1j, -2.0, 0.5j])
        report = match_spectra(values, values)
        assert report.max_distance == 0.0

    def test_single_offset(self):
        a = np.array([1.0, 2.0, 3.0], dtype=complex)
        b = np.array([1.0, 2.0 + 1e-7, 3.0], dtype=complex)
        report = match_spectra(a, b)
        assert report.max_distance == pytest.approx(1e-7, rel=1e-6)

    def test_minimizes_the_largest_distance(self):
        # brute-force oracle over all bijections
        rng = np.random.default_rng(25)
        for _ in range(30):
            n = int(rng.integers(2, 7))
            a = rng.normal(size=n) + 1j * rng.normal(size=n)
            b = rng.normal(size=n) + 1j * rng.normal(size=n)
            dist = np.abs(a[:, None] - b[None, :])
            best = min(
                max(dist[i, p[i]] for i in range(n))
                for p in itertools.permutations(range(n))
            )
            assert match_spectra(a, b).max_distance == pytest.approx(best, rel=1e-12)

    def test_analytic_vs_numeric(self):
        spec = GraphSpec(sites=12, t_fwd=2 + 1j, t_bwd=1.0)
        H = assemble_hamiltonian(spec)
        report = match_spectra(full_analytic_spectrum(spec), eigendecompose(H))
        assert report.max_distance <= 1e-9 * np.linalg.norm(H)

    def test_length_mismatch(self):
        with pytest.raises(UsageError):
            match_spectra([1.0, 2.0], [1.0])

    def test_assignment_is_bijection(self):
        rng = np.random.default_rng(26)
        a = rng.normal(size=9) + 1j * rng.normal(size=9)
        b = rng.permutation(a)
        report = match_spectra(a, b)
        cols = [j for _, j in report.assignment]
        assert sorted(cols) == list(range(9))
        assert report.max_distance == 0.0


class TestDegenerateSubspaces:
    def test_cluster_projector_matches_analytic_manifold(self):
        # reciprocal ring: five-fold degenerate manifold; single vectors are
        # arbitrary there, the projector is not
        spec = GraphSpec(sites=6, t_fwd=1.0, t_bwd=1.0)
        H = assemble_hamiltonian(spec)
        numeric = eigendecompose(H)
        cluster = [p.vector for p in numeric if abs(p.value + 1) < 1e-7 * np.linalg.norm(H)]
        assert len(cluster) == 5
        analytic = [m.site_values for m in full_analytic_spectrum(spec).modes[1:]]
        dist = projector_distance(subspace_projector(cluster), subspace_projector(analytic))
        assert dist < 1e-10

    def test_orthogonal_spans_are_far(self):
        p = subspace_projector([np.array([1, 0, 0], dtype=complex)])
        q = subspace_projector([np.array([0, 1, 0], dtype=complex)])
        assert projector_distance(p, q) == pytest.approx(1.0, abs=1e-12)


class TestOracleEquivalence:
    def test_random_specs_agree(self):
        rng = np.random.default_rng(27)
        for _ in range(15):
            spec = random_valid_spec(rng)
            H = assemble_hamiltonian(spec)
            hnorm = np.linalg.norm(H)
            analytic = full_analytic_spectrum(spec)
            numeric = eigendecompose(H)
            assert match_spectra(analytic, numeric).max_distance <= 1e-9 * hnorm
            assert max(residual(H, m) for m in analytic) <= 1e-10
