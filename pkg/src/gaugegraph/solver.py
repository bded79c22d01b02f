"""Independent numerical oracle: dense complex eigendecomposition and set matching.

Everything the analytic closed forms claim is confirmed here against LAPACK
(`numpy.linalg.eig`) plus an optimal eigenvalue-set matcher, so the two
routes to every spectrum stay independent.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
import scipy.optimize
import scipy.sparse
import scipy.sparse.csgraph

from .errors import SolverError, UsageError

__all__ = [
    "EigenPair",
    "Spectrum",
    "MatchReport",
    "eigendecompose",
    "residual",
    "match_spectra",
    "subspace_projector",
    "projector_distance",
    "DEFAULT_TOL",
    "SIZE_CAP",
]

DEFAULT_TOL = 1e-9
SIZE_CAP = 512
EXACT_MATCH_CAP = 64


@dataclass(frozen=True, eq=False)
class EigenPair:
    """One numeric eigenpair; vector has unit 2-norm and its largest-magnitude
    entry is rotated to the positive real axis so runs are comparable."""

    value: complex
    vector: np.ndarray
    residual: float


@dataclass(frozen=True, eq=False)
class Spectrum:
    """An ordered set of modes, each exposing .value (and usually .vector)."""

    modes: tuple
    source: str = "numeric"    # "numeric" | "analytic"
    ordering: str = "by_im"    # "by_im" | "by_abs" | "by_re" | "by_winding"

    def __len__(self):
        return len(self.modes)

    def __iter__(self):
        return iter(self.modes)

    @property
    def values(self) -> np.ndarray:
        return np.array([m.value for m in self.modes], dtype=complex)

    @property
    def labels(self) -> tuple:
        """Winding labels when the modes carry them, else positions."""
        return tuple(getattr(m, "winding", i) for i, m in enumerate(self.modes))

    def sorted_by(self, ordering: str) -> "Spectrum":
        """A re-ordered copy; orderings: by_im, by_abs, by_re (descending), by_winding."""
        values = self.values
        if ordering == "by_im":
            keys = np.lexsort((-values.real, -values.imag))
        elif ordering == "by_abs":
            keys = np.lexsort((-values.real, -np.abs(values)))
        elif ordering == "by_re":
            keys = np.lexsort((-values.imag, -values.real))
        elif ordering == "by_winding":
            keys = np.argsort(self.labels, kind="stable")
        else:
            raise UsageError(f"unknown ordering {ordering!r}")
        return Spectrum(
            modes=tuple(self.modes[i] for i in keys), source=self.source, ordering=ordering
        )


def _phase_fix(v: np.ndarray) -> np.ndarray:
    v = v / np.linalg.norm(v)
    j = int(np.argmax(np.abs(v)))
    return v * (abs(v[j]) / v[j])


def eigendecompose(H, tol: float = DEFAULT_TOL, cap: int = SIZE_CAP) -> Spectrum:
    """All eigenpairs of a dense complex square matrix, residual-checked.

    Pairs are sorted by descending imaginary part (ties: descending real
    part), each vector normalized and phase-fixed; the result is a pure
    function of the input bits.
    """
    H = np.asarray(H, dtype=complex)
    if H.ndim != 2 or H.shape[0] != H.shape[1]:
        raise UsageError(f"expected a square matrix, got shape {H.shape}")
    n = H.shape[0]
    if n > cap:
        raise UsageError(f"matrix size {n} exceeds the configured cap {cap}")
    try:
        values, vectors = np.linalg.eig(H)
    except np.linalg.LinAlgError as exc:
        raise SolverError(f"eigendecomposition did not converge: {exc}") from exc
    hnorm = np.linalg.norm(H)
    order = np.lexsort((-values.real, -values.imag))
    pairs = []
    for j in order:
        v = _phase_fix(vectors[:, j])
        res = float(np.linalg.norm(H @ v - values[j] * v) / hnorm) if hnorm else 0.0
        if res > tol:
            raise SolverError(
                f"eigenpair residual {res:.3e} exceeds tolerance {tol:.3e}"
            )
        pairs.append(EigenPair(value=complex(values[j]), vector=v, residual=res))
    return Spectrum(modes=tuple(pairs), source="numeric", ordering="by_im")


def residual(H, pair, vector=None) -> float:
    """Relative eigenpair defect ||H v - lambda v||_2 / ||H||_F.

    `pair` may be an EigenPair/AnalyticMode (with .value/.vector) or a bare
    eigenvalue accompanied by `vector`.  The vector is normalized first.
    """
    H = np.asarray(H, dtype=complex)
    if vector is None:
        value, vector = pair.value, pair.vector
    else:
        value = pair
    v = np.asarray(vector, dtype=complex)
    if H.ndim != 2 or H.shape[0] != H.shape[1] or v.shape != (H.shape[0],):
        raise UsageError(f"dimension mismatch: H {H.shape}, vector {v.shape}")
    v = v / np.linalg.norm(v)
    hnorm = np.linalg.norm(H)
    return float(np.linalg.norm(H @ v - complex(value) * v) / hnorm) if hnorm else 0.0


@dataclass(frozen=True)
class MatchReport:
    """Bijection between two equal-size eigenvalue sets."""

    assignment: tuple[tuple[int, int], ...]  # (index in A, index in B)
    max_distance: float
    mean_distance: float


def _values_of(spectrum_or_values) -> np.ndarray:
    vals = getattr(spectrum_or_values, "values", spectrum_or_values)
    return np.asarray(vals, dtype=complex).ravel()


def _bottleneck_assignment(dist: np.ndarray) -> np.ndarray:
    """Column assignment minimizing the largest matched distance.

    Binary-searches the sorted distance values for the smallest feasible
    threshold (perfect bipartite matching), then picks the min-sum matching
    below it for a canonical result.
    """
    n = dist.shape[0]
    levels = np.unique(dist)
    lo, hi = 0, levels.size - 1
    while lo < hi:
        mid = (lo + hi) // 2
        graph = scipy.sparse.csr_matrix(dist <= levels[mid])
        match = scipy.sparse.csgraph.maximum_bipartite_matching(graph, perm_type="column")
        if (match >= 0).all():
            hi = mid
        else:
            lo = mid + 1
    threshold = levels[lo]
    big = max(threshold, 1.0) * n * 1e6
    masked = np.where(dist <= threshold, dist, big)
    _, cols = scipy.optimize.linear_sum_assignment(masked)
    return cols


def _greedy_assignment(dist: np.ndarray) -> np.ndarray:
    n = dist.shape[0]
    cols = np.full(n, -1)
    used = np.zeros(n, dtype=bool)
    order = np.dstack(np.unravel_index(np.argsort(dist, axis=None), dist.shape))[0]
    for i, j in order:
        if cols[i] < 0 and not used[j]:
            cols[i] = j
            used[j] = True
    if (cols < 0).any():
        raise SolverError("greedy spectrum matching failed to produce a bijection")
    return cols


def match_spectra(a, b) -> MatchReport:
    """Minimal-max-distance bijection between two eigenvalue sets.

    Exact bottleneck assignment up to 64 values, greedy above; reports the
    largest and mean matched |lambda_i - mu_j|.
    """
    av, bv = _values_of(a), _values_of(b)
    if av.size != bv.size:
        raise UsageError(f"spectra differ in length: {av.size} vs {bv.size}")
    dist = np.abs(av[:, None] - bv[None, :])
    cols = _bottleneck_assignment(dist) if av.size <= EXACT_MATCH_CAP else _greedy_assignment(dist)
    matched = dist[np.arange(av.size), cols]
    return MatchReport(
        assignment=tuple((int(i), int(j)) for i, j in enumerate(cols)),
        max_distance=float(matched.max(initial=0.0)),
        mean_distance=float(matched.mean()) if matched.size else 0.0,
    )


def subspace_projector(vectors) -> np.ndarray:
    """Orthogonal projector onto the span of the given (column) vectors.

    Eigenvectors inside a degenerate cluster are only defined up to mixing;
    their projector is the well-defined object to compare.
    """
    V = np.column_stack([np.asarray(v, dtype=complex) for v in vectors])
    Q, _ = np.linalg.qr(V)
    return Q @ Q.conj().T


def projector_distance(p, q) -> float:
    """Spectral-norm distance between two projectors (1 = orthogonal spans)."""
    return float(np.linalg.norm(np.asarray(p) - np.asarray(q), 2))
