"""Dimensional extension: Kronecker sums, separable product modes, folded spectra.

Independent ring axes combine as H = H_x (x) I + I (x) H_y (x-major site
ordering), so every pair of axis modes multiplies into a product eigenvector
whose eigenvalue is the plain sum E_wx + E_wy.  One axis's spectrum then
replicates across the other's — spectral folding — and a gauge applied to a
single axis relabels only that axis's winding factor.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import reduce
from itertools import product

import numpy as np

from .analysis import DEFAULT_TIE_TOL, dominance_report
from .analytic import analytic_eigenvalue, analytic_mode_vector
from .errors import UsageError
from .graphs import assemble_hamiltonian

__all__ = [
    "DIMENSION_CAP",
    "FoldingReport",
    "kronecker_sum",
    "assemble_dimensions",
    "separable_mode",
    "separable_value",
    "folded_spectrum",
    "multimode_select",
    "diagonal_labels",
    "folded_norm",
]

DIMENSION_CAP = 4096  # max product of axis sizes for dense assembly


def _check_total(sizes):
    total = int(np.prod(sizes))
    if total > DIMENSION_CAP:
        raise UsageError(
            f"product dimension {total} exceeds the dense-assembly cap {DIMENSION_CAP}"
        )
    return total


def kronecker_sum(matrices) -> np.ndarray:
    """H_1 (x) I (x) ... + ... + I (x) ... (x) H_n, x-major ordering."""
    mats = [np.asarray(m, dtype=complex) for m in matrices]
    if not mats:
        raise UsageError("kronecker_sum needs at least one matrix")
    for m in mats:
        if m.ndim != 2 or m.shape[0] != m.shape[1]:
            raise UsageError(f"kronecker_sum needs square matrices, got shape {m.shape}")
    _check_total([m.shape[0] for m in mats])

    def pairwise(a, b):
        return np.kron(a, np.eye(b.shape[0])) + np.kron(np.eye(a.shape[0]), b)

    return reduce(pairwise, mats)


def assemble_dimensions(specs, allow_invalid: bool = False) -> np.ndarray:
    """Kronecker sum of the per-axis Hamiltonians."""
    return kronecker_sum([assemble_hamiltonian(s, allow_invalid) for s in specs])


def _check_labels(specs, labels):
    if len(labels) != len(specs):
        raise UsageError(f"expected {len(specs)} labels, got {len(labels)}")
    for spec, w in zip(specs, labels):
        if not 0 <= w < spec.sites:
            raise UsageError(f"winding {w} out of range [0, {spec.sites - 1}]")


def separable_mode(specs, labels) -> np.ndarray:
    """Product eigenvector for one winding label per axis (x-major flattening).

    For every label pair it is an exact eigenvector of the Kronecker sum with
    eigenvalue separable_value(specs, labels).
    """
    _check_labels(specs, labels)
    _check_total([s.sites for s in specs])
    vecs = [analytic_mode_vector(spec, w) for spec, w in zip(specs, labels)]
    return reduce(np.kron, vecs)


def separable_value(specs, labels) -> complex:
    """Additive eigenvalue sum_alpha E_{w_alpha}."""
    _check_labels(specs, labels)
    return complex(sum(analytic_eigenvalue(spec, w) for spec, w in zip(specs, labels)))


def folded_norm(specs) -> float:
    """Frobenius norm of the Kronecker sum, computed without assembling it.

    Cross terms vanish because every axis matrix has zero trace.
    """
    sizes = [s.sites for s in specs]
    total = int(np.prod(sizes))
    sq = 0.0
    for i, spec in enumerate(specs):
        h = assemble_hamiltonian(spec)
        sq += (total // sizes[i]) * float(np.linalg.norm(h)) ** 2
    return math.sqrt(sq)


@dataclass(frozen=True)
class FoldingReport:
    """All pairwise-summed axis energies with a deduplicated census."""

    pair_energies: tuple          # ((w_x, w_y, ...), E) for every label combination
    distinct_count: int
    multiplicities: tuple         # (representative E, count), sorted by (re, im)
    lcm_sites: int                # folding claim reference value; reported, not asserted
    dedup_tol: float


def _cluster(values: np.ndarray, tol: float):
    """Union values within `tol` via a sorted sweep on the real part."""
    order = np.lexsort((values.imag, values.real))
    parent = list(range(values.size))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    sv = values[order]
    for a in range(sv.size):
        b = a + 1
        while b < sv.size and sv[b].real - sv[a].real <= tol:
            if abs(sv[b] - sv[a]) <= tol:
                ra, rb = find(order[a]), find(order[b])
                if ra != rb:
                    parent[rb] = ra
            b += 1
    groups = {}
    for i in range(values.size):
        groups.setdefault(find(i), []).append(i)
    return list(groups.values())


def folded_spectrum(specs, dedup_tol: float | None = None) -> FoldingReport:
    """Enumerate every per-axis eigenvalue sum and count distinct values.

    The distinct count is measured under `dedup_tol` (default 1e-8 times the
    Kronecker-sum norm) and reported alongside lcm of the axis sizes.
    """
    specs = list(specs)
    if not specs:
        raise UsageError("folded_spectrum needs at least one axis")
    _check_total([s.sites for s in specs])
    if dedup_tol is None:
        dedup_tol = 1e-8 * folded_norm(specs)
    axis_values = [
        np.array([analytic_eigenvalue(s, w) for w in range(s.sites)]) for s in specs
    ]
    labels = list(product(*[range(s.sites) for s in specs]))
    sums = np.array([sum(av[w] for av, w in zip(axis_values, lab)) for lab in labels])
    clusters = _cluster(sums, dedup_tol)
    reps = sorted(
        ((complex(sums[members[0]]), len(members)) for members in clusters),
        key=lambda item: (item[0].real, item[0].imag),
    )
    return FoldingReport(
        pair_energies=tuple((lab, complex(e)) for lab, e in zip(labels, sums)),
        distinct_count=len(clusters),
        multiplicities=tuple(reps),
        lcm_sites=math.lcm(*[s.sites for s in specs]),
        dedup_tol=float(dedup_tol),
    )


def multimode_select(specs, criterion: str = "max_im", tie_tol: float = DEFAULT_TIE_TOL):
    """Dominance over the folded spectrum; labels are per-axis winding tuples.

    With a Hermitian pure-phase second axis (real axis spectrum) the MaxIm
    winners share one imaginary part and spread across real frequencies,
    one per second-axis mode.
    """
    report = folded_spectrum(specs)
    values = np.array([e for _, e in report.pair_energies])
    labels = [lab for lab, _ in report.pair_energies]
    return dominance_report(
        values, criterion, tie_tol, scale=folded_norm(specs), labels=labels
    )


def diagonal_labels(n: int, specs) -> tuple[int, ...]:
    """Single-index view of a product mode: n -> (n mod N_alpha per axis)."""
    return tuple(n % s.sites for s in specs)
